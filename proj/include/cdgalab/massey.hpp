// Triple and higher Massey products: defining systems, values,
// indeterminacy for triples, witness certification for higher products.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdgalab/formality.hpp"
#include "cdgalab/homology.hpp"

namespace cdgalab {

/// alpha[(i,j)] with 1 <= i <= j <= t, (i,j) != (1,t), satisfying
/// d alpha_{i,j} = sum_{k=i}^{j-1} (-1)^{|alpha_{i,k}|} alpha_{i,k} ^ alpha_{k+1,j}.
struct DefiningSystem {
    int arity = 0;
    std::map<std::pair<int, int>, GcaElement> alpha;

    const GcaElement& at(int i, int j) const { return alpha.at({i, j}); }
};

struct MasseyResult {
    bool defined = false;
    std::string obstruction;  // failing sub-product when !defined
    CohClass value;
    DefiningSystem system;
    std::vector<CohClass> indeterminacy;  // subspace basis, triples only
    bool nontrivial = false;              // triples: value outside indeterminacy
    std::vector<CohClass> inputs;
    int seed = 0;
};

/// Checks the defining-system window equations exactly; used in tests and
/// after construction.
void validate_defining_system(const Cohomology& h, const DefiningSystem& sys,
                              const std::vector<CohClass>& inputs);

/// <a,b,c> = [xi.gamma + (-1)^{|a|+1} alpha.eta] with d xi = alpha^beta,
/// d eta = beta^gamma solved deterministically (least-index, free vars 0).
/// Throws when cup(a,b) or cup(b,c) is nonzero.
MasseyResult triple_massey(const Cohomology& h, const CohClass& a, const CohClass& b,
                           const CohClass& c);

/// General t >= 3 product with one deterministically solved defining system;
/// the seed picks an affine offset (kernel vector, cyclically) added to every
/// interior solution. Not-defined obstructions name the failing window.
MasseyResult higher_massey(const Cohomology& h, const std::vector<CohClass>& classes, int seed = 0);

struct WitnessReport {
    std::string verdict;       // "certified nonzero" | "not certified" | "inconclusive"
    CohClass pairing;          // cup(value, w) of the stored system
    std::vector<CohClass> samples;
};

/// Pairs the product value against w for the stored system and `samples`
/// re-seeded systems; certified nonzero iff all pairings agree and are nonzero.
WitnessReport witness_certify(const Cohomology& h, const MasseyResult& result, const CohClass& w,
                              int samples);

/// Defining system whose value lies in the ideal I(N) and is exact,
/// exhibiting triviality for t = 3 and t = 4 given a validated C+N split.
MasseyResult formal_trivialization(const Cohomology& h, const CnSplit& split,
                                   const std::vector<CohClass>& classes);

}  // namespace cdgalab
