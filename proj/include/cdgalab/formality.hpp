// The C+N formality test for minimal algebras and nonformality witness search.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdgalab/homology.hpp"

namespace cdgalab {

struct MinimalityReport {
    bool minimal = false;
    std::string reason;  // set when not minimal
};

/// Minimality: the generator differentials have no linear part and admit a
/// nilpotent ordering (d x_j lands in the span of earlier generators).
MinimalityReport minimality_check(const CdgaPtr& c);

/// Canonical split V = C + N per degree: C = ker(d) on generator combinations,
/// N = least-index generator complement with d injective on it.
struct CnSplit {
    std::vector<GcaElement> C;  // closed degree-homogeneous combinations
    std::vector<GcaElement> N;
};

/// Throws on non-minimal input.
CnSplit cn_split(const CdgaPtr& c);

/// Basis of the degree-k slice of the ideal generated by N, inside the
/// ambient monomial coordinates.
std::vector<GcaElement> ideal_slice(const CdgaPtr& c, const std::vector<GcaElement>& n_vectors,
                                    int k);

/// Basis of the degree-k slice of Lambda(C) (products of C vectors only).
std::vector<GcaElement> lambda_c_slice(const CdgaPtr& c, const std::vector<GcaElement>& c_vectors,
                                       int k);

/// First (deterministic) closed, non-exact element of I(N) in degrees <= up_to,
/// or nullopt. A full-range "none" means the criterion is satisfied for the
/// canonical split; a witness is conclusive non-formality.
std::optional<GcaElement> nonformality_witness(const Cohomology& h, const CnSplit& split,
                                               int up_to_degree);

struct FormalityReport {
    MinimalityReport minimality;
    CnSplit split;
    std::optional<GcaElement> witness;
    std::string verdict;  // "non-formal" | "criterion satisfied for canonical split"
};

FormalityReport formality_report(const Cohomology& h);

}  // namespace cdgalab
