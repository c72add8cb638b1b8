// Differentials, the Chevalley-Eilenberg construction, CDGA morphisms,
// finite-group actions and invariant sub-CDGAs.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdgalab/gca.hpp"
#include "cdgalab/linalg.hpp"

namespace cdgalab {

class Cdga;
using CdgaPtr = std::shared_ptr<const Cdga>;

/// Free CDGA given by a differential on generators. d^2 = 0 is validated at
/// construction on every generator.
class Cdga : public std::enable_shared_from_this<Cdga> {
public:
    /// d_gen[i] is the differential of generator i (may be zero). An empty
    /// conjugation map means no real structure is configured.
    static CdgaPtr create(AlgebraPtr alg, std::vector<GcaElement> d_gen,
                          std::map<int, int> conjugation = {});

    const AlgebraPtr& algebra() const { return alg_; }
    const GcaElement& d_generator(int i) const { return d_gen_[i]; }
    bool has_conjugation() const { return !conj_.empty(); }
    const std::map<int, int>& conjugation() const { return conj_; }

    /// Leibniz extension of the generator differential.
    GcaElement d(const GcaElement& a) const;

    /// Semilinear involution: conjugate scalars, swap paired generators.
    GcaElement conj_element(const GcaElement& a) const;

    /// True iff conj_element(a) == a.
    bool reality_check(const GcaElement& a) const;

    GcaElement parse_element(const std::string& expr) const;

private:
    Cdga(AlgebraPtr alg, std::vector<GcaElement> d_gen, std::map<int, int> conj);
    void validate() const;

    AlgebraPtr alg_;
    std::vector<GcaElement> d_gen_;
    std::map<int, int> conj_;
};

/// Lie algebra by structure constants: [X_i, X_j] = sum_k c[k][i][j] X_k.
struct LieAlgebraPresentation {
    int dimension = 0;
    std::vector<std::string> names;        // optional, defaults to x1..xn
    std::vector<Matrix> structure;         // structure[k].at(i,j) = c^k_{ij}

    const Scalar& c(int k, int i, int j) const { return structure[k].at(i, j); }

    void validate_antisymmetry() const;
    /// Throws naming a violating triple (i,j,k) when Jacobi fails.
    void validate_jacobi() const;
    bool jacobi_holds() const;

    /// [v, w] in coordinates.
    Vec bracket(const Vec& v, const Vec& w) const;
};

/// Chevalley-Eilenberg CDGA of a Lie algebra: d x_k = -sum_{i<j} c^k_{ij} x_i x_j.
/// Vanishing of d^2 is equivalent to the Jacobi identity; both are checked.
CdgaPtr chevalley_eilenberg(const LieAlgebraPresentation& lie, int field_order = 1);

/// Multiplicative-linear CDGA endomorphism given by generator images.
class Morphism {
public:
    const CdgaPtr& source() const { return src_; }
    const CdgaPtr& target() const { return dst_; }
    const std::vector<GcaElement>& generator_images() const { return images_; }

    GcaElement apply(const GcaElement& a) const;

    /// Matrix of the induced map on the degree-k monomial basis.
    Matrix matrix_on_degree(int k) const;

    friend Morphism extend_morphism(CdgaPtr src, CdgaPtr dst, std::vector<GcaElement> images);

private:
    Morphism(CdgaPtr src, CdgaPtr dst, std::vector<GcaElement> images);
    CdgaPtr src_, dst_;
    std::vector<GcaElement> images_;
};

/// Validates homogeneous degrees and the chain-map identity phi(dg) = d(phi g)
/// on every generator; throws naming the witnessing generator otherwise.
Morphism extend_morphism(CdgaPtr src, CdgaPtr dst, std::vector<GcaElement> images);

/// Order-n CDGA automorphism. Validates rho^n = id on generators.
class GroupAction {
public:
    GroupAction(int order, Morphism rho);

    int order() const { return order_; }
    const Morphism& morphism() const { return rho_; }
    GcaElement apply(const GcaElement& a, int power = 1) const;

private:
    int order_;
    Morphism rho_;
};

/// Invariant sub-CDGA held as per-degree bases inside the ambient algebra.
struct SubCdga {
    CdgaPtr ambient;
    std::map<int, std::vector<GcaElement>> degree_bases;

    int dim(int k) const {
        auto it = degree_bases.find(k);
        return it == degree_bases.end() ? 0 : static_cast<int>(it->second.size());
    }
};

/// Fixed subalgebra of a finite-order action: per degree, image of the
/// averaging projector (1/n) sum rho^j, extracted by exact elimination.
SubCdga invariant_subcdga(const CdgaPtr& c, const GroupAction& g);

/// dim of the trivial-character isotypic piece in degree k via the trace
/// formula (1/n) sum_j tr(rho^j); must come out a nonnegative integer.
int invariant_dimension_by_trace(const CdgaPtr& c, const GroupAction& g, int degree);

/// Parses "c1*g^h + c2*g'..." expressions; scalars are rationals, 'i', or
/// powers of 'z'/'zeta' in the algebra's scalar field.
GcaElement parse_element_expr(const AlgebraPtr& alg, const std::string& expr);

/// Coordinates of a (homogeneous) element in a monomial basis; throws when a
/// term falls outside the basis.
Vec coords_in_basis(const GcaElement& a, const std::vector<Monomial>& basis);
GcaElement element_from_coords(const AlgebraPtr& alg, const std::vector<Monomial>& basis,
                               const Vec& coords);

}  // namespace cdgalab
