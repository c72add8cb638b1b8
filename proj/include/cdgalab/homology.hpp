// Exact cochain-complex linear algebra: cohomology bases, cup products,
// Betti numbers, Lefschetz maps.
#pragma once

#include <map>
#include <vector>

#include "cdgalab/cdga.hpp"

namespace cdgalab {

/// Degree-graded view of a CDGA (full monomial slices) or of an invariant
/// sub-CDGA (its stored bases). Wedge and d always run ambient-side; sub
/// coordinates come from exact solving against the stored bases.
class CochainComplex {
public:
    static CochainComplex full(CdgaPtr c);
    static CochainComplex sub(SubCdga s);

    const CdgaPtr& cdga() const { return cdga_; }
    int top_degree() const { return top_; }
    int dim(int k) const;
    const std::vector<GcaElement>& slice(int k) const;

    /// Coordinates of an element lying in the degree-k slice span; throws
    /// if it does not (for a sub-complex this is an internal-consistency
    /// failure of the invariant subspace).
    Vec coords(int k, const GcaElement& a) const;
    GcaElement from_coords(int k, const Vec& v) const;

    /// Matrix of d from slice k to slice k+1 (rows indexed by degree k+1).
    const Matrix& d_matrix(int k) const;

private:
    CdgaPtr cdga_;
    int top_ = 0;
    bool is_sub_ = false;
    std::map<int, std::vector<GcaElement>> slices_;
    mutable std::map<int, Matrix> slice_coord_cache_;  // sub only: monomial coords of basis
    mutable std::map<int, Matrix> d_cache_;
    static const std::vector<GcaElement> kEmptySlice;
};

struct CohClass {
    int degree = 0;
    GcaElement representative;  // closed
    Vec coords;                 // in the deterministic cohomology basis
    bool is_zero() const { return is_zero_vec(coords); }
};

/// Deterministic cohomology of a cochain complex. Representatives come from
/// reduced row echelon form with least-index pivots, so class coordinates
/// are reproducible bit for bit.
class Cohomology {
public:
    explicit Cohomology(CochainComplex cx);

    const CochainComplex& complex() const { return cx_; }
    int dim(int k) const;
    std::vector<CohClass> basis(int k) const;

    /// (b_0, ..., b_top).
    std::vector<int> betti() const;
    /// Degrees k with k odd and b_k odd (Kahler obstruction flags).
    std::vector<int> odd_betti_odd_degrees() const;

    /// Throws (carrying d(a)) when a is not closed.
    CohClass class_of(const GcaElement& a) const;
    CohClass zero_class(int degree) const;

    CohClass cup(const CohClass& a, const CohClass& b) const;
    CohClass cup_power(const CohClass& a, int n) const;

    /// Per-degree audit numbers: dim ker d_k, rank d_{k-1}.
    std::pair<size_t, size_t> rank_nullity(int k) const;

    /// True iff the class coordinates lie in the span of the given classes'
    /// coordinate vectors.
    bool in_span(const CohClass& v, const std::vector<CohClass>& span) const;

private:
    struct Slice {
        RowSpace image;              // coboundaries in slice coords
        RowSpace quotient;           // cohomology representatives (echelon)
        size_t kernel_dim = 0;
    };
    CochainComplex cx_;
    std::map<int, Slice> slices_;
};

struct LefschetzReport {
    Matrix matrix;  // H^p -> H^{2n-p} in the cohomology bases
    size_t rank = 0;
    bool isomorphism = false;
};

/// Map a -> [omega]^{n-p} . a. omega must have degree 2 and 2n must be the
/// top degree of the complex.
LefschetzReport lefschetz(const Cohomology& h, const CohClass& omega, int p, int n);

}  // namespace cdgalab
