// Lie-algebra-level geometric tensors (Nijenhuis, symplectic, compatibility,
// tameness), the lattice fixed-point counter, and the built-in model catalog.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdgalab/cdga.hpp"
#include "cdgalab/linalg.hpp"

namespace cdgalab {

/// J on the Lie algebra basis, column convention: J(X_j) = sum_i J.at(i,j) X_i.
struct AlmostComplexStructure {
    Matrix J;

    /// Throws unless J^2 = -Id.
    void validate() const;
    Vec apply(const Vec& v) const { return J.apply(v); }
};

/// Antisymmetric matrix omega(X_i, X_j); convertible to and from the
/// degree-2 element sum_{i<j} omega_ij x_i ^ x_j.
struct TwoForm {
    Matrix omega;

    /// Throws unless antisymmetric and square.
    void validate() const;
    size_t dim() const { return omega.row_count(); }

    GcaElement to_element(const AlgebraPtr& alg) const;
    static TwoForm from_element(const GcaElement& a, size_t n);
    static TwoForm from_matrix(Matrix m);
};

struct NijenhuisReport {
    // N_J(X_i, X_j) in basis coordinates, for i < j (0-based)
    std::map<std::pair<int, int>, Vec> table;
    bool integrable = false;
};

/// N_J(X,Y) = [X,Y] + J[JX,Y] + J[X,JY] - [JX,JY], evaluated exactly on all
/// basis pairs. Throws when J^2 != -Id.
NijenhuisReport nijenhuis(const LieAlgebraPresentation& lie, const AlmostComplexStructure& j);

struct SymplecticReport {
    bool closed = false;
    bool nondegenerate = false;
    GcaElement top_power;  // omega^n
};

/// closed <=> d omega = 0; nondegenerate <=> omega^n != 0, cross-checked
/// against full matrix rank (the two must agree). 2n must match the number of
/// degree-1 generators.
SymplecticReport symplectic_check(const CdgaPtr& c, const TwoForm& omega, int n);

struct CompatibilityReport {
    Matrix g;  // g(X_i, X_j) = omega(X_i, J X_j)
    bool symmetric = false;
    bool positive_definite = false;  // of g itself, when symmetric
    bool riemannian = false;
};

CompatibilityReport compatibility_form(const TwoForm& omega, const AlmostComplexStructure& j);

struct TameReport {
    bool tame = false;
    Vec witness;             // x with x^T S x <= 0 when not tame (S = symmetric part of g)
    std::vector<Scalar> diagonal;  // congruence-diagonalized symmetric part
};

/// Tame <=> the symmetric part of g(X,Y) = omega(X,JY) is positive definite
/// (exact congruence diagonalization; all entries must be rational).
TameReport tame_check(const TwoForm& omega, const AlmostComplexStructure& j);

/// One complex coordinate of a lattice model over the Eisenstein lattice
/// Z + Z*zeta (zeta^2 = -1 - zeta). The action multiplies by zeta^exponent.
/// A twist adds the Heisenberg cocycle correction: the coordinate equation
/// picks up + gamma(translate_of) * u(times) on the lattice side.
struct LatticeCoord {
    int exponent = 0;
    std::optional<std::pair<int, int>> twist;  // (translate_of, times)
};

struct LatticeModel {
    std::vector<LatticeCoord> coords;
    int window = 2;  // lattice translate coefficients range over [-window, window]
};

/// Sentinel for an action fixing a whole coordinate (infinitely many points).
inline constexpr long long kEntireSpaceFixed = -1;

/// Counts solutions of rho(g) = gamma . g over the fundamental domain.
/// Throws "increase window" when the enumeration window is not saturated.
long long count_fixed_points(const LatticeModel& m);

struct ModelBundle {
    CdgaPtr cdga;
    std::optional<LieAlgebraPresentation> lie;
    std::shared_ptr<const GroupAction> action;
    std::optional<TwoForm> omega;
    std::optional<GcaElement> omega_element;
    std::optional<AlmostComplexStructure> J;
    std::optional<LatticeModel> lattice;
    std::optional<SubCdga> invariant;
};

/// Built-in pre-validated models: kt, torus4 (alias torus2n), torus8,
/// heisenberg_c, z3_action, omega_kt, omega_m, invariant_A.
const ModelBundle& catalog(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace cdgalab
