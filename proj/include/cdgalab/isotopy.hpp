// Floating-point verifier for the equivariant-isotopy construction: the
// SO(8) coordinate change, the piecewise path from Id, its smoothing, and
// the shell-wise local diffeomorphism.
#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace cdgalab::iso {

/// Small dense double matrix, row major.
struct RealMatrix {
    size_t n = 0;
    std::vector<double> a;

    RealMatrix() = default;
    explicit RealMatrix(size_t dim) : n(dim), a(dim * dim, 0.0) {}

    static RealMatrix identity(size_t dim);

    double& at(size_t i, size_t j) { return a[i * n + j]; }
    double at(size_t i, size_t j) const { return a[i * n + j]; }

    RealMatrix transposed() const;
    friend RealMatrix operator*(const RealMatrix& x, const RealMatrix& y);
    friend RealMatrix operator+(const RealMatrix& x, const RealMatrix& y);
    friend RealMatrix operator-(const RealMatrix& x, const RealMatrix& y);
    RealMatrix scaled(double s) const;
    std::vector<double> apply(const std::vector<double>& v) const;

    double inf_norm() const;  // max absolute entry
    double det() const;       // LU with partial pivoting
};

/// Scaling-and-squaring matrix exponential with a fixed-order diagonal
/// rational (Pade) approximant.
RealMatrix expm(const RealMatrix& m);

/// ||A^T A - Id||_inf <= tol and det(A) > 0.
bool so_check(const RealMatrix& m, double tol);

/// Evaluator on [0,1] with interior junction parameters where pieces meet.
struct MatrixPath {
    std::function<RealMatrix(double)> eval;
    std::vector<double> junctions;

    RealMatrix operator()(double t) const { return eval(t); }
};

/// Monotone reparametrization with plateaus around each junction, plus the
/// bump-quotient cutoff rho (0 on (-inf,0], 1 on [1,infty)).
struct SmoothingProfile {
    double epsilon = 0.05;  // plateau half-width
};

double cutoff_rho(double x);

/// Reparametrization [0,1] -> [0,1] fixed by the junction list: h(t) = s_i on
/// [s_i - eps, s_i + eps], quintic smoothstep in between, h(0)=0, h(1)=1.
double smooth_h(double t, const std::vector<double>& junctions, double epsilon);

// The displayed constant matrices.
RealMatrix theta_big();    // the 8x8 coordinate-change matrix
RealMatrix theta_small();  // its active 4x4 block
RealMatrix theta_prime();
RealMatrix p_mat();
RealMatrix q_mat();
RealMatrix upsilon();      // the order-3 rotation block

/// exp(sQ) on path time [0,1/2] followed by P(1-s) theta' on [1/2,1];
/// endpoints Id and theta_small, junctions at 1/2, 2/3, 5/6.
MatrixPath build_equivariant_path();

struct EquivarianceReport {
    double max_commutator = 0.0;
    bool pass = false;
};

/// max over samples of ||path(t) U - U path(t)||_inf.
EquivarianceReport equivariance_scan(const MatrixPath& path, const RealMatrix& u, int samples,
                                     double tol);

/// t -> path(h(t)); throws when plateaus overlap or miss a junction.
MatrixPath smooth_reparam(const MatrixPath& path, const SmoothingProfile& profile);

/// Identity on coordinates 0,1,6,7, the 4x4 argument on coordinates 2..5.
RealMatrix embed_so4_to_so8(const RealMatrix& m);

using Point8 = std::array<double, 8>;

/// Identity outside |x| = 2 delta/3, the full coordinate change inside
/// |x| = delta/3, path8 at t = rho((2 delta/3 - |x|) 3/delta) in between.
Point8 local_diffeo_f(const Point8& x, double delta, const MatrixPath& path8,
                      const SmoothingProfile& profile);

/// The real-linear coordinate change itself (matrix theta_big).
Point8 coord_change_theta(const Point8& u);

struct IsotopyReport {
    double so_membership = 0.0;         // max ||A^T A - Id|| over sampled path values
    double equivariance_max = 0.0;      // max commutator with the rotation block
    double endpoint_error_start = 0.0;  // ||path(0) - Id||
    double endpoint_error_end = 0.0;    // ||path(1) - theta||
    std::vector<double> junction_derivatives;  // one-sided difference norms, smoothed path
    double shell_continuity = 0.0;      // max jump of f across shell radii
    bool pass = false;
    std::string detail;
};

/// Runs the whole battery at the documented tolerances.
IsotopyReport run_verification(int samples = 1000);

}  // namespace cdgalab::iso
