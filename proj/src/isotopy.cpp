#include "cdgalab/isotopy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cdgalab::iso {

RealMatrix RealMatrix::identity(size_t dim) {
    RealMatrix m(dim);
    for (size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::transposed() const {
    RealMatrix t(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t.at(j, i) = at(i, j);
    return t;
}

RealMatrix operator*(const RealMatrix& x, const RealMatrix& y) {
    RealMatrix z(x.n);
    for (size_t i = 0; i < x.n; ++i)
        for (size_t k = 0; k < x.n; ++k) {
            double v = x.at(i, k);
            if (v == 0.0) continue;
            for (size_t j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

RealMatrix operator+(const RealMatrix& x, const RealMatrix& y) {
    RealMatrix z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

RealMatrix operator-(const RealMatrix& x, const RealMatrix& y) {
    RealMatrix z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

RealMatrix RealMatrix::scaled(double s) const {
    RealMatrix z = *this;
    for (double& v : z.a) v *= s;
    return z;
}

std::vector<double> RealMatrix::apply(const std::vector<double>& v) const {
    std::vector<double> out(n, 0.0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i] += at(i, j) * v[j];
    return out;
}

double RealMatrix::inf_norm() const {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

double RealMatrix::det() const {
    RealMatrix lu = *this;
    double d = 1.0;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (std::fabs(lu.at(i, k)) > std::fabs(lu.at(piv, k))) piv = i;
        if (lu.at(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(lu.at(k, j), lu.at(piv, j));
            d = -d;
        }
        d *= lu.at(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            double f = lu.at(i, k) / lu.at(k, k);
            for (size_t j = k; j < n; ++j) lu.at(i, j) -= f * lu.at(k, j);
        }
    }
    return d;
}

namespace {

/// Solve D X = N by Gaussian elimination with partial pivoting.
RealMatrix solve_matrix(RealMatrix d, RealMatrix n) {
    size_t m = d.n;
    for (size_t k = 0; k < m; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < m; ++i)
            if (std::fabs(d.at(i, k)) > std::fabs(d.at(piv, k))) piv = i;
        if (d.at(piv, k) == 0.0) throw std::runtime_error("expm: singular Pade denominator");
        if (piv != k) {
            for (size_t j = 0; j < m; ++j) {
                std::swap(d.at(k, j), d.at(piv, j));
                std::swap(n.at(k, j), n.at(piv, j));
            }
        }
        double inv = 1.0 / d.at(k, k);
        for (size_t j = 0; j < m; ++j) {
            d.at(k, j) *= inv;
            n.at(k, j) *= inv;
        }
        for (size_t i = 0; i < m; ++i) {
            if (i == k || d.at(i, k) == 0.0) continue;
            double f = d.at(i, k);
            for (size_t j = 0; j < m; ++j) {
                d.at(i, j) -= f * d.at(k, j);
                n.at(i, j) -= f * n.at(k, j);
            }
        }
    }
    return n;
}

}  // namespace

RealMatrix expm(const RealMatrix& m) {
    // [6/6] diagonal Pade with scaling and squaring
    static const double b[] = {1.0,       1.0 / 2.0,     5.0 / 44.0,    1.0 / 66.0,
                               1.0 / 792, 1.0 / 15840.0, 1.0 / 665280.0};
    int squarings = 0;
    double norm = m.inf_norm() * static_cast<double>(m.n);
    while (norm > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    RealMatrix a = m.scaled(std::ldexp(1.0, -squarings));
    RealMatrix power = RealMatrix::identity(m.n);
    RealMatrix num(m.n), den(m.n);
    for (int k = 0; k <= 6; ++k) {
        num = num + power.scaled(b[k]);
        den = den + power.scaled(k % 2 == 0 ? b[k] : -b[k]);
        if (k < 6) power = power * a;
    }
    RealMatrix r = solve_matrix(den, num);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

bool so_check(const RealMatrix& m, double tol) {
    RealMatrix gram = m.transposed() * m;
    return (gram - RealMatrix::identity(m.n)).inf_norm() <= tol && m.det() > 0.0;
}

double cutoff_rho(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double bx = std::exp(-1.0 / x);
    double b1 = std::exp(-1.0 / (1.0 - x));
    return bx / (bx + b1);
}

namespace {

double smoothstep(double x) {
    x = std::clamp(x, 0.0, 1.0);
    return x * x * x * (x * (6.0 * x - 15.0) + 10.0);
}

void validate_plateaus(const std::vector<double>& junctions, double eps) {
    double prev = 0.0;
    for (double s : junctions) {
        if (s - eps <= prev) throw std::invalid_argument("smoothing: plateau misalignment");
        prev = s + eps;
    }
    if (prev >= 1.0) throw std::invalid_argument("smoothing: plateau misalignment");
}

}  // namespace

double smooth_h(double t, const std::vector<double>& junctions, double epsilon) {
    validate_plateaus(junctions, epsilon);
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    // nodes: (segment start, start value) ... plateaus at the junctions
    double a = 0.0, va = 0.0;
    for (double s : junctions) {
        if (t < s - epsilon)
            return va + (s - va) * smoothstep((t - a) / (s - epsilon - a));
        if (t <= s + epsilon) return s;
        a = s + epsilon;
        va = s;
    }
    return va + (1.0 - va) * smoothstep((t - a) / (1.0 - a));
}

RealMatrix theta_big() {
    RealMatrix m(8);
    double r = 1.0 / std::sqrt(2.0);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 1.0;
    m.at(2, 2) = r;
    m.at(2, 5) = r;
    m.at(3, 3) = r;
    m.at(3, 4) = r;
    m.at(4, 3) = r;
    m.at(4, 4) = -r;
    m.at(5, 2) = r;
    m.at(5, 5) = -r;
    m.at(6, 6) = 1.0;
    m.at(7, 7) = 1.0;
    return m;
}

RealMatrix theta_small() {
    RealMatrix m(4);
    double r = 1.0 / std::sqrt(2.0);
    m.at(0, 0) = r;
    m.at(0, 3) = r;
    m.at(1, 1) = r;
    m.at(1, 2) = r;
    m.at(2, 1) = r;
    m.at(2, 2) = -r;
    m.at(3, 0) = r;
    m.at(3, 3) = -r;
    return m;
}

RealMatrix theta_prime() {
    RealMatrix m(4);
    double r = 1.0 / std::sqrt(2.0);
    m.at(0, 0) = r;
    m.at(0, 3) = -r;
    m.at(1, 1) = r;
    m.at(1, 2) = -r;
    m.at(2, 1) = r;
    m.at(2, 2) = r;
    m.at(3, 0) = r;
    m.at(3, 3) = r;
    return m;
}

RealMatrix p_mat() {
    RealMatrix m(4);
    m.at(0, 3) = 1.0;
    m.at(1, 2) = 1.0;
    m.at(2, 1) = 1.0;
    m.at(3, 0) = 1.0;
    return m;
}

RealMatrix q_mat() {
    RealMatrix m(4);
    m.at(0, 3) = -1.0;
    m.at(1, 2) = -1.0;
    m.at(2, 1) = 1.0;
    m.at(3, 0) = 1.0;
    return m;
}

RealMatrix upsilon() {
    RealMatrix m(4);
    double c = -0.5, s = std::sqrt(3.0) / 2.0;
    m.at(0, 0) = c;
    m.at(0, 1) = -s;
    m.at(1, 0) = s;
    m.at(1, 1) = c;
    m.at(2, 2) = c;
    m.at(2, 3) = s;
    m.at(3, 2) = -s;
    m.at(3, 3) = c;
    return m;
}

namespace {

RealMatrix p1_path(double s) {
    RealMatrix m(4);
    double sn = std::sin(M_PI * s / 2.0), cs = std::cos(M_PI * s / 2.0);
    m.at(0, 2) = sn;
    m.at(0, 3) = cs;
    m.at(1, 2) = cs;
    m.at(1, 3) = -sn;
    m.at(2, 0) = sn;
    m.at(2, 1) = cs;
    m.at(3, 0) = cs;
    m.at(3, 1) = -sn;
    return m;
}

RealMatrix p2_path(double s) {
    RealMatrix m(4);
    double sn = std::sin(M_PI * s / 2.0), cs = std::cos(M_PI * s / 2.0);
    m.at(0, 0) = sn;
    m.at(0, 2) = cs;
    m.at(1, 1) = sn;
    m.at(1, 3) = -cs;
    m.at(2, 0) = cs;
    m.at(2, 2) = -sn;
    m.at(3, 1) = -cs;
    m.at(3, 3) = -sn;
    return m;
}

RealMatrix p3_path(double s) {
    RealMatrix m(4);
    double sn = std::sin(M_PI * s), cs = std::cos(M_PI * s);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 1.0;
    m.at(2, 2) = -cs;
    m.at(2, 3) = sn;
    m.at(3, 2) = -sn;
    m.at(3, 3) = -cs;
    return m;
}

/// P(u) on [0,1]: P1 * P2 * P3 juxtaposed evenly; P(0) = P, P(1) = Id.
RealMatrix p_path(double u) {
    if (u <= 1.0 / 3.0) return p1_path(3.0 * u);
    if (u <= 2.0 / 3.0) return p2_path(3.0 * u - 1.0);
    return p3_path(3.0 * u - 2.0);
}

}  // namespace

MatrixPath build_equivariant_path() {
    MatrixPath path;
    path.junctions = {0.5, 2.0 / 3.0, 5.0 / 6.0};
    path.eval = [](double t) {
        t = std::clamp(t, 0.0, 1.0);
        if (t <= 0.5) return expm(q_mat().scaled(2.0 * t * M_PI / 4.0));
        // theta(s) = P(1 - s) theta', s = 2t - 1
        return p_path(2.0 - 2.0 * t) * theta_prime();
    };
    return path;
}

EquivarianceReport equivariance_scan(const MatrixPath& path, const RealMatrix& u, int samples,
                                     double tol) {
    EquivarianceReport rep;
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
        RealMatrix a = path(t);
        rep.max_commutator = std::max(rep.max_commutator, (a * u - u * a).inf_norm());
    }
    rep.pass = rep.max_commutator <= tol;
    return rep;
}

MatrixPath smooth_reparam(const MatrixPath& path, const SmoothingProfile& profile) {
    validate_plateaus(path.junctions, profile.epsilon);
    MatrixPath out;
    out.junctions = path.junctions;
    out.eval = [inner = path.eval, junctions = path.junctions, eps = profile.epsilon](double t) {
        return inner(smooth_h(t, junctions, eps));
    };
    return out;
}

RealMatrix embed_so4_to_so8(const RealMatrix& m) {
    if (m.n != 4) throw std::invalid_argument("embed_so4_to_so8: need a 4x4 matrix");
    RealMatrix e = RealMatrix::identity(8);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            e.at(i + 2, j + 2) = m.at(i, j);
        }
    return e;
}

Point8 coord_change_theta(const Point8& u) {
    RealMatrix m = theta_big();
    Point8 out{};
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) out[i] += m.at(i, j) * u[j];
    return out;
}

namespace {

double norm8(const Point8& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

Point8 apply8(const RealMatrix& m, const Point8& x) {
    Point8 out{};
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) out[i] += m.at(i, j) * x[j];
    return out;
}

}  // namespace

Point8 local_diffeo_f(const Point8& x, double delta, const MatrixPath& path8,
                      const SmoothingProfile&) {
    if (delta <= 0.0) throw std::invalid_argument("local_diffeo_f: delta must be positive");
    double r = norm8(x);
    if (r > 2.0 * delta / 3.0) return x;
    if (r < delta / 3.0) return apply8(theta_big(), x);
    double t = cutoff_rho((2.0 * delta / 3.0 - r) * 3.0 / delta);
    return apply8(path8(t), x);
}

IsotopyReport run_verification(int samples) {
    IsotopyReport rep;
    auto fail = [&](const std::string& why) {
        if (!rep.detail.empty()) rep.detail += "; ";
        rep.detail += why;
    };

    RealMatrix big = theta_big();
    RealMatrix ups = upsilon();
    if (!so_check(big, 1e-12)) fail("coordinate-change matrix not in SO(8)");
    if (!so_check(ups, 1e-12)) fail("rotation block not in SO(4)");
    if ((ups * ups * ups - RealMatrix::identity(4)).inf_norm() > 1e-12)
        fail("rotation block is not of order 3");
    if ((embed_so4_to_so8(theta_small()) - big).inf_norm() > 1e-12)
        fail("block embedding does not reproduce the 8x8 matrix");
    if ((p_mat() * theta_prime() - theta_small()).inf_norm() > 1e-12)
        fail("theta != P theta'");

    SmoothingProfile profile;
    MatrixPath raw = build_equivariant_path();
    MatrixPath smoothed = smooth_reparam(raw, profile);

    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
        RealMatrix a = smoothed(t);
        RealMatrix gram = a.transposed() * a;
        rep.so_membership =
            std::max(rep.so_membership, (gram - RealMatrix::identity(a.n)).inf_norm());
        if (a.det() <= 0.0) fail("negative determinant on the path");
    }
    if (rep.so_membership > 1e-10) fail("path leaves SO(4)");

    EquivarianceReport eq = equivariance_scan(smoothed, ups, samples, 1e-10);
    rep.equivariance_max = eq.max_commutator;
    if (!eq.pass) fail("path is not equivariant");

    rep.endpoint_error_start = (smoothed(0.0) - RealMatrix::identity(4)).inf_norm();
    rep.endpoint_error_end = (smoothed(1.0) - theta_small()).inf_norm();
    if (rep.endpoint_error_start > 1e-12 || rep.endpoint_error_end > 1e-12)
        fail("endpoint mismatch");

    double step = 1e-4;
    for (double tj : smoothed.junctions) {
        double left = ((smoothed(tj) - smoothed(tj - step)).inf_norm()) / step;
        double right = ((smoothed(tj + step) - smoothed(tj)).inf_norm()) / step;
        double worst = std::max(left, right);
        rep.junction_derivatives.push_back(worst);
        if (worst > 1e-6) fail("nonvanishing junction derivative");
    }

    // shell continuity of f: compare branch formulas at the two shell radii
    MatrixPath path8;
    path8.junctions = smoothed.junctions;
    path8.eval = [inner = smoothed.eval](double t) { return embed_so4_to_so8(inner(t)); };
    double delta = 1.0;
    unsigned long long lcg = 0x9e3779b97f4a7c15ull;
    int shell_samples = 10000;
    for (int i = 0; i < shell_samples; ++i) {
        Point8 dir{};
        double n2 = 0.0;
        for (double& v : dir) {
            lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
            v = static_cast<double>(static_cast<long long>(lcg >> 11)) / (1ll << 52) - 1.0;
            n2 += v * v;
        }
        double n = std::sqrt(n2);
        if (n == 0.0) continue;
        for (double& v : dir) v /= n;
        Point8 outer{}, inner{};
        for (size_t k = 0; k < 8; ++k) {
            outer[k] = dir[k] * 2.0 * delta / 3.0;
            inner[k] = dir[k] * delta / 3.0;
        }
        // outer shell: identity branch vs t = rho(0) = 0 branch
        Point8 mid_at_outer = apply8(path8(0.0), outer);
        double jump = 0.0;
        for (size_t k = 0; k < 8; ++k) jump = std::max(jump, std::fabs(mid_at_outer[k] - outer[k]));
        // inner shell: t = rho(1) = 1 branch vs the constant coordinate change
        Point8 mid_at_inner = apply8(path8(1.0), inner);
        Point8 theta_at_inner = apply8(theta_big(), inner);
        for (size_t k = 0; k < 8; ++k)
            jump = std::max(jump, std::fabs(mid_at_inner[k] - theta_at_inner[k]));
        rep.shell_continuity = std::max(rep.shell_continuity, jump);
    }
    if (rep.shell_continuity > 1e-8) fail("shell discontinuity");

    rep.pass = rep.detail.empty();
    return rep;
}

}  // namespace cdgalab::iso
