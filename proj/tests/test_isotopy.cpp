#include <doctest.h>

#include <cmath>

#include "cdgalab/isotopy.hpp"

using namespace cdgalab::iso;

namespace {

double diff_norm(const RealMatrix& a, const RealMatrix& b) { return (a - b).inf_norm(); }

}  // namespace

TEST_CASE("matrix exponential basics") {
    CHECK(diff_norm(expm(RealMatrix(4)), RealMatrix::identity(4)) < 1e-15);

    // exp(s Q) = cos(s) I + sin(s) Q whenever Q^2 = -I; closed-form oracle
    RealMatrix q = q_mat();
    CHECK(diff_norm(q * q, RealMatrix::identity(4).scaled(-1.0)) < 1e-15);
    for (double s : {0.1, 0.25, 0.5, 0.7853981633974483, 1.0, 1.3}) {
        RealMatrix expected = RealMatrix::identity(4).scaled(std::cos(s)) + q.scaled(std::sin(s));
        CHECK(diff_norm(expm(q.scaled(s)), expected) < 1e-13);
        CHECK(so_check(expm(q.scaled(s)), 1e-12));
    }

    // truncated series oracle on a generic small skew matrix
    RealMatrix a(3);
    a.at(0, 1) = 0.3; a.at(1, 0) = -0.3;
    a.at(0, 2) = -0.2; a.at(2, 0) = 0.2;
    a.at(1, 2) = 0.5; a.at(2, 1) = -0.5;
    RealMatrix series = RealMatrix::identity(3);
    RealMatrix term = RealMatrix::identity(3);
    for (int k = 1; k <= 30; ++k) {
        term = (term * a).scaled(1.0 / k);
        series = series + term;
    }
    CHECK(diff_norm(expm(a), series) < 1e-12);
}

TEST_CASE("special orthogonal membership check") {
    CHECK(so_check(theta_big(), 1e-12));
    CHECK(so_check(upsilon(), 1e-12));
    CHECK(so_check(theta_small(), 1e-12));
    CHECK(so_check(theta_prime(), 1e-12));
    RealMatrix reflect = RealMatrix::identity(4);
    reflect.at(3, 3) = -1.0;  // determinant -1
    CHECK_FALSE(so_check(reflect, 1e-12));
    CHECK_FALSE(so_check(RealMatrix::identity(4).scaled(2.0), 1e-12));
}

TEST_CASE("the rotation block has order three") {
    RealMatrix u = upsilon();
    CHECK(diff_norm(u * u * u, RealMatrix::identity(u.n)) < 1e-12);
    CHECK(diff_norm(u, RealMatrix::identity(u.n)) > 0.5);
}

TEST_CASE("piecewise path endpoints and junction continuity") {
    MatrixPath path = build_equivariant_path();
    REQUIRE(path.junctions.size() == 3);
    CHECK(path.junctions[0] == doctest::Approx(0.5));
    CHECK(path.junctions[1] == doctest::Approx(2.0 / 3.0));
    CHECK(path.junctions[2] == doctest::Approx(5.0 / 6.0));

    CHECK(diff_norm(path(0.0), RealMatrix::identity(4)) < 1e-13);
    CHECK(diff_norm(path(1.0), theta_small()) < 1e-13);
    // at the first junction the exponential arc reaches theta'
    CHECK(diff_norm(path(0.5), theta_prime()) < 1e-13);
    // two-sided limits agree at every junction
    for (double s : path.junctions)
        CHECK(diff_norm(path(s - 1e-9), path(s + 1e-9)) < 1e-6);
    // path values stay in SO(4) throughout
    for (int i = 0; i <= 100; ++i) CHECK(so_check(path(i / 100.0), 1e-10));
}

TEST_CASE("the path commutes with the order-three rotation") {
    MatrixPath path = build_equivariant_path();
    auto rep = equivariance_scan(path, upsilon(), 1000, 1e-10);
    CHECK(rep.pass);
    CHECK(rep.max_commutator <= 1e-10);

    // a generic rotation does not commute with the path
    RealMatrix generic(4);
    generic.at(0, 0) = 1.0; generic.at(1, 2) = 1.0;
    generic.at(2, 1) = -1.0; generic.at(3, 3) = 1.0;
    CHECK_FALSE(equivariance_scan(path, generic, 100, 1e-10).pass);

    // the identity trivially commutes
    CHECK(equivariance_scan(path, RealMatrix::identity(4), 100, 1e-10).pass);
}

TEST_CASE("smoothing freezes the junctions and keeps the image") {
    MatrixPath path = build_equivariant_path();
    SmoothingProfile profile;
    MatrixPath smooth = smooth_reparam(path, profile);

    CHECK(diff_norm(smooth(0.0), path(0.0)) < 1e-13);
    CHECK(diff_norm(smooth(1.0), path(1.0)) < 1e-13);

    const double h = 1e-4;
    for (double s : path.junctions) {
        // constant on the plateau
        CHECK(diff_norm(smooth(s - profile.epsilon / 2), smooth(s + profile.epsilon / 2)) < 1e-13);
        // one-sided difference quotients vanish: the motion comes to rest
        double left = diff_norm(smooth(s), smooth(s - h)) / h;
        double right = diff_norm(smooth(s + h), smooth(s)) / h;
        CHECK(left < 1e-6);
        CHECK(right < 1e-6);
    }
    // reparametrized values are path values: smooth(t) = path(h(t))
    for (int i = 0; i <= 50; ++i) {
        double t = i / 50.0;
        double ht = smooth_h(t, path.junctions, profile.epsilon);
        CHECK(diff_norm(smooth(t), path(ht)) < 1e-13);
    }

    // overlapping plateaus are rejected
    SmoothingProfile wide;
    wide.epsilon = 0.2;
    CHECK_THROWS(smooth_reparam(path, wide));
}

TEST_CASE("the reparametrization and cutoff are monotone and pinned") {
    CHECK(cutoff_rho(-1.0) == 0.0);
    CHECK(cutoff_rho(0.0) == 0.0);
    CHECK(cutoff_rho(1.0) == 1.0);
    CHECK(cutoff_rho(2.0) == 1.0);
    CHECK(cutoff_rho(0.5) == doctest::Approx(0.5));
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
        double v = cutoff_rho(i / 100.0);
        CHECK(v >= prev - 1e-15);
        prev = v;
    }

    std::vector<double> junctions{0.5};
    CHECK(smooth_h(0.0, junctions, 0.05) == doctest::Approx(0.0));
    CHECK(smooth_h(1.0, junctions, 0.05) == doctest::Approx(1.0));
    CHECK(smooth_h(0.5, junctions, 0.05) == doctest::Approx(0.5));
    CHECK(smooth_h(0.48, junctions, 0.05) == doctest::Approx(0.5));  // on the plateau
    prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double v = smooth_h(i / 200.0, junctions, 0.05);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("embedding into the eight-dimensional rotation group") {
    CHECK(diff_norm(embed_so4_to_so8(RealMatrix::identity(4)), RealMatrix::identity(8)) == 0.0);
    CHECK(diff_norm(embed_so4_to_so8(theta_small()), theta_big()) == 0.0);
    MatrixPath path = build_equivariant_path();
    for (double t : {0.0, 0.3, 0.75, 1.0}) CHECK(so_check(embed_so4_to_so8(path(t)), 1e-12));
}

TEST_CASE("the local diffeomorphism interpolates between identity and the change") {
    MatrixPath path = build_equivariant_path();
    SmoothingProfile profile;
    MatrixPath smooth = smooth_reparam(path, profile);
    MatrixPath path8{[&](double t) { return embed_so4_to_so8(smooth(t)); }, smooth.junctions};

    const double delta = 0.3;
    Point8 far{};
    far[0] = delta;  // |x| = delta > 2 delta / 3: untouched
    Point8 out = local_diffeo_f(far, delta, path8, profile);
    for (int i = 0; i < 8; ++i) CHECK(out[i] == doctest::Approx(far[i]));

    Point8 near{};
    near[2] = delta / 4.0;  // inside the inner shell: the full coordinate change
    Point8 inner = local_diffeo_f(near, delta, path8, profile);
    Point8 expected = coord_change_theta(near);
    for (int i = 0; i < 8; ++i) CHECK(inner[i] == doctest::Approx(expected[i]).epsilon(1e-10));

    // |f(x)| = |x| everywhere: each shell moves by a rotation
    for (double r : {0.05, 0.1, 0.15, 0.2, 0.25, 0.29}) {
        Point8 x{};
        x[1] = r * 0.6;
        x[4] = r * 0.8;
        Point8 y = local_diffeo_f(x, delta, path8, profile);
        double nx = 0, ny = 0;
        for (int i = 0; i < 8; ++i) {
            nx += x[i] * x[i];
            ny += y[i] * y[i];
        }
        CHECK(std::sqrt(ny) == doctest::Approx(std::sqrt(nx)).epsilon(1e-10));
    }

    // continuity across the shell radii
    for (double r : {2.0 * delta / 3.0, delta / 3.0}) {
        Point8 lo{}, hi{};
        lo[3] = r - 1e-9;
        hi[3] = r + 1e-9;
        Point8 flo = local_diffeo_f(lo, delta, path8, profile);
        Point8 fhi = local_diffeo_f(hi, delta, path8, profile);
        for (int i = 0; i < 8; ++i) CHECK(std::abs(flo[i] - fhi[i]) < 1e-6);
    }
}

TEST_CASE("the coordinate change is the displayed orthogonal matrix") {
    Point8 u{1, 0, 0, 0, 0, 0, 0, 0};
    Point8 v = coord_change_theta(u);
    RealMatrix th = theta_big();
    for (int i = 0; i < 8; ++i) CHECK(v[i] == doctest::Approx(th.at(i, 0)));
    // isometry on a generic vector
    Point8 w{0.3, -0.1, 0.7, 0.2, -0.4, 0.5, 0.1, -0.2};
    Point8 tw = coord_change_theta(w);
    double nw = 0, ntw = 0;
    for (int i = 0; i < 8; ++i) {
        nw += w[i] * w[i];
        ntw += tw[i] * tw[i];
    }
    CHECK(ntw == doctest::Approx(nw).epsilon(1e-12));
}

TEST_CASE("the full verification battery passes") {
    IsotopyReport rep = run_verification();
    CHECK(rep.pass);
    CHECK(rep.detail.empty());
    CHECK(rep.so_membership < 1e-12);
    CHECK(rep.equivariance_max < 1e-10);
    CHECK(rep.endpoint_error_start < 1e-12);
    CHECK(rep.endpoint_error_end < 1e-12);
    for (double d : rep.junction_derivatives) CHECK(d < 1e-6);
    CHECK(rep.shell_continuity < 1e-8);
}
