#include "cdgalab/geomcheck.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

namespace cdgalab {

namespace {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    Matrix c(a.row_count(), b.col_count());
    for (size_t i = 0; i < a.row_count(); ++i)
        for (size_t k = 0; k < a.col_count(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.col_count(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

bool is_minus_identity(const Matrix& m) {
    for (size_t i = 0; i < m.row_count(); ++i)
        for (size_t j = 0; j < m.col_count(); ++j)
            if (m.at(i, j) != (i == j ? Scalar(-1) : Scalar(0))) return false;
    return true;
}

}  // namespace

void AlmostComplexStructure::validate() const {
    if (J.row_count() != J.col_count())
        throw std::invalid_argument("AlmostComplexStructure: matrix not square");
    if (!is_minus_identity(mat_mul(J, J)))
        throw std::invalid_argument("AlmostComplexStructure: J^2 != -Id");
}

void TwoForm::validate() const {
    if (omega.row_count() != omega.col_count())
        throw std::invalid_argument("TwoForm: matrix not square");
    for (size_t i = 0; i < omega.row_count(); ++i)
        for (size_t j = 0; j < omega.col_count(); ++j)
            if (omega.at(i, j) != -omega.at(j, i))
                throw std::invalid_argument("TwoForm: matrix not antisymmetric");
}

TwoForm TwoForm::from_matrix(Matrix m) {
    TwoForm f{std::move(m)};
    f.validate();
    return f;
}

GcaElement TwoForm::to_element(const AlgebraPtr& alg) const {
    size_t n = dim();
    if (alg->generators().size() < n)
        throw std::invalid_argument("TwoForm: algebra has too few generators");
    GcaElement e(alg);
    for (size_t i = 0; i < n; ++i) {
        if (alg->generators()[i].degree != 1)
            throw std::invalid_argument("TwoForm: generator of degree != 1 in range");
        for (size_t j = i + 1; j < n; ++j) {
            if (omega.at(i, j).is_zero()) continue;
            e += omega.at(i, j) * wedge(GcaElement::generator(alg, static_cast<int>(i)),
                                        GcaElement::generator(alg, static_cast<int>(j)));
        }
    }
    return e;
}

TwoForm TwoForm::from_element(const GcaElement& a, size_t n) {
    TwoForm f;
    f.omega = Matrix(n, n);
    for (const auto& [m, coeff] : a.terms()) {
        if (m.factors.size() != 2 || m.factors[0].second != 1 || m.factors[1].second != 1)
            throw std::invalid_argument("TwoForm: element is not a sum of degree-1 pairs");
        size_t i = static_cast<size_t>(m.factors[0].first);
        size_t j = static_cast<size_t>(m.factors[1].first);
        if (i >= n || j >= n) throw std::invalid_argument("TwoForm: generator index out of range");
        f.omega.at(i, j) = coeff;
        f.omega.at(j, i) = -coeff;
    }
    f.validate();
    return f;
}

NijenhuisReport nijenhuis(const LieAlgebraPresentation& lie, const AlmostComplexStructure& j) {
    j.validate();
    if (j.J.row_count() != static_cast<size_t>(lie.dimension))
        throw std::invalid_argument("nijenhuis: dimension mismatch");
    size_t n = static_cast<size_t>(lie.dimension);
    NijenhuisReport rep;
    rep.integrable = true;
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a + 1; b < n; ++b) {
            Vec x(n), y(n);
            x[a] = Scalar(1);
            y[b] = Scalar(1);
            Vec jx = j.apply(x), jy = j.apply(y);
            Vec t = lie.bracket(x, y);
            add_scaled(t, j.apply(lie.bracket(jx, y)), Scalar(1));
            add_scaled(t, j.apply(lie.bracket(x, jy)), Scalar(1));
            add_scaled(t, lie.bracket(jx, jy), Scalar(-1));
            if (!is_zero_vec(t)) rep.integrable = false;
            rep.table[{static_cast<int>(a), static_cast<int>(b)}] = std::move(t);
        }
    }
    return rep;
}

SymplecticReport symplectic_check(const CdgaPtr& c, const TwoForm& omega, int n) {
    omega.validate();
    if (omega.dim() != static_cast<size_t>(2 * n))
        throw std::invalid_argument("symplectic_check: omega must be 2n x 2n");
    if (c->algebra()->generators().size() != static_cast<size_t>(2 * n))
        throw std::invalid_argument("symplectic_check: 2n must match the generator count");
    SymplecticReport rep;
    GcaElement e = omega.to_element(c->algebra());
    rep.closed = c->d(e).is_zero();
    rep.top_power = wedge_power(e, n);
    rep.nondegenerate = !rep.top_power.is_zero();
    bool full_rank = rank(omega.omega) == static_cast<size_t>(2 * n);
    if (rep.nondegenerate != full_rank)
        throw std::logic_error("symplectic_check: omega^n and matrix-rank tests disagree");
    return rep;
}

namespace {

/// Congruence diagonalization P S P^T = diag by symmetric row+column
/// operations. Entries must be rational (sign comparisons).
struct CongruenceDiag {
    std::vector<Scalar> diag;
    Matrix p;
};

CongruenceDiag congruence_diagonalize(Matrix s) {
    size_t n = s.row_count();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!s.at(i, j).is_rational())
                throw std::invalid_argument("definiteness check requires rational entries");
    Matrix p(n, n);
    for (size_t i = 0; i < n; ++i) p.at(i, i) = Scalar(1);

    auto row_add = [&](Matrix& m, size_t dst, size_t src, const Scalar& f) {
        for (size_t j = 0; j < m.col_count(); ++j) m.at(dst, j) += f * m.at(src, j);
    };
    auto col_add = [&](Matrix& m, size_t dst, size_t src, const Scalar& f) {
        for (size_t i = 0; i < m.row_count(); ++i) m.at(i, dst) += f * m.at(i, src);
    };

    for (size_t k = 0; k < n; ++k) {
        if (s.at(k, k).is_zero()) {
            size_t jd = n;
            for (size_t j = k + 1; j < n && jd == n; ++j)
                if (!s.at(j, j).is_zero()) jd = j;
            if (jd < n) {
                std::swap(s.rows[k], s.rows[jd]);
                for (size_t i = 0; i < n; ++i) std::swap(s.at(i, k), s.at(i, jd));
                std::swap(p.rows[k], p.rows[jd]);
            } else {
                size_t jo = n;
                for (size_t j = k + 1; j < n && jo == n; ++j)
                    if (!s.at(k, j).is_zero()) jo = j;
                if (jo == n) continue;  // row/column k already zero on the block
                row_add(s, k, jo, Scalar(1));
                col_add(s, k, jo, Scalar(1));
                row_add(p, k, jo, Scalar(1));
            }
        }
        const Scalar& pivot = s.at(k, k);
        for (size_t j = k + 1; j < n; ++j) {
            if (s.at(j, k).is_zero()) continue;
            Scalar f = -(s.at(j, k) / pivot);
            row_add(s, j, k, f);
            col_add(s, j, k, f);
            row_add(p, j, k, f);
        }
    }
    CongruenceDiag out;
    out.p = std::move(p);
    for (size_t k = 0; k < n; ++k) out.diag.push_back(s.at(k, k));
    return out;
}

bool all_positive(const std::vector<Scalar>& diag) {
    return std::all_of(diag.begin(), diag.end(),
                       [](const Scalar& d) { return d.rational_part().sign() > 0; });
}

Matrix symmetric_part(const Matrix& g) {
    Matrix s(g.row_count(), g.col_count());
    Scalar half = Scalar(1) / Scalar(2);
    for (size_t i = 0; i < g.row_count(); ++i)
        for (size_t j = 0; j < g.col_count(); ++j)
            s.at(i, j) = half * (g.at(i, j) + g.at(j, i));
    return s;
}

}  // namespace

CompatibilityReport compatibility_form(const TwoForm& omega, const AlmostComplexStructure& j) {
    omega.validate();
    j.validate();
    if (omega.dim() != j.J.row_count())
        throw std::invalid_argument("compatibility_form: shape mismatch");
    CompatibilityReport rep;
    rep.g = mat_mul(omega.omega, j.J);
    rep.symmetric = true;
    for (size_t a = 0; a < rep.g.row_count() && rep.symmetric; ++a)
        for (size_t b = 0; b < rep.g.col_count(); ++b)
            if (rep.g.at(a, b) != rep.g.at(b, a)) {
                rep.symmetric = false;
                break;
            }
    rep.positive_definite =
        rep.symmetric && all_positive(congruence_diagonalize(rep.g).diag);
    rep.riemannian = rep.symmetric && rep.positive_definite;
    return rep;
}

TameReport tame_check(const TwoForm& omega, const AlmostComplexStructure& j) {
    omega.validate();
    j.validate();
    Matrix g = mat_mul(omega.omega, j.J);
    auto cd = congruence_diagonalize(symmetric_part(g));
    TameReport rep;
    rep.diagonal = cd.diag;
    rep.tame = true;
    for (size_t k = 0; k < cd.diag.size(); ++k) {
        if (cd.diag[k].rational_part().sign() <= 0) {
            rep.tame = false;
            rep.witness = cd.p.rows[k];
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Fixed points over the Eisenstein lattice Z + Z*zeta, zeta^2 = -1 - zeta.

namespace {

struct EisQ {
    Rational a, b;  // a + b*zeta

    friend EisQ operator+(const EisQ& x, const EisQ& y) { return {x.a + y.a, x.b + y.b}; }
    friend EisQ operator*(const EisQ& x, const EisQ& y) {
        // (a + b z)(c + d z), z^2 = -1 - z
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
};

struct CoordSolution {
    EisQ u;          // point in the fundamental square [0,1)^2
    EisQ translate;  // the lattice element realizing the fixed point
};

/// Solutions of (zeta^e - 1) u = gamma0 + shift, gamma0 over the translate
/// window, with u in [0,1)^2.
std::vector<CoordSolution> solve_coordinate(int exponent, const EisQ& shift, int window) {
    int e = ((exponent % 3) + 3) % 3;
    // zeta^e - 1 = p + q*zeta
    long p = e == 1 ? -1 : -2;
    long q = e == 1 ? 1 : -1;
    // multiplication matrix [[p, -q], [q, p - q]] on the basis (1, zeta)
    Rational det = Rational(p) * Rational(p - q) + Rational(q) * Rational(q);
    std::vector<CoordSolution> out;
    for (long m = -window; m <= window; ++m) {
        for (long n = -window; n <= window; ++n) {
            Rational r1 = Rational(m) + shift.a;
            Rational r2 = Rational(n) + shift.b;
            Rational s = (Rational(p - q) * r1 + Rational(q) * r2) / det;
            Rational t = (Rational(-q) * r1 + Rational(p) * r2) / det;
            if (s >= Rational(0) && s < Rational(1) && t >= Rational(0) && t < Rational(1))
                out.push_back({{s, t}, {Rational(m), Rational(n)}});
        }
    }
    return out;
}

std::vector<CoordSolution> solve_coordinate_checked(int exponent, const EisQ& shift, int window) {
    auto sols = solve_coordinate(exponent, shift, window);
    auto wider = solve_coordinate(exponent, shift, window + 1);
    if (sols.size() != wider.size())
        throw std::runtime_error("count_fixed_points: increase window");
    return sols;
}

}  // namespace

long long count_fixed_points(const LatticeModel& m) {
    for (size_t i = 0; i < m.coords.size(); ++i) {
        const auto& c = m.coords[i];
        if (((c.exponent % 3) + 3) % 3 == 0) return kEntireSpaceFixed;
        if (c.twist) {
            auto [t, v] = *c.twist;
            if (t < 0 || v < 0 || static_cast<size_t>(t) >= i || static_cast<size_t>(v) >= i)
                throw std::invalid_argument(
                    "count_fixed_points: twist must reference earlier coordinates");
        }
    }
    std::vector<CoordSolution> assigned(m.coords.size());
    std::function<long long(size_t)> rec = [&](size_t i) -> long long {
        if (i == m.coords.size()) return 1;
        EisQ shift{Rational(0), Rational(0)};
        if (m.coords[i].twist) {
            auto [t, v] = *m.coords[i].twist;
            shift = assigned[static_cast<size_t>(t)].translate * assigned[static_cast<size_t>(v)].u;
        }
        long long total = 0;
        for (const auto& sol : solve_coordinate_checked(m.coords[i].exponent, shift, m.window)) {
            assigned[i] = sol;
            total += rec(i + 1);
        }
        return total;
    };
    return rec(0);
}

// ---------------------------------------------------------------------------
// Model catalog

namespace {

LieAlgebraPresentation abelian_lie(int n) {
    LieAlgebraPresentation lie;
    lie.dimension = n;
    for (int k = 0; k < n; ++k) lie.structure.emplace_back(n, n);
    return lie;
}

LieAlgebraPresentation kt_lie() {
    // [X1, X2] = -X3
    LieAlgebraPresentation lie = abelian_lie(4);
    lie.structure[2].at(0, 1) = Scalar(-1);
    lie.structure[2].at(1, 0) = Scalar(1);
    return lie;
}

AlmostComplexStructure kt_j() {
    // J X1 = X2, J X2 = -X1, J X3 = X4, J X4 = -X3
    AlmostComplexStructure j;
    j.J = Matrix(4, 4);
    j.J.at(1, 0) = Scalar(1);
    j.J.at(0, 1) = Scalar(-1);
    j.J.at(3, 2) = Scalar(1);
    j.J.at(2, 3) = Scalar(-1);
    j.validate();
    return j;
}

TwoForm kt_omega() {
    // omega = x1^x4 + x2^x3
    Matrix w(4, 4);
    w.at(0, 3) = Scalar(1);
    w.at(3, 0) = Scalar(-1);
    w.at(1, 2) = Scalar(1);
    w.at(2, 1) = Scalar(-1);
    return TwoForm::from_matrix(std::move(w));
}

CdgaPtr heisenberg_c_cdga() {
    std::vector<Generator> gens;
    for (const char* n : {"mu", "nu", "theta", "eta", "mub", "nub", "thetab", "etab"})
        gens.push_back({n, 1});
    auto alg = std::make_shared<const Algebra>(std::move(gens), 12);
    std::vector<GcaElement> d(8, GcaElement::zero(alg));
    d[2] = wedge(GcaElement::generator(alg, 0), GcaElement::generator(alg, 1));   // d theta
    d[6] = wedge(GcaElement::generator(alg, 4), GcaElement::generator(alg, 5));   // d thetab
    return Cdga::create(alg, std::move(d), {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

std::shared_ptr<const GroupAction> z3_action_on(const CdgaPtr& c) {
    Scalar z = Scalar::zeta(12, 4);   // primitive cube root
    Scalar z2 = Scalar::zeta(12, 8);
    const AlgebraPtr& alg = c->algebra();
    // weights on (mu, nu, theta, eta); conjugates carry the conjugate weights
    std::vector<Scalar> w{z, z, z2, z, z2, z2, z, z2};
    std::vector<GcaElement> images;
    for (int i = 0; i < 8; ++i) images.push_back(w[static_cast<size_t>(i)] * GcaElement::generator(alg, i));
    return std::make_shared<const GroupAction>(3, extend_morphism(c, c, std::move(images)));
}

GcaElement omega_m_element(const CdgaPtr& c) {
    const AlgebraPtr& alg = c->algebra();
    auto g = [&](int i) { return GcaElement::generator(alg, i); };
    Scalar i12 = Scalar::zeta(12, 3);  // square root of -1
    return i12 * wedge(g(0), g(4)) + wedge(g(1), g(2)) + wedge(g(5), g(6)) +
           i12 * wedge(g(3), g(7));
}

LatticeModel m_lattice() {
    LatticeModel m;
    // coordinates u1, u2, u3 (Heisenberg, u3 carries the cocycle), u4 (torus)
    m.coords = {{1, std::nullopt},
                {1, std::nullopt},
                {2, std::pair<int, int>{1, 0}},
                {1, std::nullopt}};
    return m;
}

std::map<std::string, ModelBundle> build_catalog() {
    std::map<std::string, ModelBundle> cat;

    {
        ModelBundle kt;
        kt.lie = kt_lie();
        kt.lie->validate_antisymmetry();
        kt.lie->validate_jacobi();
        kt.cdga = chevalley_eilenberg(*kt.lie);
        kt.omega = kt_omega();
        kt.omega_element = kt.omega->to_element(kt.cdga->algebra());
        kt.J = kt_j();
        cat["kt"] = kt;

        ModelBundle ow = kt;
        cat["omega_kt"] = std::move(ow);
    }
    {
        ModelBundle t4;
        t4.lie = abelian_lie(4);
        t4.cdga = chevalley_eilenberg(*t4.lie);
        cat["torus4"] = t4;
        cat["torus2n"] = std::move(t4);
        ModelBundle t8;
        t8.lie = abelian_lie(8);
        t8.cdga = chevalley_eilenberg(*t8.lie);
        cat["torus8"] = std::move(t8);
    }
    {
        CdgaPtr hc = heisenberg_c_cdga();
        auto action = z3_action_on(hc);

        ModelBundle h;
        h.cdga = hc;
        cat["heisenberg_c"] = h;

        ModelBundle act = h;
        act.action = action;
        act.lattice = m_lattice();
        cat["z3_action"] = act;

        ModelBundle om = h;
        om.omega_element = omega_m_element(hc);
        om.omega = TwoForm::from_element(*om.omega_element, 8);
        cat["omega_m"] = std::move(om);

        ModelBundle inv = std::move(act);
        inv.invariant = invariant_subcdga(hc, *action);
        cat["invariant_A"] = std::move(inv);
    }
    return cat;
}

}  // namespace

const ModelBundle& catalog(const std::string& name) {
    static const std::map<std::string, ModelBundle> cat = build_catalog();
    auto it = cat.find(name);
    if (it == cat.end()) throw std::invalid_argument("catalog: unknown model '" + name + "'");
    return it->second;
}

std::vector<std::string> catalog_names() {
    static const std::vector<std::string> names{"kt",          "torus2n",  "torus4",   "torus8",
                                                "heisenberg_c", "z3_action", "omega_kt", "omega_m",
                                                "invariant_A"};
    return names;
}

}  // namespace cdgalab
