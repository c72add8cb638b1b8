#include "cdgalab/massey.hpp"

#include <algorithm>

namespace cdgalab {

namespace {

int window_degree(const std::vector<int>& degs, int i, int j) {
    // |alpha_{i,j}| for 1-based i <= j
    int d = 0;
    for (int k = i; k <= j; ++k) d += degs[static_cast<size_t>(k - 1)];
    return d - (j - i);
}

Scalar window_sign(const std::vector<int>& degs, int i, int j) {
    return window_degree(degs, i, j) % 2 == 0 ? Scalar(1) : Scalar(-1);
}

/// Least-index solution of d x = target in the complex, with the seed adding
/// a kernel vector (cyclically) to the particular solution.
GcaElement solve_d(const CochainComplex& cx, int solution_degree, const GcaElement& target,
                   int seed) {
    if (solution_degree < 0 || solution_degree > cx.top_degree()) {
        if (!target.is_zero())
            throw std::logic_error("solve_d: nonzero target outside the complex range");
        return GcaElement::zero(cx.cdga()->algebra());
    }
    const Matrix& d = cx.d_matrix(solution_degree);
    Vec t(d.row_count());
    if (!target.is_zero()) t = cx.coords(solution_degree + 1, target);
    auto x = solve(d, t);
    if (!x) throw std::logic_error("solve_d: coboundary system unsolvable");
    if (seed != 0) {
        auto kernel = kernel_basis(d);
        if (!kernel.empty()) {
            const Vec& offset = kernel[static_cast<size_t>((seed - 1) % static_cast<int>(kernel.size()))];
            add_scaled(*x, offset, Scalar(1));
        }
    }
    return cx.from_coords(solution_degree, *x);
}

CohClass class_from_coords(const Cohomology& h, int degree, const Vec& coords) {
    auto basis = h.basis(degree);
    CohClass c;
    c.degree = degree;
    c.coords = coords;
    c.representative = GcaElement::zero(h.complex().cdga()->algebra());
    for (size_t i = 0; i < basis.size(); ++i)
        c.representative += coords[i] * basis[i].representative;
    return c;
}

}  // namespace

void validate_defining_system(const Cohomology& h, const DefiningSystem& sys,
                              const std::vector<CohClass>& inputs) {
    int t = sys.arity;
    std::vector<int> degs;
    for (const auto& c : inputs) degs.push_back(c.degree);
    for (int i = 1; i <= t; ++i) {
        const GcaElement& diag = sys.at(i, i);
        CohClass cls = h.class_of(diag);
        if (cls.coords != inputs[static_cast<size_t>(i - 1)].coords)
            throw std::logic_error("defining system: [alpha_{i,i}] != a_i at i=" + std::to_string(i));
    }
    for (const auto& [ij, a] : sys.alpha) {
        auto [i, j] = ij;
        if (i == j) continue;
        GcaElement target(h.complex().cdga()->algebra());
        for (int k = i; k < j; ++k)
            target += window_sign(degs, i, k) * wedge(sys.at(i, k), sys.at(k + 1, j));
        if (!(h.complex().cdga()->d(a) == target))
            throw std::logic_error("defining system: window equation fails at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

MasseyResult triple_massey(const Cohomology& h, const CohClass& a, const CohClass& b,
                           const CohClass& c) {
    if (!h.cup(a, b).is_zero() || !h.cup(b, c).is_zero())
        throw std::invalid_argument("triple_massey: product not defined (a.b or b.c nonzero)");
    const CochainComplex& cx = h.complex();
    const GcaElement &alpha = a.representative, &beta = b.representative, &gamma = c.representative;

    GcaElement xi = solve_d(cx, a.degree + b.degree - 1, wedge(alpha, beta), 0);
    GcaElement eta = solve_d(cx, b.degree + c.degree - 1, wedge(beta, gamma), 0);

    Scalar s = (a.degree + 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
    GcaElement value = wedge(xi, gamma) + s * wedge(alpha, eta);

    MasseyResult res;
    res.defined = true;
    res.inputs = {a, b, c};
    res.value = value.is_zero() ? h.zero_class(a.degree + b.degree + c.degree - 1)
                                : h.class_of(value);

    // store the system in the general-formula normalization:
    // d alpha_{12} = (-1)^{|a|} alpha^beta, so alpha_{12} = (-1)^{|a|} xi
    std::vector<int> degs{a.degree, b.degree, c.degree};
    res.system.arity = 3;
    res.system.alpha[{1, 1}] = alpha;
    res.system.alpha[{2, 2}] = beta;
    res.system.alpha[{3, 3}] = gamma;
    res.system.alpha[{1, 2}] = window_sign(degs, 1, 1) * xi;
    res.system.alpha[{2, 3}] = window_sign(degs, 2, 2) * eta;

    // indeterminacy a.H^{|b|+|c|-1} + H^{|a|+|b|-1}.c
    RowSpace span;
    std::vector<CohClass> indet;
    auto collect = [&](const CohClass& v) {
        if (!v.is_zero() && span.insert(v.coords)) {}
    };
    for (const auto& g : h.basis(b.degree + c.degree - 1)) collect(h.cup(a, g));
    for (const auto& g : h.basis(a.degree + b.degree - 1)) collect(h.cup(g, c));
    for (const auto& row : span.basis()) indet.push_back(class_from_coords(h, res.value.degree, row));
    res.indeterminacy = std::move(indet);
    res.nontrivial = !h.in_span(res.value, res.indeterminacy);
    return res;
}

MasseyResult higher_massey(const Cohomology& h, const std::vector<CohClass>& classes, int seed) {
    int t = static_cast<int>(classes.size());
    if (t < 3) throw std::invalid_argument("higher_massey: need at least three classes");
    const CochainComplex& cx = h.complex();
    std::vector<int> degs;
    for (const auto& c : classes) degs.push_back(c.degree);

    DefiningSystem sys;
    sys.arity = t;
    for (int i = 1; i <= t; ++i) sys.alpha[{i, i}] = classes[static_cast<size_t>(i - 1)].representative;

    for (int len = 1; len <= t - 2; ++len) {
        for (int i = 1; i + len <= t; ++i) {
            int j = i + len;
            if (i == 1 && j == t) continue;
            GcaElement target(cx.cdga()->algebra());
            for (int k = i; k < j; ++k)
                target += window_sign(degs, i, k) * wedge(sys.at(i, k), sys.at(k + 1, j));
            if (!cx.cdga()->d(target).is_zero())
                throw std::logic_error("higher_massey: window target is not closed at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
            if (!target.is_zero() && !h.class_of(target).is_zero())
                throw std::invalid_argument("higher_massey: not defined; sub-product <a_" +
                                            std::to_string(i) + ",...,a_" + std::to_string(j) +
                                            "> is obstructed");
            sys.alpha[{i, j}] = solve_d(cx, window_degree(degs, i, j), target, seed);
        }
    }

    GcaElement value(cx.cdga()->algebra());
    for (int k = 1; k < t; ++k)
        value += window_sign(degs, 1, k) * wedge(sys.at(1, k), sys.at(k + 1, t));
    // the value is the would-be d alpha_{1,t}, one degree above that window
    int value_degree = window_degree(degs, 1, t) + 1;

    MasseyResult res;
    res.defined = true;
    res.inputs = classes;
    res.seed = seed;
    res.system = std::move(sys);
    res.value = value.is_zero() ? h.zero_class(value_degree) : h.class_of(value);
    if (!value.is_zero() && value.degree() != value_degree)
        throw std::logic_error("higher_massey: value degree bookkeeping failed");
    return res;
}

WitnessReport witness_certify(const Cohomology& h, const MasseyResult& result, const CohClass& w,
                              int samples) {
    if (result.value.degree + w.degree != h.complex().top_degree())
        throw std::invalid_argument("witness_certify: degrees do not compose to the top degree");
    WitnessReport rep;
    rep.pairing = h.cup(result.value, w);
    bool all_equal = true;
    for (int s = 1; s <= samples; ++s) {
        MasseyResult r = higher_massey(h, result.inputs, result.seed + s);
        CohClass p = h.cup(r.value, w);
        rep.samples.push_back(p);
        if (p.coords != rep.pairing.coords) all_equal = false;
    }
    if (!all_equal) rep.verdict = "inconclusive";
    else rep.verdict = rep.pairing.is_zero() ? "not certified" : "certified nonzero";
    return rep;
}

namespace {

/// alpha = beta + eta with beta in Lambda(C), eta in I(N).
GcaElement ideal_component(const Cohomology& h, const CnSplit& split, const GcaElement& alpha) {
    if (alpha.is_zero()) return alpha;
    auto deg = alpha.degree();
    if (!deg) throw std::invalid_argument("ideal_component: element not homogeneous");
    const CdgaPtr& c = h.complex().cdga();
    auto lc = lambda_c_slice(c, split.C, *deg);
    auto in = ideal_slice(c, split.N, *deg);
    auto mono = monomial_basis(*c->algebra(), *deg);
    Matrix m(mono.size(), lc.size() + in.size());
    for (size_t j = 0; j < lc.size(); ++j) {
        Vec col = coords_in_basis(lc[j], mono);
        for (size_t i = 0; i < mono.size(); ++i) m.at(i, j) = col[i];
    }
    for (size_t j = 0; j < in.size(); ++j) {
        Vec col = coords_in_basis(in[j], mono);
        for (size_t i = 0; i < mono.size(); ++i) m.at(i, lc.size() + j) = col[i];
    }
    auto x = solve(m, coords_in_basis(alpha, mono));
    if (!x) throw std::logic_error("ideal_component: Lambda(C) + I(N) does not span");
    GcaElement eta(c->algebra());
    for (size_t j = 0; j < in.size(); ++j) eta += (*x)[lc.size() + j] * in[j];
    return eta;
}

/// Solve d psi = target with psi constrained to I(N).
GcaElement solve_d_in_ideal(const Cohomology& h, const CnSplit& split, int solution_degree,
                            const GcaElement& target) {
    const CdgaPtr& c = h.complex().cdga();
    auto in = ideal_slice(c, split.N, solution_degree);
    if (in.empty()) {
        if (!target.is_zero())
            throw std::logic_error("solve_d_in_ideal: nonzero target but I(N) slice is empty");
        return GcaElement::zero(c->algebra());
    }
    auto mono = monomial_basis(*c->algebra(), solution_degree + 1);
    Matrix m(mono.size(), in.size());
    for (size_t j = 0; j < in.size(); ++j) {
        GcaElement de = c->d(in[j]);
        if (de.is_zero()) continue;
        Vec col = coords_in_basis(de, mono);
        for (size_t i = 0; i < mono.size(); ++i) m.at(i, j) = col[i];
    }
    Vec t(mono.size());
    if (!target.is_zero()) t = coords_in_basis(target, mono);
    auto x = solve(m, t);
    if (!x) throw std::logic_error("solve_d_in_ideal: closed element of I(N) is not exact in I(N)");
    GcaElement psi(c->algebra());
    for (size_t j = 0; j < in.size(); ++j) psi += (*x)[j] * in[j];
    return psi;
}

}  // namespace

MasseyResult formal_trivialization(const Cohomology& h, const CnSplit& split,
                                   const std::vector<CohClass>& classes) {
    int t = static_cast<int>(classes.size());
    if (t != 3 && t != 4)
        throw std::invalid_argument("formal_trivialization: only t = 3 and t = 4 are supported");
    MasseyResult base = higher_massey(h, classes, 0);
    std::vector<int> degs;
    for (const auto& c : classes) degs.push_back(c.degree);

    DefiningSystem sys;
    sys.arity = t;
    for (int i = 1; i <= t; ++i) sys.alpha[{i, i}] = base.system.at(i, i);
    for (int i = 1; i < t; ++i)
        sys.alpha[{i, i + 1}] = ideal_component(h, split, base.system.at(i, i + 1));
    if (t == 4) {
        GcaElement t13 = window_sign(degs, 1, 2) * wedge(sys.at(1, 2), sys.at(3, 3)) +
                         window_sign(degs, 1, 1) * wedge(sys.at(1, 1), sys.at(2, 3));
        sys.alpha[{1, 3}] = solve_d_in_ideal(h, split, window_degree(degs, 1, 3), t13);
        GcaElement t24 = window_sign(degs, 2, 3) * wedge(sys.at(2, 3), sys.at(4, 4)) +
                         window_sign(degs, 2, 2) * wedge(sys.at(2, 2), sys.at(3, 4));
        sys.alpha[{2, 4}] = solve_d_in_ideal(h, split, window_degree(degs, 2, 4), t24);
    }

    GcaElement value(h.complex().cdga()->algebra());
    for (int k = 1; k < t; ++k)
        value += window_sign(degs, 1, k) * wedge(sys.at(1, k), sys.at(k + 1, t));

    MasseyResult res;
    res.defined = true;
    res.inputs = classes;
    res.system = std::move(sys);
    res.value = value.is_zero() ? h.zero_class(window_degree(degs, 1, t) + 1) : h.class_of(value);
    if (!res.value.is_zero())
        throw std::logic_error("formal_trivialization: value failed to be exact");
    return res;
}

}  // namespace cdgalab
