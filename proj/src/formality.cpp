#include "cdgalab/formality.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cdgalab {

MinimalityReport minimality_check(const CdgaPtr& c) {
    const auto& gens = c->algebra()->generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        for (const auto& [m, coeff] : c->d_generator(static_cast<int>(i)).terms()) {
            int len = 0;
            for (const auto& [idx, e] : m.factors) len += e;
            if (len <= 1)
                return {false, "d(" + gens[i].name + ") has a linear part"};
        }
    }
    // greedy nilpotent ordering: place a generator once its differential only
    // involves already placed ones
    std::set<int> placed;
    bool progress = true;
    while (progress && placed.size() < gens.size()) {
        progress = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (placed.count(static_cast<int>(i))) continue;
            bool ok = true;
            for (const auto& [m, coeff] : c->d_generator(static_cast<int>(i)).terms())
                for (const auto& [idx, e] : m.factors)
                    if (!placed.count(idx)) ok = false;
            if (ok) {
                placed.insert(static_cast<int>(i));
                progress = true;
            }
        }
    }
    if (placed.size() < gens.size())
        return {false, "no nilpotent generator ordering exists"};
    return {true, ""};
}

CnSplit cn_split(const CdgaPtr& c) {
    auto min = minimality_check(c);
    if (!min.minimal) throw std::invalid_argument("cn_split: input is not minimal: " + min.reason);

    CnSplit split;
    const auto& gens = c->algebra()->generators();
    std::set<int> degrees;
    for (const auto& g : gens) degrees.insert(g.degree);
    for (int deg : degrees) {
        std::vector<int> idx;
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].degree == deg) idx.push_back(static_cast<int>(i));
        auto target = monomial_basis(*c->algebra(), deg + 1);
        Matrix dmat(target.size(), idx.size());
        for (size_t j = 0; j < idx.size(); ++j) {
            Vec col = coords_in_basis(c->d_generator(idx[j]), target);
            for (size_t i = 0; i < target.size(); ++i) dmat.at(i, j) = col[i];
        }
        // C = ker d on this degree's generator span
        RowSpace c_rows;
        for (const auto& v : kernel_basis(dmat)) {
            Vec w = v;
            c_rows.insert(std::move(w));
            GcaElement e(c->algebra());
            for (size_t j = 0; j < idx.size(); ++j)
                e += v[j] * GcaElement::generator(c->algebra(), idx[j]);
            split.C.push_back(std::move(e));
        }
        // N: least-index generator completion of C
        RowSpace full = c_rows;
        std::vector<size_t> n_cols;
        for (size_t j = 0; j < idx.size(); ++j) {
            Vec e(idx.size());
            e[j] = Scalar(1);
            if (full.insert(std::move(e))) n_cols.push_back(j);
        }
        // d injective on N: columns of dmat at n_cols are independent
        Matrix dn(target.size(), n_cols.size());
        for (size_t j = 0; j < n_cols.size(); ++j)
            for (size_t i = 0; i < target.size(); ++i) dn.at(i, j) = dmat.at(i, n_cols[j]);
        if (rank(dn) != n_cols.size())
            throw std::logic_error("cn_split: d not injective on the chosen complement");
        for (size_t j : n_cols)
            split.N.push_back(GcaElement::generator(c->algebra(), idx[j]));
    }
    return split;
}

std::vector<GcaElement> ideal_slice(const CdgaPtr& c, const std::vector<GcaElement>& n_vectors,
                                    int k) {
    auto mono = monomial_basis(*c->algebra(), k);
    RowSpace span;
    std::vector<GcaElement> out;
    for (const auto& n : n_vectors) {
        auto nd = n.degree();
        if (!nd) continue;
        if (*nd > k) continue;
        for (const auto& m : monomial_basis(*c->algebra(), k - *nd)) {
            GcaElement p = wedge(n, GcaElement::monomial(c->algebra(), m));
            if (p.is_zero()) continue;
            span.insert(coords_in_basis(p, mono));
        }
    }
    for (const auto& row : span.basis()) out.push_back(element_from_coords(c->algebra(), mono, row));
    return out;
}

std::vector<GcaElement> lambda_c_slice(const CdgaPtr& c, const std::vector<GcaElement>& c_vectors,
                                       int k) {
    auto mono = monomial_basis(*c->algebra(), k);
    RowSpace span;
    // enumerate products of the homogeneous C vectors degree by degree
    if (k == 0) return {GcaElement::unit(c->algebra())};
    std::vector<GcaElement> out;
    std::function<void(size_t, const GcaElement&, int)> rec = [&](size_t start,
                                                                  const GcaElement& prod, int deg) {
        if (deg == k) {
            if (!prod.is_zero()) span.insert(coords_in_basis(prod, mono));
            return;
        }
        for (size_t i = start; i < c_vectors.size(); ++i) {
            auto d = c_vectors[i].degree();
            if (!d || deg + *d > k) continue;
            GcaElement next = wedge(prod, c_vectors[i]);
            if (next.is_zero()) continue;
            rec(i + 1, next, deg + *d);
            // even-degree C vectors may repeat
            if (*d % 2 == 0) rec(i, next, deg + *d);
        }
    };
    rec(0, GcaElement::unit(c->algebra()), 0);
    for (const auto& row : span.basis()) out.push_back(element_from_coords(c->algebra(), mono, row));
    return out;
}

std::optional<GcaElement> nonformality_witness(const Cohomology& h, const CnSplit& split,
                                               int up_to_degree) {
    const CdgaPtr& c = h.complex().cdga();
    int top = std::min(up_to_degree, h.complex().top_degree());
    for (int k = 1; k <= top; ++k) {
        auto ideal = ideal_slice(c, split.N, k);
        if (ideal.empty()) continue;
        // kernel of d restricted to the ideal slice
        auto target = k + 1 <= h.complex().top_degree()
                          ? monomial_basis(*c->algebra(), k + 1)
                          : std::vector<Monomial>{};
        Matrix dmat(target.size(), ideal.size());
        for (size_t j = 0; j < ideal.size(); ++j) {
            GcaElement de = c->d(ideal[j]);
            if (de.is_zero()) continue;
            Vec col = coords_in_basis(de, target);
            for (size_t i = 0; i < target.size(); ++i) dmat.at(i, j) = col[i];
        }
        for (const auto& v : kernel_basis(dmat)) {
            GcaElement closed(c->algebra());
            for (size_t j = 0; j < ideal.size(); ++j) closed += v[j] * ideal[j];
            if (closed.is_zero()) continue;
            if (!h.class_of(closed).is_zero()) return closed;
        }
    }
    return std::nullopt;
}

FormalityReport formality_report(const Cohomology& h) {
    FormalityReport rep;
    rep.minimality = minimality_check(h.complex().cdga());
    if (!rep.minimality.minimal) {
        rep.verdict = "not minimal";
        return rep;
    }
    rep.split = cn_split(h.complex().cdga());
    rep.witness = nonformality_witness(h, rep.split, h.complex().top_degree());
    rep.verdict = rep.witness ? "non-formal" : "criterion satisfied for canonical split";
    return rep;
}

}  // namespace cdgalab
