#include "cdgalab/homology.hpp"

#include <algorithm>

namespace cdgalab {

const std::vector<GcaElement> CochainComplex::kEmptySlice;

CochainComplex CochainComplex::full(CdgaPtr c) {
    CochainComplex cx;
    cx.cdga_ = std::move(c);
    cx.top_ = cx.cdga_->algebra()->top_degree();
    for (int k = 0; k <= cx.top_; ++k) {
        std::vector<GcaElement> elems;
        for (const auto& m : monomial_basis(*cx.cdga_->algebra(), k))
            elems.push_back(GcaElement::monomial(cx.cdga_->algebra(), m));
        cx.slices_[k] = std::move(elems);
    }
    return cx;
}

CochainComplex CochainComplex::sub(SubCdga s) {
    CochainComplex cx;
    cx.cdga_ = s.ambient;
    cx.is_sub_ = true;
    cx.slices_ = std::move(s.degree_bases);
    cx.top_ = cx.slices_.empty() ? 0 : cx.slices_.rbegin()->first;
    return cx;
}

int CochainComplex::dim(int k) const {
    auto it = slices_.find(k);
    return it == slices_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<GcaElement>& CochainComplex::slice(int k) const {
    auto it = slices_.find(k);
    if (it == slices_.end()) {
        if (k < 0 || k > top_) throw std::out_of_range("CochainComplex: degree out of range");
        return kEmptySlice;
    }
    return it->second;
}

Vec CochainComplex::coords(int k, const GcaElement& a) const {
    const auto& sl = slice(k);
    if (!is_sub_) {
        auto mono = monomial_basis(*cdga_->algebra(), k);
        return coords_in_basis(a, mono);
    }
    auto mono = monomial_basis(*cdga_->algebra(), k);
    auto it = slice_coord_cache_.find(k);
    if (it == slice_coord_cache_.end()) {
        Matrix b(mono.size(), sl.size());
        for (size_t j = 0; j < sl.size(); ++j) {
            Vec col = coords_in_basis(sl[j], mono);
            for (size_t i = 0; i < mono.size(); ++i) b.at(i, j) = col[i];
        }
        it = slice_coord_cache_.emplace(k, std::move(b)).first;
    }
    auto x = solve(it->second, coords_in_basis(a, mono));
    if (!x) throw std::logic_error("CochainComplex: element outside the invariant slice span");
    return *x;
}

GcaElement CochainComplex::from_coords(int k, const Vec& v) const {
    const auto& sl = slice(k);
    if (v.size() != sl.size()) throw std::invalid_argument("CochainComplex: coordinate size mismatch");
    GcaElement out(cdga_->algebra());
    for (size_t i = 0; i < sl.size(); ++i) out += v[i] * sl[i];
    return out;
}

const Matrix& CochainComplex::d_matrix(int k) const {
    auto it = d_cache_.find(k);
    if (it != d_cache_.end()) return it->second;
    const auto& src = slice(k);
    size_t next_dim = static_cast<size_t>(dim(k + 1));
    Matrix m(next_dim, src.size());
    for (size_t j = 0; j < src.size(); ++j) {
        GcaElement dv = cdga_->d(src[j]);
        if (dv.is_zero()) continue;
        if (k + 1 > top_)
            throw std::logic_error("CochainComplex: d escapes the top degree");
        Vec col = coords(k + 1, dv);
        for (size_t i = 0; i < next_dim; ++i) m.at(i, j) = col[i];
    }
    return d_cache_.emplace(k, std::move(m)).first->second;
}

Cohomology::Cohomology(CochainComplex cx) : cx_(std::move(cx)) {
    for (int k = 0; k <= cx_.top_degree(); ++k) {
        Slice s;
        if (k > 0) {
            const Matrix& prev = cx_.d_matrix(k - 1);
            for (size_t j = 0; j < prev.col_count(); ++j) {
                Vec col(prev.row_count());
                for (size_t i = 0; i < prev.row_count(); ++i) col[i] = prev.at(i, j);
                s.image.insert(std::move(col));
            }
        }
        const Matrix& dk = cx_.d_matrix(k);
        auto kernel = kernel_basis(dk);
        s.kernel_dim = kernel.size();
        for (auto& v : kernel) {
            s.image.reduce(v);
            s.quotient.insert(std::move(v));
        }
        slices_.emplace(k, std::move(s));
    }
}

int Cohomology::dim(int k) const {
    auto it = slices_.find(k);
    return it == slices_.end() ? 0 : static_cast<int>(it->second.quotient.dim());
}

std::vector<CohClass> Cohomology::basis(int k) const {
    auto it = slices_.find(k);
    if (it == slices_.end()) {
        if (k < 0 || k > cx_.top_degree())
            throw std::out_of_range("Cohomology: degree out of range");
        return {};
    }
    std::vector<CohClass> out;
    const auto& rows = it->second.quotient.basis();
    for (size_t i = 0; i < rows.size(); ++i) {
        CohClass c;
        c.degree = k;
        c.representative = cx_.from_coords(k, rows[i]);
        c.coords.assign(rows.size(), Scalar());
        c.coords[i] = Scalar(1);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Cohomology::betti() const {
    std::vector<int> out;
    for (int k = 0; k <= cx_.top_degree(); ++k) out.push_back(dim(k));
    return out;
}

std::vector<int> Cohomology::odd_betti_odd_degrees() const {
    std::vector<int> out;
    auto b = betti();
    for (size_t k = 1; k < b.size(); k += 2)
        if (b[k] % 2 != 0) out.push_back(static_cast<int>(k));
    return out;
}

CohClass Cohomology::class_of(const GcaElement& a) const {
    if (a.is_zero()) throw std::invalid_argument("class_of: zero element has no degree; use zero_class");
    auto deg = a.degree();
    if (!deg) throw std::invalid_argument("class_of: element is not homogeneous");
    int k = *deg;
    GcaElement da = cx_.cdga()->d(a);
    if (!da.is_zero())
        throw std::invalid_argument("class_of: element is not closed; d(a) = " + da.to_string());
    auto it = slices_.find(k);
    if (it == slices_.end()) throw std::out_of_range("class_of: degree out of range");
    Vec v = cx_.coords(k, a);
    it->second.image.reduce(v);
    Vec coeffs = it->second.quotient.reduce(v);
    if (!is_zero_vec(v))
        throw std::logic_error("class_of: closed element escapes the cohomology basis");
    CohClass c;
    c.degree = k;
    c.representative = a;
    c.coords = std::move(coeffs);
    return c;
}

CohClass Cohomology::zero_class(int degree) const {
    CohClass c;
    c.degree = degree;
    c.representative = GcaElement::zero(cx_.cdga()->algebra());
    c.coords.assign(static_cast<size_t>(dim(degree)), Scalar());
    return c;
}

CohClass Cohomology::cup(const CohClass& a, const CohClass& b) const {
    GcaElement w = wedge(a.representative, b.representative);
    int deg = a.degree + b.degree;
    if (w.is_zero() || deg > cx_.top_degree()) return zero_class(std::min(deg, cx_.top_degree()));
    return class_of(w);
}

CohClass Cohomology::cup_power(const CohClass& a, int n) const {
    if (n < 0) throw std::invalid_argument("cup_power: negative exponent");
    if (n == 0) return class_of(GcaElement::unit(cx_.cdga()->algebra()));
    CohClass r = a;
    for (int i = 1; i < n; ++i) r = cup(r, a);
    return r;
}

std::pair<size_t, size_t> Cohomology::rank_nullity(int k) const {
    const auto& s = slices_.at(k);
    return {s.kernel_dim, s.image.dim()};
}

bool Cohomology::in_span(const CohClass& v, const std::vector<CohClass>& span) const {
    RowSpace rs;
    for (const auto& c : span) {
        if (c.degree != v.degree) throw std::invalid_argument("in_span: degree mismatch");
        rs.insert(c.coords);
    }
    return rs.contains(v.coords);
}

LefschetzReport lefschetz(const Cohomology& h, const CohClass& omega, int p, int n) {
    if (omega.degree != 2) throw std::invalid_argument("lefschetz: omega must have degree 2");
    if (2 * n != h.complex().top_degree())
        throw std::invalid_argument("lefschetz: 2n must equal the top degree");
    CohClass power = h.cup_power(omega, n - p);
    auto src = h.basis(p);
    size_t dst_dim = static_cast<size_t>(h.dim(2 * n - p));
    LefschetzReport rep;
    rep.matrix = Matrix(dst_dim, src.size());
    for (size_t j = 0; j < src.size(); ++j) {
        CohClass img = h.cup(power, src[j]);
        for (size_t i = 0; i < dst_dim; ++i) rep.matrix.at(i, j) = img.coords[i];
    }
    rep.rank = rank(rep.matrix);
    rep.isomorphism = rep.rank == src.size() && rep.rank == dst_dim;
    return rep;
}

}  // namespace cdgalab
