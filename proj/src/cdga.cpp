#include "cdgalab/cdga.hpp"

#include <algorithm>
#include <sstream>

namespace cdgalab {

Cdga::Cdga(AlgebraPtr alg, std::vector<GcaElement> d_gen, std::map<int, int> conj)
    : alg_(std::move(alg)), d_gen_(std::move(d_gen)), conj_(std::move(conj)) {}

CdgaPtr Cdga::create(AlgebraPtr alg, std::vector<GcaElement> d_gen, std::map<int, int> conjugation) {
    if (d_gen.size() != alg->generators().size())
        throw std::invalid_argument("Cdga: need one differential per generator");
    // a pairing may be given one-sided; close it under reversal before validating
    for (const auto& [a, b] : std::map<int, int>(conjugation)) conjugation.emplace(b, a);
    auto c = CdgaPtr(new Cdga(std::move(alg), std::move(d_gen), std::move(conjugation)));
    c->validate();
    return c;
}

void Cdga::validate() const {
    const auto& gens = alg_->generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        const GcaElement& dg = d_gen_[i];
        if (!dg.is_zero()) {
            if (dg.algebra() != alg_)
                throw std::invalid_argument("Cdga: differential lives in a different algebra");
            auto deg = dg.degree();
            if (!deg || *deg != gens[i].degree + 1)
                throw std::invalid_argument("Cdga: d(" + gens[i].name +
                                            ") is not homogeneous of degree " +
                                            std::to_string(gens[i].degree + 1));
        }
        if (!d(d_gen_[i]).is_zero())
            throw std::invalid_argument("Cdga: d^2 != 0 on generator " + gens[i].name);
    }
    for (const auto& [a, b] : conj_) {
        auto it = conj_.find(b);
        if (it == conj_.end() || it->second != a)
            throw std::invalid_argument("Cdga: conjugation pairing is not involutive");
    }
}

GcaElement Cdga::d(const GcaElement& a) const {
    if (a.algebra() != alg_)
        throw std::invalid_argument("Cdga::d: element belongs to a different algebra");
    GcaElement out(alg_);
    for (const auto& [m, coeff] : a.terms()) {
        // expand the monomial as a word and apply Leibniz factor by factor
        std::vector<int> word;
        for (const auto& [idx, e] : m.factors) word.insert(word.end(), e, idx);
        int prefix_deg = 0;
        for (size_t i = 0; i < word.size(); ++i) {
            const GcaElement& dgi = d_gen_[word[i]];
            if (!dgi.is_zero()) {
                GcaElement piece = GcaElement::unit(alg_);
                for (size_t j = 0; j < i; ++j)
                    piece = wedge(piece, GcaElement::generator(alg_, word[j]));
                piece = wedge(piece, dgi);
                for (size_t j = i + 1; j < word.size(); ++j)
                    piece = wedge(piece, GcaElement::generator(alg_, word[j]));
                Scalar c = coeff;
                if (prefix_deg % 2 != 0) c = -c;
                out += c * piece;
            }
            prefix_deg += alg_->generators()[word[i]].degree;
        }
    }
    return out;
}

GcaElement Cdga::conj_element(const GcaElement& a) const {
    if (conj_.empty()) throw std::logic_error("Cdga: no conjugation configured");
    GcaElement out(alg_);
    for (const auto& [m, coeff] : a.terms()) {
        std::vector<int> word;
        for (const auto& [idx, e] : m.factors) {
            auto it = conj_.find(idx);
            int target = it == conj_.end() ? idx : it->second;
            word.insert(word.end(), e, target);
        }
        auto [sign, cm] = normalize(*alg_, word);
        if (sign == 0) continue;
        Scalar c = coeff.conj();
        if (sign < 0) c = -c;
        out.add_term(cm, c);
    }
    return out;
}

bool Cdga::reality_check(const GcaElement& a) const { return conj_element(a) == a; }

namespace {

// term := [scalar '*']? gen ('^' gen)*  ; element := term (('+'|'-') term)*
// scalar := rational | 'i' | 'z' | 'zeta' | ('z'|'zeta') '^' power
Scalar parse_scalar_token(const std::string& tok, int field_order) {
    if (tok == "i") {
        if (field_order % 4 != 0)
            throw std::invalid_argument("parse: 'i' needs a field containing a 4th root of unity");
        return Scalar::zeta(field_order, field_order / 4);
    }
    std::string base = tok;
    int power = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
        base = tok.substr(0, caret);
        power = std::stoi(tok.substr(caret + 1));
    }
    if (base == "z" || base == "zeta") {
        power %= field_order;
        if (power < 0) power += field_order;
        return power == 0 ? Scalar(1).promoted(field_order) : Scalar::zeta(field_order, power);
    }
    return Scalar(Rational::parse(tok));
}

}  // namespace

GcaElement parse_element_expr(const AlgebraPtr& alg_, const std::string& expr) {
    GcaElement out(alg_);
    std::string s;
    for (char ch : expr)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("parse: empty element expression");
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        size_t end = pos;
        while (end < s.size() && s[end] != '+' && (s[end] != '-' || s[end - 1] == '/')) ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty()) throw std::invalid_argument("parse: empty term in '" + expr + "'");

        Scalar coeff(1);
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = parse_scalar_token(term.substr(0, star), alg_->field_order());
            term = term.substr(star + 1);
        }
        if (sign < 0) coeff = -coeff;
        GcaElement prod = GcaElement::unit(alg_);
        if (term != "1") {
            size_t tp = 0;
            while (tp < term.size()) {
                size_t caret = term.find('^', tp);
                std::string name = term.substr(tp, caret == std::string::npos ? std::string::npos
                                                                              : caret - tp);
                prod = wedge(prod, GcaElement::generator(alg_, alg_->generator_index(name)));
                if (caret == std::string::npos) break;
                tp = caret + 1;
            }
        }
        out += coeff * prod;
    }
    return out;
}

GcaElement Cdga::parse_element(const std::string& expr) const {
    return parse_element_expr(alg_, expr);
}

void LieAlgebraPresentation::validate_antisymmetry() const {
    for (int k = 0; k < dimension; ++k)
        for (int i = 0; i < dimension; ++i)
            for (int j = 0; j < dimension; ++j)
                if (!(c(k, i, j) == -c(k, j, i)))
                    throw std::invalid_argument(
                        "Lie algebra: structure constants not antisymmetric at (i,j,k)=(" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                        std::to_string(k + 1) + ")");
}

Vec LieAlgebraPresentation::bracket(const Vec& v, const Vec& w) const {
    Vec out(dimension);
    for (int i = 0; i < dimension; ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < dimension; ++j) {
            if (w[j].is_zero()) continue;
            Scalar f = v[i] * w[j];
            for (int k = 0; k < dimension; ++k) {
                if (!c(k, i, j).is_zero()) out[k] += f * c(k, i, j);
            }
        }
    }
    return out;
}

void LieAlgebraPresentation::validate_jacobi() const {
    for (int i = 0; i < dimension; ++i)
        for (int j = i + 1; j < dimension; ++j)
            for (int k = j + 1; k < dimension; ++k) {
                Vec ei(dimension), ej(dimension), ek(dimension);
                ei[i] = Scalar(1);
                ej[j] = Scalar(1);
                ek[k] = Scalar(1);
                Vec sum = bracket(ei, bracket(ej, ek));
                Vec t2 = bracket(ej, bracket(ek, ei));
                Vec t3 = bracket(ek, bracket(ei, ej));
                for (int l = 0; l < dimension; ++l) sum[l] += t2[l] + t3[l];
                if (!is_zero_vec(sum))
                    throw std::invalid_argument("Lie algebra: Jacobi identity fails on (X" +
                                                std::to_string(i + 1) + ",X" + std::to_string(j + 1) +
                                                ",X" + std::to_string(k + 1) + ")");
            }
}

bool LieAlgebraPresentation::jacobi_holds() const {
    try {
        validate_jacobi();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

CdgaPtr chevalley_eilenberg(const LieAlgebraPresentation& lie, int field_order) {
    lie.validate_antisymmetry();
    lie.validate_jacobi();
    std::vector<Generator> gens;
    for (int i = 0; i < lie.dimension; ++i) {
        std::string name = i < static_cast<int>(lie.names.size()) ? lie.names[i]
                                                                  : "x" + std::to_string(i + 1);
        gens.push_back({name, 1});
    }
    auto alg = std::make_shared<const Algebra>(std::move(gens), field_order);
    std::vector<GcaElement> d_gen;
    for (int k = 0; k < lie.dimension; ++k) {
        GcaElement dk(alg);
        for (int i = 0; i < lie.dimension; ++i)
            for (int j = i + 1; j < lie.dimension; ++j) {
                const Scalar& ck = lie.c(k, i, j);
                if (ck.is_zero()) continue;
                dk += (-ck) * wedge(GcaElement::generator(alg, i), GcaElement::generator(alg, j));
            }
        d_gen.push_back(std::move(dk));
    }
    return Cdga::create(std::move(alg), std::move(d_gen));
}

Morphism::Morphism(CdgaPtr src, CdgaPtr dst, std::vector<GcaElement> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {}

GcaElement Morphism::apply(const GcaElement& a) const {
    if (a.algebra() != src_->algebra())
        throw std::invalid_argument("Morphism: element not in the source algebra");
    GcaElement out(dst_->algebra());
    for (const auto& [m, coeff] : a.terms()) {
        GcaElement prod = GcaElement::unit(dst_->algebra());
        for (const auto& [idx, e] : m.factors)
            for (int r = 0; r < e; ++r) prod = wedge(prod, images_[idx]);
        out += coeff * prod;
    }
    return out;
}

Matrix Morphism::matrix_on_degree(int k) const {
    auto src_basis = monomial_basis(*src_->algebra(), k);
    auto dst_basis = monomial_basis(*dst_->algebra(), k);
    Matrix m(dst_basis.size(), src_basis.size());
    for (size_t j = 0; j < src_basis.size(); ++j) {
        GcaElement img = apply(GcaElement::monomial(src_->algebra(), src_basis[j]));
        Vec col = coords_in_basis(img, dst_basis);
        for (size_t i = 0; i < dst_basis.size(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

Morphism extend_morphism(CdgaPtr src, CdgaPtr dst, std::vector<GcaElement> images) {
    const auto& gens = src->algebra()->generators();
    if (images.size() != gens.size())
        throw std::invalid_argument("extend_morphism: need one image per generator");
    for (size_t i = 0; i < gens.size(); ++i) {
        if (images[i].is_zero()) continue;
        auto deg = images[i].degree();
        if (!deg || *deg != gens[i].degree)
            throw std::invalid_argument("extend_morphism: image of " + gens[i].name +
                                        " is not homogeneous of degree " +
                                        std::to_string(gens[i].degree));
    }
    Morphism phi(src, dst, std::move(images));
    for (size_t i = 0; i < gens.size(); ++i) {
        GcaElement lhs = phi.apply(src->d_generator(static_cast<int>(i)));
        GcaElement rhs = dst->d(phi.generator_images()[i]);
        if (!(lhs == rhs))
            throw std::invalid_argument("extend_morphism: chain-map identity fails on generator " +
                                        gens[i].name);
    }
    return phi;
}

GroupAction::GroupAction(int order, Morphism rho) : order_(order), rho_(std::move(rho)) {
    if (order_ <= 0) throw std::invalid_argument("GroupAction: order must be positive");
    if (rho_.source() != rho_.target())
        throw std::invalid_argument("GroupAction: morphism must be an endomorphism");
    const auto& gens = rho_.source()->algebra()->generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        GcaElement g = GcaElement::generator(rho_.source()->algebra(), static_cast<int>(i));
        GcaElement cur = g;
        for (int j = 0; j < order_; ++j) cur = rho_.apply(cur);
        if (!(cur == g))
            throw std::invalid_argument("GroupAction: rho^n != id on generator " + gens[i].name);
    }
}

GcaElement GroupAction::apply(const GcaElement& a, int power) const {
    GcaElement cur = a;
    int p = ((power % order_) + order_) % order_;
    for (int j = 0; j < p; ++j) cur = rho_.apply(cur);
    return cur;
}

SubCdga invariant_subcdga(const CdgaPtr& c, const GroupAction& g) {
    int n = g.order();
    int m = c->algebra()->field_order();
    // zeta_n in Q(zeta_m) iff n | m, or n = 2k with k odd and k | m
    bool has_roots = (n <= 2) || (m % n == 0) || (n % 2 == 0 && (n / 2) % 2 == 1 && m % (n / 2) == 0);
    if (!has_roots)
        throw std::invalid_argument("invariant_subcdga: scalar field lacks the required roots of unity");

    SubCdga sub;
    sub.ambient = c;
    int top = c->algebra()->top_degree();
    Scalar inv_n = Scalar(Rational(BigInt(1), BigInt(n)));
    for (int k = 0; k <= top; ++k) {
        auto basis = monomial_basis(*c->algebra(), k);
        RowSpace image;
        std::vector<GcaElement> out;
        for (const auto& mono : basis) {
            GcaElement e = GcaElement::monomial(c->algebra(), mono);
            GcaElement avg(c->algebra());
            GcaElement cur = e;
            for (int j = 0; j < n; ++j) {
                avg += cur;
                cur = g.morphism().apply(cur);
            }
            avg = inv_n * avg;
            if (avg.is_zero()) continue;
            Vec v = coords_in_basis(avg, basis);
            if (image.insert(v)) {
                // keep the echelonized representative for determinism
            }
        }
        for (const auto& row : image.basis())
            out.push_back(element_from_coords(c->algebra(), basis, row));
        sub.degree_bases[k] = std::move(out);
    }

    // validation: invariance, d-closure, spot-check products
    for (const auto& [k, elems] : sub.degree_bases) {
        auto next_basis = (k + 1 <= top) ? monomial_basis(*c->algebra(), k + 1)
                                         : std::vector<Monomial>{};
        RowSpace next_span;
        if (k + 1 <= top)
            for (const auto& e : sub.degree_bases.at(k + 1))
                next_span.insert(coords_in_basis(e, next_basis));
        for (const auto& e : elems) {
            if (!(g.apply(e) == e))
                throw std::logic_error("invariant_subcdga: basis element not invariant");
            GcaElement de = c->d(e);
            if (de.is_zero()) continue;
            if (k + 1 > top || !next_span.contains(coords_in_basis(de, next_basis)))
                throw std::logic_error("invariant_subcdga: d leaves the invariant span");
        }
    }

    // spot-check closure under products on basis pairs
    for (const auto& [k1, elems1] : sub.degree_bases) {
        if (k1 == 0 || k1 > top / 2) continue;
        for (const auto& [k2, elems2] : sub.degree_bases) {
            if (k2 < k1 || k1 + k2 > top) continue;
            auto prod_basis = monomial_basis(*c->algebra(), k1 + k2);
            RowSpace span;
            for (const auto& e : sub.degree_bases.at(k1 + k2))
                span.insert(coords_in_basis(e, prod_basis));
            for (const auto& e1 : elems1)
                for (const auto& e2 : elems2) {
                    GcaElement p = wedge(e1, e2);
                    if (p.is_zero()) continue;
                    if (!span.contains(coords_in_basis(p, prod_basis)))
                        throw std::logic_error("invariant_subcdga: span not closed under wedge");
                }
        }
    }
    return sub;
}

int invariant_dimension_by_trace(const CdgaPtr& c, const GroupAction& g, int degree) {
    int n = g.order();
    Scalar total;
    auto basis = monomial_basis(*c->algebra(), degree);
    for (int j = 0; j < n; ++j) {
        Scalar tr;
        for (size_t b = 0; b < basis.size(); ++b) {
            GcaElement img = g.apply(GcaElement::monomial(c->algebra(), basis[b]), j);
            auto it = img.terms().find(basis[b]);
            if (it != img.terms().end()) tr += it->second;
        }
        total += tr;
    }
    total = total * Scalar(Rational(BigInt(1), BigInt(n)));
    if (!total.is_rational() || !total.rational_part().is_integer())
        throw std::logic_error("invariant_dimension_by_trace: non-integer character average");
    Rational r = total.rational_part();
    return static_cast<int>(r.numerator());
}

Vec coords_in_basis(const GcaElement& a, const std::vector<Monomial>& basis) {
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    Vec v(basis.size());
    for (const auto& [m, c] : a.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::invalid_argument("coords_in_basis: term outside the basis");
        v[it->second] = c;
    }
    return v;
}

GcaElement element_from_coords(const AlgebraPtr& alg, const std::vector<Monomial>& basis,
                               const Vec& coords) {
    if (coords.size() != basis.size())
        throw std::invalid_argument("element_from_coords: size mismatch");
    GcaElement out(alg);
    for (size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], coords[i]);
    return out;
}

}  // namespace cdgalab
