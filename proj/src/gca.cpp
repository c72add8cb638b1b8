#include "cdgalab/gca.hpp"

#include <algorithm>
#include <sstream>

namespace cdgalab {

Algebra::Algebra(std::vector<Generator> gens, int field_order, std::optional<int> degree_cap)
    : gens_(std::move(gens)), field_order_(field_order), cap_(degree_cap) {
    if (field_order_ <= 0) throw std::invalid_argument("Algebra: field order must be positive");
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree <= 0)
            throw std::invalid_argument("Algebra: generator degree must be positive");
        if (!by_name_.emplace(gens_[i].name, static_cast<int>(i)).second)
            throw std::invalid_argument("Algebra: duplicate generator name '" + gens_[i].name + "'");
        if (gens_[i].degree % 2 == 0) has_even_ = true;
    }
}

int Algebra::generator_index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw std::invalid_argument("Algebra: unknown generator '" + name + "'");
    return it->second;
}

int Algebra::top_degree() const {
    if (has_even_) {
        if (!cap_) throw std::logic_error("Algebra: even generators require a degree cap");
        return *cap_;
    }
    int top = 0;
    for (const auto& g : gens_) top += g.degree;
    if (cap_) top = std::min(top, *cap_);
    return top;
}

int Monomial::degree(const Algebra& alg) const {
    int d = 0;
    for (const auto& [idx, e] : factors) d += alg.generators()[idx].degree * e;
    return d;
}

std::string Monomial::to_string(const Algebra& alg) const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, e] : factors) {
        if (!first) os << "^";
        first = false;
        os << alg.generators()[idx].name;
        if (e > 1) os << "**" << e;
    }
    return os.str();
}

std::pair<int, Monomial> normalize(const Algebra& alg, const std::vector<int>& word) {
    const auto& gens = alg.generators();
    for (int idx : word) {
        if (idx < 0 || idx >= static_cast<int>(gens.size()))
            throw std::invalid_argument("normalize: unknown generator index " + std::to_string(idx));
    }
    // bubble sort counting transpositions of odd-degree factors
    std::vector<int> w = word;
    int sign = 1;
    for (size_t i = 1; i < w.size(); ++i) {
        for (size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
            bool odd_a = gens[w[j - 1]].degree % 2 != 0;
            bool odd_b = gens[w[j]].degree % 2 != 0;
            if (odd_a && odd_b) sign = -sign;
            std::swap(w[j - 1], w[j]);
        }
    }
    Monomial m;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        int e = static_cast<int>(j - i);
        if (gens[w[i]].degree % 2 != 0 && e > 1) return {0, Monomial{}};
        m.factors.emplace_back(w[i], e);
        i = j;
    }
    return {sign, std::move(m)};
}

GcaElement GcaElement::unit(AlgebraPtr alg) {
    GcaElement e(std::move(alg));
    e.terms_.emplace(Monomial{}, Scalar(1));
    return e;
}

GcaElement GcaElement::generator(AlgebraPtr alg, int index) {
    if (index < 0 || index >= static_cast<int>(alg->generators().size()))
        throw std::invalid_argument("GcaElement: generator index out of range");
    GcaElement e(std::move(alg));
    e.terms_.emplace(Monomial{{{index, 1}}}, Scalar(1));
    return e;
}

GcaElement GcaElement::monomial(AlgebraPtr alg, Monomial m, Scalar coeff) {
    GcaElement e(std::move(alg));
    if (!coeff.is_zero()) e.terms_.emplace(std::move(m), std::move(coeff));
    return e;
}

std::optional<int> GcaElement::degree() const {
    if (terms_.empty()) return std::nullopt;
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int dm = m.degree(*alg_);
        if (!d) d = dm;
        else if (*d != dm) return std::nullopt;
    }
    return d;
}

bool GcaElement::is_homogeneous() const { return is_zero() || degree().has_value(); }

void GcaElement::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GcaElement GcaElement::operator-() const {
    GcaElement r(alg_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

namespace {
void check_same_algebra(const GcaElement& a, const GcaElement& b) {
    if (a.algebra() != b.algebra())
        throw std::invalid_argument("GcaElement: operands belong to different algebras");
}
}  // namespace

GcaElement operator+(const GcaElement& a, const GcaElement& b) {
    if (a.is_zero() && !a.algebra()) return b;
    if (b.is_zero() && !b.algebra()) return a;
    check_same_algebra(a, b);
    GcaElement r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

GcaElement operator-(const GcaElement& a, const GcaElement& b) { return a + (-b); }

GcaElement operator*(const Scalar& s, const GcaElement& a) {
    GcaElement r(a.algebra());
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms()) r.add_term(m, s * c);
    return r;
}

bool operator==(const GcaElement& a, const GcaElement& b) {
    return a.terms_ == b.terms_;
}

std::string GcaElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!(c == Scalar(1)) || m.is_unit()) os << "(" << c.to_string() << ")";
        if (!m.is_unit()) {
            if (!(c == Scalar(1))) os << "*";
            os << m.to_string(*alg_);
        }
    }
    return os.str();
}

GcaElement wedge(const GcaElement& a, const GcaElement& b) {
    check_same_algebra(a, b);
    GcaElement r(a.algebra());
    const Algebra& alg = *a.algebra();
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<int> word;
            for (const auto& [idx, e] : ma.factors) word.insert(word.end(), e, idx);
            for (const auto& [idx, e] : mb.factors) word.insert(word.end(), e, idx);
            auto [sign, m] = normalize(alg, word);
            if (sign == 0) continue;
            if (alg.degree_cap() && m.degree(alg) > *alg.degree_cap()) continue;
            Scalar c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

GcaElement wedge_power(const GcaElement& a, int n) {
    if (n < 0) throw std::invalid_argument("wedge_power: negative exponent");
    GcaElement r = GcaElement::unit(a.algebra());
    for (int i = 0; i < n; ++i) r = wedge(r, a);
    return r;
}

namespace {
void enumerate_basis(const Algebra& alg, int k, size_t gen, Monomial& cur, int deg,
                     std::vector<Monomial>& out) {
    if (deg == k) {
        out.push_back(cur);
        return;
    }
    if (gen == alg.generators().size()) return;
    const Generator& g = alg.generators()[gen];
    // exponent 0
    enumerate_basis(alg, k, gen + 1, cur, deg, out);
    int max_e = (g.degree % 2 != 0) ? 1 : (k - deg) / g.degree;
    for (int e = 1; e <= max_e && deg + e * g.degree <= k; ++e) {
        cur.factors.emplace_back(static_cast<int>(gen), e);
        enumerate_basis(alg, k, gen + 1, cur, deg + e * g.degree, out);
        cur.factors.pop_back();
    }
}
}  // namespace

std::vector<Monomial> monomial_basis(const Algebra& alg, int k) {
    if (k < 0) return {};
    if (alg.has_even_generators() && !alg.degree_cap())
        throw std::logic_error("monomial_basis: even generators require a degree cap");
    if (alg.degree_cap() && k > *alg.degree_cap())
        throw std::out_of_range("monomial_basis: degree above cap");
    std::vector<Monomial> out;
    Monomial cur;
    enumerate_basis(alg, k, 0, cur, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cdgalab
