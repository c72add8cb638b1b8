// Free graded-commutative algebra on named graded generators.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdgalab/scalar.hpp"

namespace cdgalab {

struct Generator {
    std::string name;
    int degree = 1;
};

/// Descriptor of a free graded-commutative algebra. Immutable once built;
/// elements hold a shared reference.
class Algebra {
public:
    Algebra(std::vector<Generator> gens, int field_order = 1,
            std::optional<int> degree_cap = std::nullopt);

    const std::vector<Generator>& generators() const { return gens_; }
    int generator_index(const std::string& name) const;  // throws on unknown name
    int field_order() const { return field_order_; }
    std::optional<int> degree_cap() const { return cap_; }
    bool has_even_generators() const { return has_even_; }

    /// Top degree of the finite part: sum of odd-generator degrees, or the
    /// cap when even generators are present.
    int top_degree() const;

private:
    std::vector<Generator> gens_;
    std::map<std::string, int> by_name_;
    int field_order_;
    std::optional<int> cap_;
    bool has_even_ = false;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Canonical monomial: factors sorted by generator index, odd generators
/// with exponent exactly 1.
struct Monomial {
    std::vector<std::pair<int, int>> factors;  // (generator index, exponent)

    int degree(const Algebra& alg) const;
    bool is_unit() const { return factors.empty(); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors < b.factors; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }
    std::string to_string(const Algebra& alg) const;
};

/// Sorts a word of generator indices into a canonical monomial. The sign is
/// the Koszul parity of the permutation restricted to odd generators; it is
/// 0 when an odd generator repeats.
std::pair<int, Monomial> normalize(const Algebra& alg, const std::vector<int>& word);

/// Finite scalar combination of canonical monomials.
class GcaElement {
public:
    GcaElement() = default;
    explicit GcaElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static GcaElement zero(AlgebraPtr alg) { return GcaElement(std::move(alg)); }
    static GcaElement unit(AlgebraPtr alg);
    static GcaElement generator(AlgebraPtr alg, int index);
    static GcaElement monomial(AlgebraPtr alg, Monomial m, Scalar coeff = Scalar(1));

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Degree of a homogeneous element; nullopt for 0 or mixed.
    std::optional<int> degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const Scalar& c);

    GcaElement operator-() const;
    friend GcaElement operator+(const GcaElement& a, const GcaElement& b);
    friend GcaElement operator-(const GcaElement& a, const GcaElement& b);
    GcaElement& operator+=(const GcaElement& o) { return *this = *this + o; }
    GcaElement& operator-=(const GcaElement& o) { return *this = *this - o; }
    friend GcaElement operator*(const Scalar& s, const GcaElement& a);

    friend bool operator==(const GcaElement& a, const GcaElement& b);
    friend bool operator!=(const GcaElement& a, const GcaElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    AlgebraPtr alg_;
    std::map<Monomial, Scalar> terms_;  // no zero coefficients stored
};

/// Koszul-signed product. Requires both operands to share an algebra.
GcaElement wedge(const GcaElement& a, const GcaElement& b);

GcaElement wedge_power(const GcaElement& a, int n);

/// Deterministic enumeration of the degree-k monomials, lexicographic by
/// generator index. Requires a degree cap when even generators exist.
std::vector<Monomial> monomial_basis(const Algebra& alg, int k);

}  // namespace cdgalab
