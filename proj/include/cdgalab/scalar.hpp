// Exact field arithmetic over Q and cyclotomic extensions Q(zeta_n).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdgalab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (cpp_rational keeps the canonical form).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(BigRat v) : v_(std::move(v)) {}

    static Rational parse(const std::string& s);  // "p/q" or "p"

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const { return Rational(BigRat(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    int sign() const { return v_ == 0 ? 0 : (v_ < 0 ? -1 : 1); }
    double to_double() const { return static_cast<double>(v_); }
    std::string to_string() const;

private:
    BigRat v_;
};

int euler_phi(int n);

/// Cyclotomic polynomial Phi_n, monic, coefficients c0..c_{phi(n)}.
const std::vector<Rational>& cyclotomic_polynomial(int n);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}
/// modulo Phi_n. Order 1 is plain Q. Values are immutable in spirit:
/// every operation returns a fresh canonical value.
///
/// Arithmetic between different orders promotes when one order divides
/// the other (zeta_m = zeta_n^{n/m}); otherwise it throws.
class Scalar {
public:
    Scalar() : order_(1), c_(1) {}
    Scalar(long n) : order_(1), c_{Rational(n)} {}
    Scalar(const Rational& r) : order_(1), c_{r} {}
    Scalar(int order, std::vector<Rational> coeffs);

    static Scalar zeta(int n, long power = 1);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_part() const;

    /// Embedding into Q(zeta_n); requires order() | n.
    Scalar promoted(int n) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws on zero.
    Scalar inverse() const;

    /// The field automorphism zeta -> zeta^{n-1} (complex conjugation).
    Scalar conj() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b);  // structural order for maps

    std::string to_string() const;

private:
    int order_;
    std::vector<Rational> c_;  // length phi(order_)

    static std::pair<Scalar, Scalar> aligned(const Scalar& a, const Scalar& b);
};

}  // namespace cdgalab
