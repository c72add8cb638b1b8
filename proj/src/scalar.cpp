#include "cdgalab/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cdgalab {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = BigRat(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

std::string Rational::to_string() const {
    std::string out = numerator().str();
    if (denominator() != 1) out += "/" + denominator().str();
    return out;
}

int euler_phi(int n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<Rational>;  // coefficients, low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// a = q*b + r, deg r < deg b. b nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational());
    Rational lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
    }
    trim(q);
    return {q, a};
}

Poly poly_mod(const Poly& a, const Poly& m) { return poly_divmod(a, m).second; }

std::mutex g_cyclo_mutex;
std::map<int, Poly> g_cyclo_cache;

Poly compute_cyclotomic(int n);

const Poly& cyclotomic_locked(int n) {
    auto it = g_cyclo_cache.find(n);
    if (it == g_cyclo_cache.end())
        it = g_cyclo_cache.emplace(n, compute_cyclotomic(n)).first;
    return it->second;
}

Poly compute_cyclotomic(int n) {
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    Poly xn(n + 1);
    xn[0] = Rational(-1);
    xn[n] = Rational(1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod(xn, cyclotomic_locked(d));
        if (!r.empty()) throw std::logic_error("cyclotomic: inexact division");
        xn = std::move(q);
    }
    return xn;
}

// Extended Euclid in Q[x]: returns (g, u, v) with u*a + v*b = g, g monic gcd.
std::tuple<Poly, Poly, Poly> poly_xgcd(Poly a, Poly b) {
    Poly u0{Rational(1)}, v0, u1, v1{Rational(1)};
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b);
        Poly qu = poly_mul(q, u1), qv = poly_mul(q, v1);
        Poly nu = u0, nv = v0;
        nu.resize(std::max(nu.size(), qu.size()));
        nv.resize(std::max(nv.size(), qv.size()));
        for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
        for (size_t i = 0; i < qv.size(); ++i) nv[i] -= qv[i];
        trim(nu);
        trim(nv);
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    if (!a.empty() && a.back() != Rational(1)) {
        Rational inv = Rational(1) / a.back();
        for (auto& c : a) c *= inv;
        for (auto& c : u0) c *= inv;
        for (auto& c : v0) c *= inv;
    }
    return {a, u0, v0};
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
    if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_locked(n);
}

Scalar::Scalar(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order_ <= 0) throw std::invalid_argument("Scalar: order must be positive");
    size_t phi = static_cast<size_t>(euler_phi(order_));
    if (c_.size() != phi)
        throw std::invalid_argument("Scalar: expected " + std::to_string(phi) +
                                    " coefficients for order " + std::to_string(order_));
}

Scalar Scalar::zeta(int n, long power) {
    if (n <= 0) throw std::invalid_argument("Scalar::zeta: order must be positive");
    long k = ((power % n) + n) % n;
    const Poly& phi = cyclotomic_polynomial(n);
    Poly p(static_cast<size_t>(k) + 1);
    p[static_cast<size_t>(k)] = Rational(1);
    p = poly_mod(p, phi);
    p.resize(phi.size() - 1);
    return Scalar(n, std::move(p));
}

bool Scalar::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Scalar::rational_part() const {
    if (!is_rational()) throw std::logic_error("Scalar: not rational");
    return c_.empty() ? Rational() : c_[0];
}

Scalar Scalar::promoted(int n) const {
    if (n == order_) return *this;
    if (n <= 0 || n % order_ != 0)
        throw std::invalid_argument("Scalar: cannot promote order " + std::to_string(order_) +
                                    " into Q(zeta_" + std::to_string(n) + ")");
    int step = n / order_;
    const Poly& phi = cyclotomic_polynomial(n);
    Poly raw(static_cast<size_t>(n), Rational());
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        raw[(k * static_cast<size_t>(step)) % static_cast<size_t>(n)] += c_[k];
    }
    Poly p = poly_mod(raw, phi);
    p.resize(phi.size() - 1);
    return Scalar(n, std::move(p));
}

std::pair<Scalar, Scalar> Scalar::aligned(const Scalar& a, const Scalar& b) {
    if (a.order_ == b.order_) return {a, b};
    if (b.order_ % a.order_ == 0) return {a.promoted(b.order_), b};
    if (a.order_ % b.order_ == 0) return {a, b.promoted(a.order_)};
    throw std::invalid_argument("Scalar: order mismatch (" + std::to_string(a.order_) + " vs " +
                                std::to_string(b.order_) + ")");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Scalar operator+(const Scalar& a0, const Scalar& b0) {
    auto [a, b] = Scalar::aligned(a0, b0);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Scalar operator-(const Scalar& a0, const Scalar& b0) {
    auto [a, b] = Scalar::aligned(a0, b0);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

Scalar operator*(const Scalar& a0, const Scalar& b0) {
    auto [a, b] = Scalar::aligned(a0, b0);
    const Poly& phi = cyclotomic_polynomial(a.order_);
    Poly p = poly_mod(poly_mul(a.c_, b.c_), phi);
    p.resize(phi.size() - 1);
    return Scalar(a.order_, std::move(p));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("Scalar: inverse of zero");
    const Poly& phi = cyclotomic_polynomial(order_);
    Poly a = c_;
    trim(a);
    auto [g, u, v] = poly_xgcd(a, phi);
    (void)v;
    if (g.size() != 1) throw std::logic_error("Scalar: element not invertible mod Phi_n");
    Poly p = poly_mod(u, phi);
    p.resize(phi.size() - 1);
    return Scalar(order_, std::move(p));
}

Scalar Scalar::conj() const {
    if (order_ <= 2) return *this;
    const Poly& phi = cyclotomic_polynomial(order_);
    Poly raw(static_cast<size_t>(order_), Rational());
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        // zeta^k -> zeta^{k(n-1)} = zeta^{-k}
        raw[(static_cast<size_t>(order_) - k) % static_cast<size_t>(order_)] += c_[k];
    }
    Poly p = poly_mod(raw, phi);
    p.resize(phi.size() - 1);
    return Scalar(order_, std::move(p));
}

bool operator==(const Scalar& a0, const Scalar& b0) {
    if (a0.order_ != b0.order_ && a0.order_ % b0.order_ != 0 && b0.order_ % a0.order_ != 0)
        return false;
    auto [a, b] = Scalar::aligned(a0, b0);
    return a.c_ == b.c_;
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

std::string Scalar::to_string() const {
    if (order_ == 1 || is_rational()) return rational_part().to_string();
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k].to_string();
        if (k >= 1) os << "*z" << order_;
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace cdgalab
