#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace yang {

using Q = mpq_class;

/// Element of Q(z8) = Q[x]/(x^4+1), stored as a + b z + c z^2 + d z^3.
class K {
public:
    K() = default;
    K(long v) { c_[0] = v; }
    K(const Q& v) { c_[0] = v; }
    K(long num, long den) {
        c_[0] = Q(num, den);
        c_[0].canonicalize();
    }
    K(const Q& a, const Q& b, const Q& c, const Q& d) : c_{a, b, c, d} {}

    static K zeta8() { return K(0, 1, 0, 0); }
    /// sqrt(2) = z + z^-1 = z - z^3
    static K sqrt2() { return K(0, 1, 0, -1); }
    /// sqrt(-1) = z^2
    static K imag() { return K(0, 0, 1, 0); }
    /// sqrt(-2) = i*sqrt(2) = z + z^3
    static K sqrtm2() { return K(0, 1, 0, 1); }

    const Q& coeff(int k) const { return c_[k]; }
    const std::array<Q, 4>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_one() const;
    /// Rational part; throws if the element is not rational.
    const Q& rational() const;

    K& operator+=(const K& o);
    K& operator-=(const K& o);
    K& operator*=(const K& o);
    K& operator/=(const K& o);
    K operator-() const;

    friend K operator+(K a, const K& b) { return a += b; }
    friend K operator-(K a, const K& b) { return a -= b; }
    friend K operator*(const K& a, const K& b);
    friend K operator/(K a, const K& b) { return a /= b; }
    friend bool operator==(const K& a, const K& b) { return a.c_ == b.c_; }
    friend bool operator!=(const K& a, const K& b) { return !(a == b); }

    K inverse() const;
    /// Galois conjugate z -> z^k for odd k.
    K galois(int k) const;
    K pow(long e) const;

    /// Compact text, e.g. "1/2 - 3*z8^2".
    std::string str() const;
    /// Canonical text "a + b*z8 + c*z8^2 + d*z8^3".
    std::string canonical() const;
    /// Accepts both canonical and compact forms, and plain rationals "p/q".
    static K parse(const std::string& s);

private:
    std::array<Q, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const K& k);

/// Binomial coefficient C(n, m) as a rational; n may be negative.
Q binom(long n, long m);

/// Polynomial in u with coefficients in K, lowest degree first.
class PolyU {
public:
    PolyU() = default;
    PolyU(const K& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit PolyU(std::vector<K> coeffs);
    /// The monomial c*u^k.
    static PolyU monomial(const K& c, int k);
    /// u - a
    static PolyU linear_root(const K& a);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : K(); }
    K lead() const { return c_.empty() ? K() : c_.back(); }

    PolyU& operator+=(const PolyU& o);
    PolyU& operator-=(const PolyU& o);
    PolyU operator-() const;
    friend PolyU operator+(PolyU a, const PolyU& b) { return a += b; }
    friend PolyU operator-(PolyU a, const PolyU& b) { return a -= b; }
    friend PolyU operator*(const PolyU& a, const PolyU& b);
    friend PolyU operator*(const K& s, const PolyU& p);
    friend bool operator==(const PolyU& a, const PolyU& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyU& a, const PolyU& b) { return !(a == b); }

    K eval(const K& x) const;
    /// p(u + c)
    PolyU shift(const K& c) const;
    PolyU monic() const;
    /// Quotient and remainder; divisor must be nonzero.
    static void divmod(const PolyU& a, const PolyU& b, PolyU& q, PolyU& r);
    /// Monic gcd.
    static PolyU gcd(PolyU a, PolyU b);

    std::string str(const std::string& var = "u") const;

private:
    void trim();
    std::vector<K> c_;
};

/// Rational function num/den in u; den monic after normalize().
class RatFunU {
public:
    RatFunU() : num_(), den_(K(1)) {}
    RatFunU(const K& c) : num_(c), den_(K(1)) {}
    RatFunU(const PolyU& p) : num_(p), den_(K(1)) {}
    RatFunU(PolyU num, PolyU den);

    const PolyU& num() const { return num_; }
    const PolyU& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunU& operator+=(const RatFunU& o);
    RatFunU& operator-=(const RatFunU& o);
    RatFunU& operator*=(const RatFunU& o);
    RatFunU operator-() const;
    friend RatFunU operator+(RatFunU a, const RatFunU& b) { return a += b; }
    friend RatFunU operator-(RatFunU a, const RatFunU& b) { return a -= b; }
    friend RatFunU operator*(RatFunU a, const RatFunU& b) { return a *= b; }
    RatFunU inverse() const;
    friend RatFunU operator/(const RatFunU& a, const RatFunU& b) { return a * b.inverse(); }
    /// Equality by cross multiplication; no normalization needed.
    friend bool operator==(const RatFunU& a, const RatFunU& b);
    friend bool operator!=(const RatFunU& a, const RatFunU& b) { return !(a == b); }

    /// gcd-reduce and make the denominator monic.
    RatFunU normalized() const;
    /// f(u + c)
    RatFunU shift(const K& c) const;
    /// Degree at infinity: deg num - deg den (num = 0 gives a very negative value).
    int degree_at_infinity() const;

    std::string str() const;

private:
    PolyU num_, den_;
};

/// Raised by ratfun_eval at a pole.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const K& at);
    const K& location() const { return at_; }

private:
    K at_;
};

K ratfun_eval(const RatFunU& f, const K& p);

/// Series c_0 + c_1 u^-1 + ... + c_K u^-K.
class TruncSeriesU {
public:
    explicit TruncSeriesU(int order = 8) : c_(order + 1) {}
    TruncSeriesU(int order, const K& constant) : c_(order + 1) { c_[0] = constant; }
    TruncSeriesU(int order, std::vector<K> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const K& operator[](int k) const { return c_[k]; }
    K& operator[](int k) { return c_[k]; }
    K coeff(int k) const { return (k >= 0 && k <= order()) ? c_[k] : K(); }
    const std::vector<K>& coeffs() const { return c_; }

    TruncSeriesU& operator+=(const TruncSeriesU& o);
    TruncSeriesU& operator-=(const TruncSeriesU& o);
    friend TruncSeriesU operator+(TruncSeriesU a, const TruncSeriesU& b) { return a += b; }
    friend TruncSeriesU operator-(TruncSeriesU a, const TruncSeriesU& b) { return a -= b; }
    friend TruncSeriesU operator*(const TruncSeriesU& a, const TruncSeriesU& b);
    friend TruncSeriesU operator*(const K& s, const TruncSeriesU& a);
    /// Equal on the common truncation range.
    friend bool operator==(const TruncSeriesU& a, const TruncSeriesU& b);
    friend bool operator!=(const TruncSeriesU& a, const TruncSeriesU& b) { return !(a == b); }

    TruncSeriesU inverse() const;
    TruncSeriesU truncated(int order) const;
    /// Multiply by u^-k (dropping what falls past the order).
    TruncSeriesU shift_down(int k) const;

    std::string str() const;

private:
    std::vector<K> c_;
};

/// Expansion at u = infinity. Throws on an improper function.
TruncSeriesU ratfun_to_series(const RatFunU& f, int order);
/// s(u + c), re-expanded in powers of u^-1.
TruncSeriesU series_shift(const TruncSeriesU& s, const K& c);
/// Scale the variable: s(u) -> s(u / z), i.e. coefficient k times z^k.
TruncSeriesU series_rescale(const TruncSeriesU& s, const K& z);
/// Rational reconstruction of a series by Pade approximants of increasing size,
/// num/den degree at most max_degree. Returns false if none is consistent with
/// every available coefficient.
bool pade_reconstruct(const TruncSeriesU& s, int max_degree, RatFunU& out);

/// The unique s = 1 + O(u^-1) with s(u) s(u + c) = q(u) to the order of q.
/// q must have constant term 1.
TruncSeriesU solve_half_shift(const TruncSeriesU& q, const K& c);

}  // namespace yang
