#include "yangian/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace yang {

// ---------------------------------------------------------------- K

bool K::is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool K::is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

bool K::is_one() const { return is_rational() && c_[0] == 1; }

const Q& K::rational() const {
    if (!is_rational()) throw std::domain_error("element of Q(z8) is not rational: " + str());
    return c_[0];
}

K& K::operator+=(const K& o) {
    for (int k = 0; k < 4; ++k)
        if (sgn(o.c_[k])) c_[k] += o.c_[k];
    return *this;
}

K& K::operator-=(const K& o) {
    for (int k = 0; k < 4; ++k)
        if (sgn(o.c_[k])) c_[k] -= o.c_[k];
    return *this;
}

K K::operator-() const {
    K r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

K operator*(const K& a, const K& b) {
    K r;
    const bool ar = a.is_rational(), br = b.is_rational();
    if (ar && br) {
        r.c_[0] = a.c_[0] * b.c_[0];
        return r;
    }
    if (ar) {
        if (sgn(a.c_[0]) == 0) return r;
        for (int k = 0; k < 4; ++k)
            if (sgn(b.c_[k])) r.c_[k] = a.c_[0] * b.c_[k];
        return r;
    }
    if (br) {
        if (sgn(b.c_[0]) == 0) return r;
        for (int k = 0; k < 4; ++k)
            if (sgn(a.c_[k])) r.c_[k] = a.c_[k] * b.c_[0];
        return r;
    }
    Q t;
    for (int i = 0; i < 4; ++i) {
        if (!sgn(a.c_[i])) continue;
        for (int j = 0; j < 4; ++j) {
            if (!sgn(b.c_[j])) continue;
            t = a.c_[i] * b.c_[j];
            int e = i + j;
            if (e >= 4)
                r.c_[e - 4] -= t;
            else
                r.c_[e] += t;
        }
    }
    return r;
}

K& K::operator*=(const K& o) { return *this = *this * o; }

K K::galois(int k) const {
    K r;
    for (int j = 0; j < 4; ++j) {
        if (!sgn(c_[j])) continue;
        int e = (j * k) % 8;
        if (e >= 4)
            r.c_[e - 4] -= c_[j];
        else
            r.c_[e] += c_[j];
    }
    return r;
}

K K::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(z8)");
    if (is_rational()) return K(Q(1) / c_[0]);
    K conj = galois(3) * galois(5) * galois(7);
    K norm = *this * conj;
    return conj * K(Q(1) / norm.rational());
}

K& K::operator/=(const K& o) {
    if (o.is_rational()) {
        if (!sgn(o.c_[0])) throw std::domain_error("division by zero in Q(z8)");
        for (int k = 0; k < 4; ++k)
            if (sgn(c_[k])) c_[k] /= o.c_[0];
        return *this;
    }
    return *this = *this * o.inverse();
}

K K::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    K result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string K::str() const {
    if (is_zero()) return "0";
    std::string out;
    static const char* names[4] = {"", "z8", "z8^2", "z8^3"};
    for (int k = 0; k < 4; ++k) {
        if (!sgn(c_[k])) continue;
        Q v = c_[k];
        bool neg = sgn(v) < 0;
        if (neg) v = -v;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (k == 0)
            out += v.get_str();
        else if (v == 1)
            out += names[k];
        else
            out += v.get_str() + "*" + names[k];
    }
    return out;
}

std::string K::canonical() const {
    return c_[0].get_str() + " + " + c_[1].get_str() + "*z8 + " + c_[2].get_str() + "*z8^2 + " +
           c_[3].get_str() + "*z8^3";
}

std::ostream& operator<<(std::ostream& os, const K& k) { return os << k.str(); }

K K::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    K out;
    size_t p = 0;
    auto fail = [&]() { throw std::invalid_argument("cannot parse scalar '" + text + "'"); };
    bool first = true;
    while (p < s.size()) {
        int sign = 1;
        if (s[p] == '+' || s[p] == '-') {
            while (p < s.size() && (s[p] == '+' || s[p] == '-')) {
                if (s[p] == '-') sign = -sign;
                ++p;
            }
        } else if (!first) {
            fail();
        }
        first = false;
        Q coef(1);
        bool have_num = false;
        size_t q = p;
        while (q < s.size() && (std::isdigit(static_cast<unsigned char>(s[q])) || s[q] == '/')) ++q;
        if (q > p) {
            coef = Q(s.substr(p, q - p));
            coef.canonicalize();
            have_num = true;
            p = q;
        }
        int power = 0;
        if (p < s.size() && s[p] == '*') ++p;
        if (s.compare(p, 2, "z8") == 0) {
            p += 2;
            power = 1;
            if (p < s.size() && s[p] == '^') {
                ++p;
                size_t r = p;
                while (r < s.size() && std::isdigit(static_cast<unsigned char>(s[r]))) ++r;
                if (r == p) fail();
                power = std::stoi(s.substr(p, r - p));
                p = r;
            }
        } else if (!have_num) {
            fail();
        }
        K term = K(coef * sign) * K::zeta8().pow(power);
        out += term;
    }
    return out;
}

Q binom(long n, long m) {
    if (m < 0) return Q(0);
    Q r(1);
    for (long k = 0; k < m; ++k) {
        r *= Q(n - k);
        r /= Q(k + 1);
    }
    return r;
}

// ---------------------------------------------------------------- PolyU

PolyU::PolyU(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

void PolyU::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyU PolyU::monomial(const K& c, int k) {
    std::vector<K> v(k + 1);
    v[k] = c;
    return PolyU(std::move(v));
}

PolyU PolyU::linear_root(const K& a) { return PolyU(std::vector<K>{-a, K(1)}); }

PolyU& PolyU::operator+=(const PolyU& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

PolyU& PolyU::operator-=(const PolyU& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

PolyU PolyU::operator-() const {
    PolyU r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

PolyU operator*(const PolyU& a, const PolyU& b) {
    if (a.is_zero() || b.is_zero()) return PolyU();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyU(std::move(r));
}

PolyU operator*(const K& s, const PolyU& p) {
    if (s.is_zero()) return PolyU();
    std::vector<K> r = p.c_;
    for (auto& x : r) x = s * x;
    return PolyU(std::move(r));
}

K PolyU::eval(const K& x) const {
    K r;
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

PolyU PolyU::shift(const K& c) const {
    // Horner in the polynomial ring: p(u+c) = (...(a_d (u+c) + a_{d-1})(u+c) + ...)
    PolyU uc(std::vector<K>{c, K(1)});
    PolyU r;
    for (size_t k = c_.size(); k-- > 0;) r = r * uc + PolyU(c_[k]);
    return r;
}

PolyU PolyU::monic() const {
    if (is_zero()) return *this;
    return lead().inverse() * *this;
}

void PolyU::divmod(const PolyU& a, const PolyU& b, PolyU& q, PolyU& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    r = a;
    std::vector<K> qc(std::max(0, a.degree() - b.degree() + 1));
    K inv = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int s = r.degree() - b.degree();
        K f = r.lead() * inv;
        qc[s] = f;
        r -= PolyU::monomial(f, s) * b;
    }
    q = PolyU(std::move(qc));
}

PolyU PolyU::gcd(PolyU a, PolyU b) {
    while (!b.is_zero()) {
        PolyU q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string PolyU::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        bool compound = !c_[k].is_rational();
        // rational negative coefficients print as " - |c|"
        bool neg = !compound && c_[k].rational() < 0;
        K mag = neg ? -c_[k] : c_[k];
        std::string cs = mag.str();
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (k == 0) {
            out += compound ? "(" + cs + ")" : cs;
        } else {
            if (!mag.is_one()) out += (compound ? "(" + cs + ")" : cs) + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

// ---------------------------------------------------------------- RatFunU

RatFunU::RatFunU(PolyU num, PolyU den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RatFunU& RatFunU::operator+=(const RatFunU& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    return *this;
}

RatFunU& RatFunU::operator-=(const RatFunU& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
    }
    return *this;
}

RatFunU& RatFunU::operator*=(const RatFunU& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    return *this;
}

RatFunU RatFunU::operator-() const { return RatFunU(-num_, den_); }

RatFunU RatFunU::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunU(den_, num_);
}

bool operator==(const RatFunU& a, const RatFunU& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFunU RatFunU::normalized() const {
    if (num_.is_zero()) return RatFunU(PolyU(), PolyU(K(1)));
    PolyU g = PolyU::gcd(num_, den_);
    PolyU n, d, r;
    PolyU::divmod(num_, g, n, r);
    PolyU::divmod(den_, g, d, r);
    K l = d.lead().inverse();
    return RatFunU(l * n, l * d);
}

RatFunU RatFunU::shift(const K& c) const { return RatFunU(num_.shift(c), den_.shift(c)); }

int RatFunU::degree_at_infinity() const {
    if (num_.is_zero()) return -(1 << 20);
    return num_.degree() - den_.degree();
}

std::string RatFunU::str() const {
    RatFunU n = normalized();
    if (n.den_.degree() == 0) return n.num_.str();
    return "(" + n.num_.str() + ") / (" + n.den_.str() + ")";
}

PoleError::PoleError(const K& at)
    : std::runtime_error("rational function has a pole at u = " + at.str()), at_(at) {}

K ratfun_eval(const RatFunU& f, const K& p) {
    K d = f.den().eval(p);
    if (d.is_zero()) {
        RatFunU g = f.normalized();
        K dd = g.den().eval(p);
        if (dd.is_zero()) throw PoleError(p);
        return g.num().eval(p) / dd;
    }
    return f.num().eval(p) / d;
}

// ---------------------------------------------------------------- TruncSeriesU

TruncSeriesU::TruncSeriesU(int order, std::vector<K> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1);
}

TruncSeriesU& TruncSeriesU::operator+=(const TruncSeriesU& o) {
    int m = std::min(order(), o.order());
    c_.resize(m + 1);
    for (int k = 0; k <= m; ++k) c_[k] += o.c_[k];
    return *this;
}

TruncSeriesU& TruncSeriesU::operator-=(const TruncSeriesU& o) {
    int m = std::min(order(), o.order());
    c_.resize(m + 1);
    for (int k = 0; k <= m; ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncSeriesU operator*(const TruncSeriesU& a, const TruncSeriesU& b) {
    int m = std::min(a.order(), b.order());
    TruncSeriesU r(m);
    for (int i = 0; i <= m; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= m; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

TruncSeriesU operator*(const K& s, const TruncSeriesU& a) {
    TruncSeriesU r = a;
    for (auto& x : r.c_) x = s * x;
    return r;
}

bool operator==(const TruncSeriesU& a, const TruncSeriesU& b) {
    int m = std::min(a.order(), b.order());
    for (int k = 0; k <= m; ++k)
        if (a.c_[k] != b.c_[k]) return false;
    return true;
}

TruncSeriesU TruncSeriesU::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("series with zero constant term is not a unit");
    TruncSeriesU r(order());
    K inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
        K acc;
        for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -(acc * inv0);
    }
    return r;
}

TruncSeriesU TruncSeriesU::truncated(int ord) const {
    TruncSeriesU r(ord);
    for (int k = 0; k <= std::min(ord, order()); ++k) r.c_[k] = c_[k];
    if (ord > order()) throw std::invalid_argument("cannot extend a truncated series");
    return r;
}

TruncSeriesU TruncSeriesU::shift_down(int s) const {
    TruncSeriesU r(order());
    for (int k = 0; k + s <= order(); ++k) r.c_[k + s] = c_[k];
    return r;
}

std::string TruncSeriesU::str() const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = c_[k].is_rational() ? c_[k].str() : "(" + c_[k].str() + ")";
        if (k == 0)
            out += cs;
        else
            out += cs + "*u^-" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out + " + O(u^-" + std::to_string(order() + 1) + ")";
}

TruncSeriesU ratfun_to_series(const RatFunU& f, int order) {
    if (f.is_zero()) return TruncSeriesU(order);
    int gap = f.degree_at_infinity();
    if (gap > 0)
        throw std::domain_error("rational function is improper at infinity: numerator degree exceeds "
                                "denominator degree by " +
                                std::to_string(gap));
    // f = N(u)/D(u) with D of degree e; write both in x = 1/u scaled by u^-e.
    const PolyU& N = f.num();
    const PolyU& D = f.den();
    int e = D.degree();
    TruncSeriesU num(order), den(order);
    for (int k = 0; k <= order; ++k) {
        num[k] = N.coeff(e - k);
        den[k] = D.coeff(e - k);
    }
    return num * den.inverse();
}

TruncSeriesU series_shift(const TruncSeriesU& s, const K& c) {
    int K_ = s.order();
    TruncSeriesU r(K_);
    r[0] = s[0];
    std::vector<K> cp(K_ + 1);
    cp[0] = K(1);
    for (int m = 1; m <= K_; ++m) cp[m] = cp[m - 1] * c;
    for (int k = 1; k <= K_; ++k) {
        if (s[k].is_zero()) continue;
        for (int m = 0; k + m <= K_; ++m) r[k + m] += s[k] * K(binom(-k, m)) * cp[m];
    }
    return r;
}

TruncSeriesU series_rescale(const TruncSeriesU& s, const K& z) {
    TruncSeriesU r = s;
    K p(1);
    for (int k = 1; k <= s.order(); ++k) {
        p *= z;
        r[k] = s[k] * p;
    }
    return r;
}

namespace {

// Solve the square system A x = b by Gaussian elimination; false if singular or
// inconsistent. Used only for small Pade systems.
bool solve_small(std::vector<std::vector<K>> A, std::vector<K> b, std::vector<K>& x) {
    int rows = static_cast<int>(A.size());
    int cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!A[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        K inv = A[r][c].inverse();
        for (int j = c; j < cols; ++j) A[r][j] *= inv;
        b[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            K f = A[i][c];
            for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!b[i].is_zero()) return false;
    x.assign(cols, K());
    for (int i = 0; i < r; ++i) x[pivcol[i]] = b[i];
    return true;
}

}  // namespace

bool pade_reconstruct(const TruncSeriesU& s, int max_degree, RatFunU& out) {
    const int Kord = s.order();
    // Work in x = 1/u: s = sum c_k x^k. Find P, Q of degree <= L with Q(0) = 1 and
    // s Q - P = O(x^{Kord+1}).
    for (int L = 0; L <= max_degree && 2 * L <= Kord; ++L) {
        // Unknowns q_1..q_L; equations: coefficient k of s*Q vanishes for k = L+1..Kord.
        std::vector<std::vector<K>> A;
        std::vector<K> b;
        for (int k = L + 1; k <= Kord; ++k) {
            std::vector<K> row(L);
            for (int j = 1; j <= L; ++j) row[j - 1] = s.coeff(k - j);
            A.push_back(row);
            b.push_back(-s.coeff(k));
        }
        std::vector<K> q;
        if (L > 0) {
            if (!solve_small(A, b, q)) continue;
        } else {
            bool ok = true;
            for (int k = 1; k <= Kord; ++k)
                if (!s.coeff(k).is_zero()) ok = false;
            if (!ok) continue;
        }
        std::vector<K> Qx(L + 1), Px(L + 1);
        Qx[0] = K(1);
        for (int j = 1; j <= L; ++j) Qx[j] = q[j - 1];
        for (int k = 0; k <= L; ++k) {
            K acc;
            for (int j = 0; j <= k; ++j) acc += Qx[j] * s.coeff(k - j);
            Px[k] = acc;
        }
        // Back to u: multiply numerator and denominator by u^L and reverse.
        std::vector<K> Pu(L + 1), Qu(L + 1);
        for (int k = 0; k <= L; ++k) {
            Pu[L - k] = Px[k];
            Qu[L - k] = Qx[k];
        }
        RatFunU cand = RatFunU(PolyU(Pu), PolyU(Qu)).normalized();
        if (ratfun_to_series(cand, Kord) == s) {
            out = cand;
            return true;
        }
    }
    return false;
}

TruncSeriesU solve_half_shift(const TruncSeriesU& q, const K& c) {
    if (q[0] != K(1)) throw std::domain_error("solve_half_shift needs a series with constant term 1");
    const int ord = q.order();
    TruncSeriesU s(ord, K(1));
    // Coefficient k of s(u)s(u+c) is 2 s_k plus terms in s_1..s_{k-1}.
    for (int k = 1; k <= ord; ++k) {
        TruncSeriesU r = s * series_shift(s, c) - q;
        s[k] = -K(1, 2) * r[k];
    }
    return s;
}

}  // namespace yang
