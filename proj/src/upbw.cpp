#include "yangian/upbw.hpp"

#include <algorithm>
#include <sstream>

namespace yang {

int UElement::degree() const {
    int d = -1;
    for (auto& [w, c] : terms) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

UElement& UElement::add(const Word& w, const K& c) {
    if (c.is_zero()) return *this;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
    return *this;
}

UElement& UElement::operator+=(const UElement& o) {
    for (auto& [w, c] : o.terms) add(w, c);
    return *this;
}

UElement& UElement::operator-=(const UElement& o) {
    for (auto& [w, c] : o.terms) add(w, -c);
    return *this;
}

UElement UElement::operator-() const {
    UElement r = *this;
    for (auto& [w, c] : r.terms) c = -c;
    return r;
}

UElement operator*(const K& s, const UElement& a) {
    UElement r;
    if (s.is_zero()) return r;
    r = a;
    for (auto& [w, c] : r.terms) c = s * c;
    return r;
}

UAlgebra::UAlgebra(const LieAlgebra& g) : g_(g) {
    int d = g.dim();
    struct_.assign(d, std::vector<SVec>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (a != b) struct_[a][b] = svec_from_dense(g.coords(yang::comm(g.basis()[a], g.basis()[b])));
}

UElement UAlgebra::one() const {
    UElement e;
    e.add({}, K(1));
    return e;
}

UElement UAlgebra::gen(int i, int j) const {
    auto [a, s] = g_.canonical(i, j);
    UElement e;
    if (a >= 0) e.add({a}, K(s));
    return e;
}

UElement UAlgebra::from_mat(const Mat& X) const {
    std::vector<K> c = g_.coords(X);
    UElement e;
    for (int a = 0; a < static_cast<int>(c.size()); ++a) e.add({a}, c[a]);
    return e;
}

const UElement& UAlgebra::normal(const Word& w) const {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    UElement r;
    size_t k = 0;
    while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
    if (k + 1 >= w.size()) {
        r.add(w, K(1));
    } else {
        // F_a F_b = F_b F_a + [F_a, F_b] at the first descent.
        Word sw = w;
        std::swap(sw[k], sw[k + 1]);
        r += normal(sw);
        for (auto& [c, v] : struct_[w[k]][w[k + 1]]) {
            Word sh;
            sh.reserve(w.size() - 1);
            sh.insert(sh.end(), w.begin(), w.begin() + k);
            sh.push_back(c);
            sh.insert(sh.end(), w.begin() + k + 2, w.end());
            r += v * normal(sh);
        }
    }
    return cache_.emplace(w, std::move(r)).first->second;
}

UElement UAlgebra::mul(const UElement& a, const UElement& b) const {
    UElement r;
    for (auto& [wa, ca] : a.terms)
        for (auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            K c = ca * cb;
            for (auto& [wn, cn] : normal(w).terms) r.add(wn, c * cn);
        }
    return r;
}

UElement UAlgebra::comm(const UElement& a, const UElement& b) const { return mul(a, b) - mul(b, a); }

UElement UAlgebra::anticomm(const UElement& a, const UElement& b) const { return mul(a, b) + mul(b, a); }

UElement UAlgebra::pow(const UElement& a, int k) const {
    UElement r = one();
    for (int t = 0; t < k; ++t) r = mul(r, a);
    return r;
}

Mat UAlgebra::act(const UElement& a, const std::vector<Mat>& basis_mats) const {
    int dim = basis_mats.empty() ? 0 : basis_mats[0].rows();
    Mat r(dim, dim);
    for (auto& [w, c] : a.terms) {
        Mat m = Mat::identity(dim);
        for (int x : w) m = m * basis_mats[x];
        r += c * m;
    }
    return r;
}

std::string UAlgebra::str(const UElement& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << (c.is_rational() ? c.str() : "(" + c.str() + ")");
        if (!w.empty()) os << " * ";
        for (int x : w) os << "F(" << g_.labels()[x].i << "," << g_.labels()[x].j << ")";
    }
    return os.str();
}

SpecialElements special_elements(const UAlgebra& U, int i) {
    const LieAlgebra& g = U.lie();
    const Chevalley& ch = g.chevalley()[i];
    UElement xp = U.from_mat(ch.xp), xm = U.from_mat(ch.xm), h = U.from_mat(ch.h);
    UElement h2 = U.mul(h, h);
    SpecialElements s;
    UElement sum_v, sum_p, sum_m;
    for (auto& r : g.positive_roots()) {
        Q pair = 0;
        for (int k = 0; k < g.n(); ++k) pair += r.eps[k] * g.simple_roots()[i][k];
        UElement ap = U.from_mat(r.xp), am = U.from_mat(r.xm);
        if (pair != 0) sum_v += K(pair) * U.anticomm(ap, am);
        sum_p += U.anticomm(U.from_mat(comm(ch.xp, r.xp)), am);
        sum_m += U.anticomm(U.from_mat(comm(ch.xm, r.xm)), ap);
    }
    s.v = K(1, 4) * sum_v - K(1, 2) * h2;
    s.wp = K(1, 4) * sum_p - K(1, 4) * U.anticomm(xp, h);
    s.wm = K(-1, 4) * sum_m - K(1, 4) * U.anticomm(xm, h);
    s.vtilde = s.v + K(1, 2) * h2;
    return s;
}

}  // namespace yang
