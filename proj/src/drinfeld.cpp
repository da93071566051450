#include "yangian/drinfeld.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace yang {

std::string DrinfeldTuple::str() const {
    std::string s = side == Side::Cur ? "Q = (" : "P = (";
    for (size_t i = 0; i < polys.size(); ++i) s += (i ? ", " : "") + polys[i].str();
    return s + ")";
}

namespace {

// |x| <= sum of |coordinates| since the powers of zeta8 have modulus 1
Q modulus_bound(const K& x) {
    Q b = 0;
    for (auto& c : x.coeffs()) b += abs(c);
    return b;
}

std::vector<SVec> common_kernel(const std::vector<const Mat*>& ops, int dim) {
    RowSpace rows(dim);
    for (auto* op : ops) {
        for (int r = 0; r < op->rows() && rows.rank() < dim; ++r)
            if (!op->row(r).empty()) rows.insert(op->row(r));
        if (rows.rank() == dim) break;
    }
    return nullspace(rows.rows(), dim);
}

// Vectors of span(S) with A v = e v.
std::vector<SVec> eigen_subspace(const std::vector<SVec>& S, const Mat& A, const K& e) {
    std::map<int, SVec> by_coord;  // ambient coordinate -> equation over the S coefficients
    for (size_t j = 0; j < S.size(); ++j) {
        SVec w = svec_add(A.apply(S[j]), S[j], -e);
        for (auto& [r, v] : w) by_coord[r].push_back({static_cast<int>(j), v});
    }
    std::vector<SVec> eqs;
    for (auto& [r, eq] : by_coord) eqs.push_back(eq);
    std::vector<SVec> out;
    for (auto& c : nullspace(eqs, static_cast<int>(S.size()))) {
        SVec v;
        for (auto& [j, cj] : c) v = svec_add(v, S[j], cj);
        out.push_back(v);
    }
    return out;
}

// Cut S down to its top weight: smallest F_nn eigenvalue first, then F_{n-1,n-1}, ...
// (the order of the height functional -sum_k 1000^k mu_k, positive on positive roots).
SVec top_weight_vector(std::vector<SVec> S, const GRep& V) {
    const LieAlgebra& g = *V.g;
    if (S.empty()) throw HighestWeightError("no vector is killed by all raising operators in the stored range");
    for (int k = g.n(); k >= 1; --k) {
        const Mat& A = V.f(k, k);
        Q L = 0;
        for (int r = 0; r < A.rows(); ++r) {
            Q row = 0;
            for (auto& [c, v] : A.row(r)) row += modulus_bound(v);
            L = std::max(L, row);
        }
        mpz_class top = 2 * L.get_num() / L.get_den() + 1;
        bool found = false;
        for (long e2 = -top.get_si(); e2 <= top.get_si() && !found; ++e2) {
            auto sub = eigen_subspace(S, A, K(Q(e2) / 2));
            if (!sub.empty()) {
                S = std::move(sub);
                found = true;
            }
        }
        if (!found) throw HighestWeightError("F(" + std::to_string(k) + "," + std::to_string(k) + ") has no half-integer eigenvector");
    }
    if (S.size() != 1)
        throw HighestWeightError("top weight space of the raising kernel has dimension " + std::to_string(S.size()));
    return S[0];
}

K eigenvalue_on(const Mat& A, const SVec& v, const std::string& what) {
    SVec w = A.apply(v);
    auto [idx, c] = *v.begin();
    K lam = svec_get(w, idx) / c;
    if (!svec_add(w, v, -lam).empty()) throw HighestWeightError(what + " does not act on the top vector by a scalar");
    return lam;
}

}  // namespace

CurHighestWeight highest_weight_cur(const CurRep& rep) {
    const LieAlgebra& g = *rep.g;
    std::vector<const Mat*> raising;
    for (int i = 0; i < g.n(); ++i)
        for (int r = 0; r <= rep.rmax; ++r) raising.push_back(&rep.Xp(i, r));
    CurHighestWeight hw;
    hw.xi = top_weight_vector(common_kernel(raising, rep.dim), grep_from_current(rep));
    hw.lambda.assign(g.n(), {});
    for (int i = 0; i < g.n(); ++i)
        for (int r = 0; r <= rep.rmax; ++r)
            hw.lambda[i].push_back(
                eigenvalue_on(rep.H(i, r), hw.xi, "h(" + std::to_string(i) + "," + std::to_string(r) + ")"));
    return hw;
}

RttHighestWeight highest_weight_rtt(const RTTRep& rep) {
    const LieAlgebra& g = *rep.g;
    const auto& idx = g.indices();
    std::vector<const Mat*> raising;
    for (int r = 1; r <= rep.order; ++r)
        for (int k : idx)
            for (int l : idx)
                if (k < l) raising.push_back(&rep.t(r, k, l));
    GRep V;
    V.g = rep.g;
    V.dim = rep.dim;
    for (int k : idx)
        for (int l : idx) V.F.push_back(rep.t(1, k, l));
    RttHighestWeight hw;
    hw.xi = top_weight_vector(common_kernel(raising, rep.dim), V);
    for (int k : idx) {
        TruncSeriesU s(rep.order);
        for (int r = 0; r <= rep.order; ++r)
            s[r] = eigenvalue_on(rep.t(r, k, k), hw.xi, "t(" + std::to_string(k) + "," + std::to_string(k) + ")") *
                   rep.zeta.pow(r);
        hw.lambda.push_back(s);
    }
    return hw;
}

PolyU polynomial_from_ratio(const TruncSeriesU& s, const K& c, int deg) {
    if (!(s[0] == K(1))) throw HighestWeightError("weight series does not start with 1");
    if (deg < 0) throw HighestWeightError("negative degree");
    if (s.order() < 2 * deg + 1)
        throw HighestWeightError("series order " + std::to_string(s.order()) + " too small for degree " +
                                 std::to_string(deg));
    // coefficient of u^{deg-m} in Q(u + c) - s(u) Q(u), m = 1..order, linear in q_0..q_{deg-1}
    std::vector<std::vector<K>> A;
    std::vector<K> b;
    for (int m = 1; m <= s.order(); ++m) {
        int p = deg - m;
        std::vector<K> row(deg);
        K rhs;
        for (int j = 0; j <= deg; ++j) {
            K coef;
            if (p >= 0 && p <= j) coef += K(binom(j, p)) * c.pow(j - p);
            if (j >= p && j - p <= s.order()) coef -= s[j - p];
            if (j == deg)
                rhs -= coef;
            else
                row[j] = coef;
        }
        A.push_back(row);
        b.push_back(rhs);
    }
    std::vector<K> q;
    if (!solve_linear(A, b, q)) throw HighestWeightError("no monic polynomial of degree " + std::to_string(deg));
    q.push_back(K(1));
    PolyU Q(q);
    if (!(ratfun_to_series(RatFunU(Q.shift(c), Q), s.order()) == s))
        throw HighestWeightError("re-expansion of the reconstructed ratio disagrees");
    return Q;
}

namespace {

int degree_from(const K& first, const K& c) {
    K d = first / c;
    if (!d.is_rational() || d.rational().get_den() != 1 || d.rational() < 0)
        throw HighestWeightError("leading weight " + first.str() + " is not a nonnegative multiple of " + c.str());
    return static_cast<int>(d.rational().get_num().get_si());
}

}  // namespace

DrinfeldTuple tuple_from_weights(const CurHighestWeight& hw, const LieAlgebra& g, const K& zeta) {
    DrinfeldTuple t;
    t.side = Side::Cur;
    for (int i = 0; i < g.n(); ++i) {
        const auto& lam = hw.lambda[i];
        TruncSeriesU s(static_cast<int>(lam.size()), K(1));
        for (size_t r = 0; r < lam.size(); ++r) s[static_cast<int>(r) + 1] = zeta * lam[r];
        K c = zeta * K(g.d(i));
        t.polys.push_back(polynomial_from_ratio(s, c, degree_from(s[1], c)));
    }
    return t;
}

DrinfeldTuple tuple_from_weights(const RttHighestWeight& hw, const LieAlgebra& g, const K& zeta) {
    DrinfeldTuple t;
    t.side = Side::Rtt;
    auto lam = [&](int k) -> const TruncSeriesU& { return hw.lambda[g.pos(k)]; };
    int k0 = 0, k1 = 1;
    if (g.series() == Series::C) k0 = -1;
    if (g.series() == Series::D) k0 = -1, k1 = 2;
    for (int k = 1; k <= g.n(); ++k) {
        TruncSeriesU s = k == 1 ? lam(k0) * lam(k1).inverse() : lam(k - 1) * lam(k).inverse();
        K c = k == 1 ? zeta * K(g.d(0)) : zeta;
        t.polys.push_back(polynomial_from_ratio(s, c, degree_from(s[1], c)));
    }
    return t;
}

K translation_offset(const LieAlgebra& g, int node) {
    K kappa(g.kappa());
    int n = g.n();
    if (node >= 1) return (K(n) + kappa - K(node)) / K(2);
    return g.series() == Series::B ? kappa + K(n, 2) : kappa;
}

DrinfeldTuple translate_tuple(const DrinfeldTuple& t, const LieAlgebra& g, const K& zeta) {
    if (static_cast<int>(t.polys.size()) != g.n()) throw std::invalid_argument("tuple length differs from the rank");
    DrinfeldTuple out;
    out.side = t.side == Side::Rtt ? Side::Cur : Side::Rtt;
    K sign = t.side == Side::Rtt ? K(1) : K(-1);
    for (int i = 0; i < g.n(); ++i) out.polys.push_back(t.polys[i].shift(sign * zeta * translation_offset(g, i)));
    return out;
}

std::vector<TranslationRow> translation_table(const LieAlgebra& g) {
    std::vector<TranslationRow> rows;
    for (int k = 1; k <= g.n(); ++k) {
        K off = translation_offset(g, k - 1);
        rows.push_back({k, k - 1, off,
                        "Q_" + std::to_string(k - 1) + "(u) = P_" + std::to_string(k) + "(u + " + off.str() + ")"});
    }
    return rows;
}

CnmModule build_cnm(Spec g, int m, const K& zeta, int order) {
    int n = g->n(), N = g->N();
    if (m < 1 || m > n) throw std::invalid_argument("C^{N,m} needs 1 <= m <= n");
    long ambient = 1;
    for (int k = 0; k < m; ++k) ambient *= N;
    if (ambient > 4096) throw std::invalid_argument("C^{N,m}: N^m = " + std::to_string(ambient) + " exceeds 4096");
    RTTRep nat = rtt_natural_rep(g, zeta, order);
    RTTRep acc = nat;
    for (int k = 1; k < m; ++k) acc = rtt_tensor(acc, rtt_shift(nat, -K(k) * zeta));
    std::vector<int> perm(m);
    for (int k = 0; k < m; ++k) perm[k] = k + 1;
    SVec xi;
    do {
        int inv = 0;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) inv += perm[a] > perm[b];
        long index = 0;
        for (int j = 0; j < m; ++j) index = index * N + g->pos(-n - 1 + perm[j]);
        xi.push_back({static_cast<int>(index), K(inv % 2 ? -1 : 1)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(xi.begin(), xi.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<const Mat*> ops;
    for (int r = 1; r <= acc.order; ++r)
        for (auto& c : acc.coef[r]) ops.push_back(&c);
    RowSpace span = cyclic_span({xi}, ops);
    CnmModule out;
    out.ambient_dim = static_cast<int>(ambient);
    out.rep = rtt_restrict(acc, span);
    out.xi = svec_from_dense(span.coords(xi));
    return out;
}

std::vector<RatFunU> cnm_weight_ratios(const LieAlgebra& g, int m, const K& zeta) {
    int n = g.n();
    K kappa(g.kappa());
    std::vector<RatFunU> out;
    for (int i : g.indices()) {
        if (i <= -n + m - 1)
            out.emplace_back(PolyU::linear_root(zeta * (kappa - K(m))), PolyU::linear_root(zeta * (kappa - K(m - 1))));
        else if (i >= n - m + 1)
            out.emplace_back(PolyU::linear_root(zeta), PolyU::linear_root(K(0)));
        else
            out.emplace_back(K(1));
    }
    return out;
}

TruncSeriesU cnm_prefactor(const LieAlgebra& g, int m, const K& zeta, int order) {
    TruncSeriesU base = series_rescale(natural_prefactor(g.kappa(), order), zeta);
    TruncSeriesU out(order, K(1));
    for (int k = 0; k < m; ++k) out = out * series_shift(base, K(k) * zeta);
    return out;
}

CheckReport check_cnm_highest_weight(Spec g, int m, const K& zeta, int order) {
    CheckReport rpt("cnm-highest-weight:" + g->name() + ":m=" + std::to_string(m), "R-CN,m");
    Stopwatch sw;
    CnmModule M = build_cnm(g, m, zeta, order);
    RttHighestWeight hw = highest_weight_rtt(M.rep);
    // the top vector is xi_m itself
    auto [i0, c0] = *M.xi.begin();
    K scale = svec_get(hw.xi, i0) / c0;
    rpt.expect(svec_add(hw.xi, M.xi, -scale).empty(), [] { return "top vector is not xi_m"; });
    TruncSeriesU gm = cnm_prefactor(*g, m, zeta, order);
    auto ratios = cnm_weight_ratios(*g, m, zeta);
    for (int i : g->indices()) {
        TruncSeriesU expect = gm * ratfun_to_series(ratios[g->pos(i)], order);
        rpt.expect(hw.lambda[g->pos(i)] == expect, [&] {
            return "lambda_" + std::to_string(i) + " = " + hw.lambda[g->pos(i)].str() + ", expected " + expect.str();
        });
    }
    // g-weight of xi_m: -(eps_{n-m+1} + ... + eps_n), which is omega_{n-m} at the fundamental nodes
    for (int k = 1; k <= g->n(); ++k) {
        K mu = eigenvalue_on(M.rep.t(1, k, k), M.xi, "F(k,k)");
        K expect = k > g->n() - m ? K(-1) : K(0);
        rpt.expect(mu == expect, [&] { return "weight at F(" + std::to_string(k) + "," + std::to_string(k) + ")"; });
    }
    rpt.detail = "dim " + std::to_string(M.rep.dim) + " inside " + std::to_string(M.ambient_dim);
    rpt.elapsed = sw.seconds();
    return rpt;
}

RTTRep fundamental_rtt_module(Spec g, int node, const K& zeta, int order) {
    if (node < 0 || node >= g->n()) throw std::invalid_argument("node out of range");
    if (is_spin_node(*g, node)) return rtt_spin_rep(g, node, zeta, order);
    int m = node == 0 ? g->n() : g->n() - node;
    return build_cnm(g, m, zeta, order).rep;
}

bool translation_verifiable(const LieAlgebra& g, int node) {
    if (!g.node_allowed(node)) return false;
    if (is_spin_node(g, node)) return true;
    int m = node == 0 ? g.n() : g.n() - node;
    long ambient = 1;
    for (int k = 0; k < m; ++k) ambient *= g.N();
    return (node == 0 || m <= 2) && ambient <= 512;
}

K fundamental_rtt_point(const LieAlgebra& g, int node) {
    if (is_spin_node(g, node)) return K(1, 2);
    return node == 0 ? K(2) : K(1);
}

CheckReport check_translation(Spec g, int node, const K& zeta, int order) {
    CheckReport rpt("translation:" + g->name() + ":node=" + std::to_string(node), "T:cr-R");
    Stopwatch sw;
    RTTRep rep = fundamental_rtt_module(g, node, zeta, order);
    DrinfeldTuple P = tuple_from_weights(highest_weight_rtt(rep), *g, zeta);
    DrinfeldTuple Pexp;
    Pexp.side = Side::Rtt;
    for (int k = 1; k <= g->n(); ++k)
        Pexp.polys.push_back(k == node + 1 ? PolyU::linear_root(zeta * fundamental_rtt_point(*g, node)) : PolyU(K(1)));
    rpt.expect(P == Pexp, [&] { return "RTT tuple " + P.str() + ", expected " + Pexp.str(); });

    CurRep c = phi_cr_from_j(phi_j_from_rtt(rep), 4);
    DrinfeldTuple Qt = tuple_from_weights(highest_weight_cur(c), *g, zeta);
    DrinfeldTuple Qexp = translate_tuple(P, *g, zeta);
    const PolyU& q = Qt.polys[node];
    K a = q.degree() == 1 ? -q.coeff(0) : K(0);
    K a_exp = Qexp.polys[node].degree() == 1 ? -Qexp.polys[node].coeff(0) : K(0);
    rpt.detail = "a = " + a.str() + " (translated: " + a_exp.str() + ")";
    rpt.expect(Qt == Qexp, [&] { return "extracted " + Qt.str() + ", translated " + Qexp.str(); });
    rpt.elapsed = sw.seconds();
    return rpt;
}

}  // namespace yang
