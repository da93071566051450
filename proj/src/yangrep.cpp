#include "yangian/yangrep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace yang {

Spec make_spec(Series s, int n) { return std::make_shared<const LieAlgebra>(LieAlgebra::build(s, n)); }

namespace {

std::string ij(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

void require_zeta(const K& zeta) {
    if (zeta.is_zero()) throw std::invalid_argument("zeta must be nonzero");
}

}  // namespace

// ---------------------------------------------------------------- g-modules

Mat GRep::of(const Mat& X) const {
    std::vector<K> c = g->coords(X);
    Mat r(dim, dim);
    for (size_t a = 0; a < c.size(); ++a) {
        if (c[a].is_zero()) continue;
        const Label& l = g->labels()[a];
        r += c[a] * f(l.i, l.j);
    }
    return r;
}

std::vector<Mat> GRep::basis_mats() const {
    std::vector<Mat> v;
    for (auto& l : g->labels()) v.push_back(f(l.i, l.j));
    return v;
}

GRep GRep::from_basis(Spec g, const std::vector<Mat>& imgs) {
    GRep r;
    r.dim = imgs.empty() ? 0 : imgs[0].rows();
    int N = g->N();
    r.F.assign(N * N, Mat(r.dim, r.dim));
    for (int i : g->indices())
        for (int j : g->indices()) {
            auto [a, s] = g->canonical(i, j);
            if (a >= 0) r.F[g->pos(i) * N + g->pos(j)] = K(s) * imgs[a];
        }
    r.g = std::move(g);
    return r;
}

GRep trivial_grep(Spec g) {
    std::vector<Mat> imgs(g->dim(), Mat(1, 1));
    return GRep::from_basis(std::move(g), imgs);
}

GRep natural_grep(Spec g) {
    auto imgs = g->basis();
    return GRep::from_basis(std::move(g), imgs);
}

namespace {

// Fermionic modes on bitmasks: psi_k = a_k^dagger, psi_{-k} = a_k, psi_0 = (-1)^N / sqrt 2.
Mat psi(int n, int k) {
    int dim = 1 << n;
    Mat m(dim, dim);
    if (k == 0) {
        K r2 = K::sqrt2().inverse();
        for (int s = 0; s < dim; ++s) m.set(s, s, (__builtin_popcount(s) % 2) ? -r2 : r2);
        return m;
    }
    int bit = 1 << (std::abs(k) - 1);
    for (int s = 0; s < dim; ++s) {
        bool occ = s & bit;
        if ((k > 0) == occ) continue;
        int sign = (__builtin_popcount(s & (bit - 1)) % 2) ? -1 : 1;
        m.set(s ^ bit, s, K(sign));
    }
    return m;
}

// Lambda^m C^N on increasing position tuples.
GRep exterior_grep(const Spec& g, int m) {
    int N = g->N();
    std::vector<std::vector<int>> subsets;
    std::map<std::vector<int>, int> index;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == m) {
            index[cur] = static_cast<int>(subsets.size());
            subsets.push_back(cur);
            return;
        }
        for (int p = start; p < N; ++p) {
            cur.push_back(p);
            self(self, p + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    int dim = static_cast<int>(subsets.size());
    std::vector<Mat> imgs;
    for (auto& X : g->basis()) {
        Mat Xt = X.transpose();  // row p of Xt: X e_p = sum_q X[q][p] e_q
        Mat r(dim, dim);
        for (int s = 0; s < dim; ++s) {
            const auto& S = subsets[s];
            for (int k = 0; k < m; ++k)
                for (auto& [q, v] : Xt.row(S[k])) {
                    std::vector<int> T = S;
                    T[k] = q;
                    if (q != S[k] && std::count(S.begin(), S.end(), q)) continue;
                    // sort with sign
                    int sign = 1;
                    for (int a = 0; a < m; ++a)
                        for (int b = a + 1; b < m; ++b)
                            if (T[a] > T[b]) sign = -sign;
                    std::sort(T.begin(), T.end());
                    r.add(index.at(T), s, K(sign) * v);
                }
        }
        imgs.push_back(std::move(r));
    }
    return GRep::from_basis(g, imgs);
}

}  // namespace

bool is_spin_node(const LieAlgebra& g, int node) {
    return (g.series() == Series::B && node == 0) || (g.series() == Series::D && (node == 0 || node == 1));
}

GRep spin_grep(Spec g, int node) {
    if (!is_spin_node(*g, node))
        throw std::invalid_argument("node " + std::to_string(node) + " of " + g->name() + " is not a spin node");
    int n = g->n();
    std::vector<Mat> ps(2 * n + 1);
    for (int k = -n; k <= n; ++k) ps[k + n] = psi(n, k);
    int dim = 1 << n;
    GRep full;
    full.g = g;
    full.dim = dim;
    int N = g->N();
    full.F.assign(N * N, Mat(dim, dim));
    for (int k : g->indices())
        for (int l : g->indices()) {
            Mat m = ps[k + n] * ps[-l + n];
            if (k == l) m -= K(1, 2) * Mat::identity(dim);
            full.F[g->pos(k) * N + g->pos(l)] = m;
        }
    if (g->series() == Series::B) return full;
    SVec seed{{node == 0 ? 0 : 1, K(1)}};
    return g_restrict(full, g_cyclic_span(full, seed));
}

GRep fundamental_grep(Spec g, int node) {
    if (node < 0 || node >= g->n()) throw std::invalid_argument("node " + std::to_string(node) + " out of range");
    if (is_spin_node(*g, node)) return spin_grep(g, node);
    int m = (g->series() == Series::C && node == 0) ? g->n() : g->n() - node;
    GRep ext = exterior_grep(g, m);
    // e_{-n} ^ ... ^ e_{-(n-m+1)} is the first tuple (positions 0..m-1).
    return g_restrict(ext, g_cyclic_span(ext, SVec{{0, K(1)}}));
}

GRep g_tensor(const GRep& a, const GRep& b) {
    GRep r;
    r.g = a.g;
    r.dim = a.dim * b.dim;
    Mat Ia = Mat::identity(a.dim), Ib = Mat::identity(b.dim);
    for (size_t k = 0; k < a.F.size(); ++k) r.F.push_back(kron(a.F[k], Ib) + kron(Ia, b.F[k]));
    return r;
}

GRep g_restrict(const GRep& a, const RowSpace& s) {
    GRep r;
    r.g = a.g;
    r.dim = s.rank();
    for (auto& m : a.F) r.F.push_back(restrict_to(s, m));
    return r;
}

RowSpace g_cyclic_span(const GRep& a, const SVec& seed) {
    std::vector<Mat> ms = a.basis_mats();
    std::vector<const Mat*> ops;
    for (auto& m : ms) ops.push_back(&m);
    return cyclic_span({seed}, ops);
}

CheckReport check_grep(const GRep& rep) {
    CheckReport rpt("g-module", "[F,F] bracket");
    Stopwatch sw;
    const LieAlgebra& g = *rep.g;
    for (int i : g.indices())
        for (int j : g.indices())
            rpt.expect_zero(rep.f(i, j) + K(g.theta(i, j)) * rep.f(-j, -i),
                            [&] { return "F" + ij(i, j) + " + theta F" + ij(-j, -i); });
    auto imgs = rep.basis_mats();
    for (int a = 0; a < g.dim(); ++a)
        for (int b = a + 1; b < g.dim(); ++b)
            rpt.expect_zero(comm(imgs[a], imgs[b]) - rep.of(comm(g.basis()[a], g.basis()[b])), [&] {
                auto la = g.labels()[a], lb = g.labels()[b];
                return "[F" + ij(la.i, la.j) + ", F" + ij(lb.i, lb.j) + "]";
            });
    rpt.elapsed = sw.seconds();
    return rpt;
}

// ---------------------------------------------------------------- J presentation

Mat JRep::J_of(const Mat& X) const {
    const LieAlgebra& lie = *g.g;
    std::vector<K> c = lie.coords(X);
    Mat r(dim(), dim());
    for (size_t a = 0; a < c.size(); ++a) {
        if (c[a].is_zero()) continue;
        const Label& l = lie.labels()[a];
        r += c[a] * j(l.i, l.j);
    }
    return r;
}

K fundamental_b(const LieAlgebra& g, int node, const K& a, const K& zeta) {
    K d(g.d(node));
    return d * a + (zeta * d / K(2)) * (K(g.kappa()) - d);
}

K fundamental_j_scalar(const LieAlgebra& g, int node, const K& a, const K& zeta) {
    return fundamental_b(g, node, a, zeta) / K(g.d(node));
}

JRep j_scalar(const GRep& rep, const K& b, const K& zeta) {
    JRep r;
    r.g = rep;
    r.zeta = zeta;
    for (auto& m : rep.F) r.J.push_back(b * m);
    return r;
}

JRep natural_j_rep(Spec g, const K& zeta) {
    require_zeta(zeta);
    return j_scalar(natural_grep(std::move(g)), K(0), zeta);
}

JRep fundamental_j_rep(Spec g, int node, const K& a, const K& zeta) {
    require_zeta(zeta);
    if (node < 0 || node >= g->n()) throw std::invalid_argument("node " + std::to_string(node) + " out of range");
    if (!g->node_allowed(node))
        throw std::invalid_argument("node " + std::to_string(node) + " of " + g->name() + " has mark m_i = " +
                                    std::to_string(g->mark(node)) +
                                    ", which is neither 1 nor (theta,theta)/(alpha_i,alpha_i); "
                                    "J cannot act as a multiple of X");
    return j_scalar(fundamental_grep(g, node), fundamental_j_scalar(*g, node, a, zeta), zeta);
}

JRep j_tensor(const JRep& a, const JRep& b) {
    if (a.zeta != b.zeta) throw std::invalid_argument("tensor factors use different zeta");
    const LieAlgebra& g = *a.spec();
    JRep r;
    r.g = g_tensor(a.g, b.g);
    r.zeta = a.zeta;
    Mat Ia = Mat::identity(a.dim()), Ib = Mat::identity(b.dim());
    Mat omega(r.dim(), r.dim());
    for (auto& x : g.orthonormal()) omega += kron(a.g.of(x), b.g.of(x));
    K half = a.zeta / K(2);
    for (size_t k = 0; k < a.J.size(); ++k)
        r.J.push_back(kron(a.J[k], Ib) + kron(Ia, b.J[k]) + half * comm(kron(a.g.F[k], Ib), omega));
    return r;
}

JRep j_shift(const JRep& a, const K& z) {
    JRep r = a;
    K s = z * a.zeta;
    for (size_t k = 0; k < r.J.size(); ++k) r.J[k] += s * a.g.F[k];
    return r;
}

Mat j_antipode(const JRep& a, int i, int j) { return -a.j(i, j) + (a.zeta * K(a.spec()->kappa())) * a.g.f(i, j); }

CheckReport check_j_relations(const JRep& rep, int triple_budget) {
    CheckReport all("j-relations", "J0-J2");
    Stopwatch sw;
    const LieAlgebra& g = *rep.spec();
    const int D = g.dim();

    CheckReport j0("J0", "J0");
    auto imgs = rep.g.basis_mats();
    std::vector<Mat> jimgs;
    for (auto& l : g.labels()) jimgs.push_back(rep.j(l.i, l.j));
    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b)
            j0.expect_zero(comm(imgs[a], jimgs[b]) - rep.J_of(comm(g.basis()[a], g.basis()[b])), [&] {
                auto la = g.labels()[a], lb = g.labels()[b];
                return "[F" + ij(la.i, la.j) + ", J(F" + ij(lb.i, lb.j) + ")]";
            });
    all.add(std::move(j0));

    CheckReport j1("J1", "J1");
    for (int i : g.indices())
        for (int j : g.indices())
            j1.expect_zero(rep.j(i, j) + K(g.theta(i, j)) * rep.j(-j, -i),
                           [&] { return "J(F" + ij(i, j) + ") + theta J(F" + ij(-j, -i) + ")"; });
    all.add(std::move(j1));

    // Both sides are multilinear, so rational basis tuples suffice, and the Casimir
    // sum over an orthonormal basis equals sum_a F_a (x) F^a with the dual basis F^a.
    const auto& X = g.basis();
    std::vector<Mat> dual;
    {
        std::vector<std::vector<K>> G(D, std::vector<K>(D));
        for (int a = 0; a < D; ++a)
            for (int b = 0; b < D; ++b) G[a][b] = g.form(X[a], X[b]);
        for (int a = 0; a < D; ++a) {
            std::vector<K> e(D), x;
            e[a] = K(1);
            solve_linear(G, e, x);
            dual.push_back(g.from_coords(x));
        }
    }
    std::vector<Mat> rX = imgs, rJ = jimgs, rD, rJD;
    for (auto& x : dual) {
        rD.push_back(rep.g.of(x));
        rJD.push_back(rep.J_of(x));
    }
    std::vector<std::vector<Mat>> XX(D, std::vector<Mat>(D));  // [F_q, F_mu]
    for (int q = 0; q < D; ++q)
        for (int mu = 0; mu < D; ++mu) XX[q][mu] = comm(X[q], X[mu]);
    const K z2 = rep.zeta * rep.zeta;
    // sym3(rho F_c, rho F^mu, rho F^nu), filled on demand
    std::map<std::tuple<int, int, int>, Mat> S;
    auto sym = [&](int c, int mu, int nu) -> const Mat& {
        auto key = std::make_tuple(c, mu, nu);
        auto it = S.find(key);
        if (it != S.end()) return it->second;
        return S.emplace(key, sym3(imgs[c], rD[mu], rD[nu])).first->second;
    };
    // sum_{mu,nu} third(Z_{mu nu}, mu, nu), Z given in the algebra and expanded in the basis
    auto rhs_sum = [&](auto&& Zfn, auto&& third) {
        Mat r(rep.dim(), rep.dim());
        for (int mu = 0; mu < D; ++mu)
            for (int nu = 0; nu < D; ++nu) {
                Mat Z = Zfn(mu, nu);
                if (Z.is_zero()) continue;
                std::vector<K> c = g.coords(Z);
                for (int a = 0; a < D; ++a)
                    if (!c[a].is_zero()) r += c[a] * third(a, mu, nu);
            }
        return r;
    };
    auto lbl = [&](int a) {
        const Label& l = g.labels()[a];
        return "F" + ij(l.i, l.j);
    };

    CheckReport j2("J2", "J2");
    long total = static_cast<long>(D) * D * D;
    long step = 1;
    if (D > 10 && triple_budget > 0) step = std::max<long>(1, (total + triple_budget - 1) / triple_budget);
    int cq = -1, cr = -1;
    std::vector<Mat> C;  // [[F_q, F_mu], [F_r, F_nu]] for the current (q, r)
    for (long t = 0; t < total; t += step) {
        int q = static_cast<int>(t / (D * D)), r = static_cast<int>((t / D) % D), p = static_cast<int>(t % D);
        if (q != cq || r != cr) {
            cq = q;
            cr = r;
            C.assign(D * D, Mat());
            for (int mu = 0; mu < D; ++mu)
                for (int nu = 0; nu < D; ++nu) C[mu * D + nu] = comm(XX[q][mu], XX[r][nu]);
        }
        Mat lhs = comm(rJ[p], comm(rJ[q], rX[r])) - comm(rX[p], comm(rJ[q], rJ[r]));
        Mat rhs = rhs_sum([&](int mu, int nu) { return -comm(X[p], C[mu * D + nu]); },
                          [&](int a, int mu, int nu) -> const Mat& { return sym(a, mu, nu); });
        j2.expect_zero(lhs - z2 * rhs, [&] { return "basis triple (" + lbl(p) + ", " + lbl(q) + ", " + lbl(r) + ")"; });
    }
    if (step > 1) j2.detail = "every " + std::to_string(step) + "th basis triple";
    all.add(std::move(j2));

    if (g.series() == Series::C && g.n() == 1) {
        CheckReport j3("J3", "J3");
        for (int p = 0; p < D; ++p)
            for (int q = 0; q < D; ++q)
                for (int r = 0; r < D; ++r)
                    for (int s = 0; s < D; ++s) {
                        Mat lhs = comm(comm(rJ[p], rJ[q]), comm(rX[r], rJ[s])) +
                                  comm(comm(rJ[r], rJ[s]), comm(rX[p], rJ[q]));
                        Mat X12 = XX[p][q], X34 = XX[r][s];
                        Mat rhs = rhs_sum(
                            [&](int mu, int nu) {
                                return -comm(X[p], comm(XX[q][mu], comm(X34, X[nu]))) -
                                       comm(X[r], comm(XX[s][mu], comm(X12, X[nu])));
                            },
                            [&](int a, int mu, int nu) { return sym3(imgs[a], rD[mu], rJD[nu]); });
                        j3.expect_zero(lhs - z2 * rhs, [&] {
                            return "basis quadruple (" + lbl(p) + ", " + lbl(q) + ", " + lbl(r) + ", " + lbl(s) + ")";
                        });
                    }
        all.add(std::move(j3));
    }
    all.elapsed = sw.seconds();
    return all;
}

// ---------------------------------------------------------------- current presentation

namespace {

const Mat& cur_at(const std::vector<std::vector<Mat>>& t, int i, int r, const char* what) {
    if (i < 0 || i >= static_cast<int>(t.size())) throw std::out_of_range(std::string(what) + ": node out of range");
    if (r < 0 || r >= static_cast<int>(t[i].size()))
        throw std::out_of_range(std::string(what) + ": degree " + std::to_string(r) + " beyond the generated range");
    return t[i][r];
}

}  // namespace

const Mat& CurRep::Xp(int i, int r) const { return cur_at(xp, i, r, "x+"); }
const Mat& CurRep::Xm(int i, int r) const { return cur_at(xm, i, r, "x-"); }
const Mat& CurRep::H(int i, int r) const { return cur_at(h, i, r, "h"); }

CurRep natural_current_rep(Spec g, const K& zeta, int rmax) {
    require_zeta(zeta);
    const LieAlgebra& G = *g;
    CurRep c;
    c.zeta = zeta;
    c.dim = G.N();
    c.rmax = rmax;
    int n = G.n();
    c.xp.assign(n, {});
    c.xm.assign(n, {});
    c.h.assign(n, {});
    K a;
    switch (G.series()) {
        case Series::B: a = -zeta / K(4); break;
        case Series::C: a = zeta / K(2); break;
        case Series::D: a = -zeta / K(2); break;
    }
    auto E = [&](int i, int j) { return G.E(i, j); };
    for (int r = 0; r <= rmax; ++r) {
        for (int i = 1; i <= n - 1; ++i) {
            K cr = (a + K(i) * zeta / K(2)).pow(r), mr = (-(a + K(i) * zeta / K(2))).pow(r);
            c.xp[i].push_back(cr * E(i, i + 1) - mr * E(-i - 1, -i));
            c.xm[i].push_back(cr * E(i + 1, i) - mr * E(-i, -i - 1));
            c.h[i].push_back(cr * (E(i, i) - E(i + 1, i + 1)) - mr * (E(-i, -i) - E(-i - 1, -i - 1)));
        }
        if (G.series() == Series::B) {
            K lo = (-zeta / K(4)).pow(r), hi = (zeta / K(4)).pow(r);
            c.xp[0].push_back(lo * E(0, 1) - hi * E(-1, 0));
            c.xm[0].push_back(lo * E(1, 0) - hi * E(0, -1));
            c.h[0].push_back(lo * (E(0, 0) - E(1, 1)) + hi * (E(-1, -1) - E(0, 0)));
        } else {
            K d = r == 0 ? K(1) : K(0);
            const Chevalley& ch = G.chevalley()[0];
            c.xp[0].push_back(d * ch.xp);
            c.xm[0].push_back(d * ch.xm);
            c.h[0].push_back(d * ch.h);
        }
    }
    c.g = std::move(g);
    return c;
}

CurRep cur_shift(const CurRep& rep, const K& b) {
    CurRep c = rep;
    auto shift_table = [&](std::vector<std::vector<Mat>>& t, const std::vector<std::vector<Mat>>& src) {
        for (size_t i = 0; i < src.size(); ++i)
            for (size_t r = 0; r < src[i].size(); ++r) {
                Mat m(rep.dim, rep.dim);
                for (size_t s = 0; s <= r; ++s)
                    m += (K(binom(static_cast<long>(r), static_cast<long>(s))) * b.pow(static_cast<long>(r - s))) *
                         src[i][s];
                t[i][r] = std::move(m);
            }
    };
    shift_table(c.xp, rep.xp);
    shift_table(c.xm, rep.xm);
    shift_table(c.h, rep.h);
    return c;
}

namespace {

std::string gen(const char* s, int i, int r) { return std::string(s) + "_{" + std::to_string(i) + "," + std::to_string(r) + "}"; }

void serre(CheckReport& rpt, const CurRep& c) {
    const LieAlgebra& g = *c.g;
    int n = g.n();
    for (int sgn : {1, -1})
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                int m = 1 - g.cartan(i, j);
                Mat t = c.X(sgn, j, 0);
                for (int k = 0; k < m; ++k) t = comm(c.X(sgn, i, 0), t);
                rpt.expect_zero(t, [&] {
                    return "ad(" + gen(sgn > 0 ? "x+" : "x-", i, 0) + ")^" + std::to_string(m) + " " +
                           gen(sgn > 0 ? "x+" : "x-", j, 0);
                });
            }
}

}  // namespace

CheckReport check_current_relations(const CurRep& c, int rmax, int smax) {
    CheckReport all("current-relations", "Ycr1-Ycr4");
    Stopwatch sw;
    const LieAlgebra& g = *c.g;
    const int n = g.n();
    const K hz = c.zeta / K(2);

    CheckReport y1("Ycr1", "Ycr1");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r <= rmax; ++r)
                for (int s = 0; s <= smax; ++s) {
                    y1.expect_zero(comm(c.H(i, r), c.H(j, s)), [&] { return "[" + gen("h", i, r) + ", " + gen("h", j, s) + "]"; });
                    y1.expect_zero(comm(c.Xp(i, r), c.Xm(j, s)) - (i == j ? c.H(i, r + s) : Mat(c.dim, c.dim)),
                                   [&] { return "[" + gen("x+", i, r) + ", " + gen("x-", j, s) + "]"; });
                }
    for (int sgn : {1, -1})
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int s = 0; s <= smax; ++s)
                    y1.expect_zero(comm(c.H(i, 0), c.X(sgn, j, s)) - K(sgn * g.pairing(i, j)) * c.X(sgn, j, s),
                                   [&] { return "[" + gen("h", i, 0) + ", " + gen(sgn > 0 ? "x+" : "x-", j, s) + "]"; });
    all.add(std::move(y1));

    CheckReport y2("Ycr2", "Ycr2"), y3("Ycr3", "Ycr3");
    for (int sgn : {1, -1})
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                K f = K(sgn) * hz * K(g.pairing(i, j));
                const char* xs = sgn > 0 ? "x+" : "x-";
                for (int r = 0; r <= rmax; ++r)
                    for (int s = 0; s <= smax; ++s) {
                        y2.expect_zero(comm(c.H(i, r + 1), c.X(sgn, j, s)) - comm(c.H(i, r), c.X(sgn, j, s + 1)) -
                                           f * anticomm(c.H(i, r), c.X(sgn, j, s)),
                                       [&] { return "(" + gen("h", i, r) + ", " + gen(xs, j, s) + ")"; });
                        y3.expect_zero(comm(c.X(sgn, i, r + 1), c.X(sgn, j, s)) -
                                           comm(c.X(sgn, i, r), c.X(sgn, j, s + 1)) -
                                           f * anticomm(c.X(sgn, i, r), c.X(sgn, j, s)),
                                       [&] { return "(" + gen(xs, i, r) + ", " + gen(xs, j, s) + ")"; });
                    }
            }
    all.add(std::move(y2));
    all.add(std::move(y3));

    CheckReport y4("Ycr4", "Ycr4");
    serre(y4, c);
    all.add(std::move(y4));
    all.elapsed = sw.seconds();
    return all;
}

CheckReport check_minimal_relations(const CurRep& c) {
    CheckReport all("minimal-relations", "Le1-Le3");
    Stopwatch sw;
    const LieAlgebra& g = *c.g;
    const int n = g.n();
    const K hz = c.zeta / K(2);
    Mat zero(c.dim, c.dim);
    auto ht = [&](int i) { return c.H(i, 1) - hz * (c.H(i, 0) * c.H(i, 0)); };

    CheckReport l1("Le1", "Le1");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int r = 0; r <= 1; ++r)
                for (int s = 0; s <= 1; ++s)
                    l1.expect_zero(comm(c.H(i, r), c.H(j, s)), [&] { return "[" + gen("h", i, r) + ", " + gen("h", j, s) + "]"; });
            for (int r = 0; r <= 1; ++r)
                for (int s = 0; r + s <= 1; ++s)
                    l1.expect_zero(comm(c.Xp(i, r), c.Xm(j, s)) - (i == j ? c.H(i, r + s) : zero),
                                   [&] { return "[" + gen("x+", i, r) + ", " + gen("x-", j, s) + "]"; });
            for (int sgn : {1, -1})
                for (int s = 0; s <= 1; ++s)
                    l1.expect_zero(comm(c.H(i, 0), c.X(sgn, j, s)) - K(sgn * g.pairing(i, j)) * c.X(sgn, j, s),
                                   [&] { return "[" + gen("h", i, 0) + ", " + gen(sgn > 0 ? "x+" : "x-", j, s) + "]"; });
        }
    all.add(std::move(l1));

    CheckReport l2("Le2", "Le2"), l3("Le3", "Le3");
    for (int sgn : {1, -1})
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                K p(g.pairing(i, j));
                const char* xs = sgn > 0 ? "x+" : "x-";
                l2.expect_zero(comm(ht(i), c.X(sgn, j, 0)) - K(sgn) * p * c.X(sgn, j, 1),
                               [&] { return "[htilde_" + std::to_string(i) + ", " + gen(xs, j, 0) + "]"; });
                l3.expect_zero(comm(c.X(sgn, i, 1), c.X(sgn, j, 0)) - comm(c.X(sgn, i, 0), c.X(sgn, j, 1)) -
                                   K(sgn) * hz * p * anticomm(c.X(sgn, i, 0), c.X(sgn, j, 0)),
                               [&] { return "(" + gen(xs, i, 1) + ", " + gen(xs, j, 0) + ")"; });
            }
    serre(l3, c);
    all.add(std::move(l2));
    all.add(std::move(l3));

    if (n == 1) {
        CheckReport ex("sl2-extra", "sl2 extra relation");
        ex.expect_zero(comm(comm(c.Xp(0, 1), c.Xm(0, 1)), c.H(0, 1)), [] { return "[[x+_1, x-_1], h_1]"; });
        all.add(std::move(ex));
    }
    all.elapsed = sw.seconds();
    return all;
}

// ---------------------------------------------------------------- RTT presentation

const Mat& RTTRep::t(int r, int i, int j) const {
    if (r < 0 || r > order) throw std::out_of_range("t^(" + std::to_string(r) + ") beyond the expanded order");
    return coef[r][g->pos(i) * g->N() + g->pos(j)];
}

void RTTRep::expand() {
    int e = den.degree();
    for (auto& m : M)
        if (m.degree() > e) throw std::domain_error("RTT numerator degree exceeds the denominator degree");
    TruncSeriesU inv = ratfun_to_series(RatFunU(PolyU(K(1)), den), order + e);
    TruncSeriesU ph = phi.truncated(order);
    coef.assign(order + 1, std::vector<Mat>(M.size(), Mat(dim, dim)));
    K zinv = zeta.inverse();
    for (size_t ij = 0; ij < M.size(); ++ij) {
        // coefficient p of M/den: sum_k M_k inv[p + k]
        std::vector<Mat> md(order + 1, Mat(dim, dim));
        for (int p = 0; p <= order; ++p)
            for (int k = 0; k <= M[ij].degree(); ++k) {
                K s = inv[p + k];
                if (!s.is_zero()) md[p] += s * M[ij].coeffs()[k];
            }
        K zr(1);
        for (int r = 0; r <= order; ++r) {
            Mat acc(dim, dim);
            for (int q = 0; q <= r; ++q)
                if (!ph[q].is_zero()) acc += ph[q] * md[r - q];
            coef[r][ij] = zr * acc;
            zr *= zinv;
        }
    }
}

TruncSeriesU natural_prefactor(const Q& kappa, int order) {
    PolyU u2 = PolyU::monomial(K(1), 2);
    TruncSeriesU q = ratfun_to_series(RatFunU{u2, u2 - PolyU(K(1))}, order);
    return solve_half_shift(q, K(kappa));
}

TruncSeriesU spin_prefactor(const Q& kappa, int order) {
    PolyU p = PolyU(std::vector<K>{K(0), K(4) * K(kappa), K(4)});  // 4u(u + kappa)
    TruncSeriesU q = ratfun_to_series(RatFunU{p, p - PolyU(K(2) * K(kappa) + K(1))}, order);
    return solve_half_shift(q, K(kappa));
}

RTTRep rtt_identity(Spec g, const K& zeta, int order) {
    require_zeta(zeta);
    RTTRep r;
    r.zeta = zeta;
    r.dim = 1;
    r.order = order;
    r.phi = TruncSeriesU(order, K(1));
    r.den = PolyU(K(1));
    int N = g->N();
    r.M.assign(N * N, MatPolyU(1));
    for (int i = 0; i < N; ++i) r.M[i * N + i] = MatPolyU(Mat::identity(1), PolyU(K(1)));
    r.g = std::move(g);
    r.expand();
    return r;
}

RTTRep rtt_natural_rep(Spec g, const K& zeta, int order) {
    require_zeta(zeta);
    const LieAlgebra& G = *g;
    RTTRep r;
    r.zeta = zeta;
    r.dim = G.N();
    r.order = order;
    K zk = zeta * K(G.kappa());
    PolyU u = PolyU::monomial(K(1), 1);
    PolyU um = u - PolyU(zk);
    r.den = u * um;
    r.phi = series_rescale(natural_prefactor(G.kappa(), order), zeta);
    int N = G.N();
    r.M.assign(N * N, MatPolyU(N));
    for (int i : G.indices())
        for (int j : G.indices()) {
            MatPolyU m(N);
            if (i == j) m += MatPolyU(Mat::identity(N), r.den);
            m += MatPolyU(G.E(i, j), zeta * u);
            m -= MatPolyU(G.E(-j, -i), K(G.theta(i, j)) * zeta * um);
            r.M[G.pos(i) * N + G.pos(j)] = std::move(m);
        }
    r.g = std::move(g);
    r.expand();
    return r;
}

RTTRep rtt_spin_rep(Spec g, int node, const K& zeta, int order) {
    require_zeta(zeta);
    GRep s = spin_grep(g, node);
    RTTRep r;
    r.zeta = zeta;
    r.dim = s.dim;
    r.order = order;
    PolyU u = PolyU::monomial(K(1), 1);
    r.den = u;
    r.phi = series_rescale(spin_prefactor(g->kappa(), order), zeta);
    int N = g->N();
    r.M.assign(N * N, MatPolyU(s.dim));
    for (int k : g->indices())
        for (int l : g->indices()) {
            MatPolyU m(s.dim);
            if (k == l) m += MatPolyU(Mat::identity(s.dim), u);
            m += MatPolyU(s.f(k, l), PolyU(zeta));
            r.M[g->pos(k) * N + g->pos(l)] = std::move(m);
        }
    r.g = std::move(g);
    r.expand();
    return r;
}

RTTRep rtt_tensor(const RTTRep& a, const RTTRep& b) {
    if (a.zeta != b.zeta) throw std::invalid_argument("tensor factors use different zeta");
    RTTRep r;
    r.g = a.g;
    r.zeta = a.zeta;
    r.dim = a.dim * b.dim;
    r.order = std::min(a.order, b.order);
    r.phi = (a.phi * b.phi).truncated(r.order);
    r.den = a.den * b.den;
    int N = a.g->N();
    r.M.assign(N * N, MatPolyU(r.dim));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) r.M[i * N + j] += kron(a.M[i * N + k], b.M[k * N + j]);
    r.expand();
    return r;
}

RTTRep rtt_shift(const RTTRep& a, const K& c) {
    RTTRep r = a;
    r.den = a.den.shift(-c);
    r.phi = series_shift(a.phi, -c);
    for (auto& m : r.M) m = m.shift(-c);
    r.expand();
    return r;
}

RTTRep rtt_restrict(const RTTRep& a, const RowSpace& s) {
    RTTRep r = a;
    r.dim = s.rank();
    for (auto& m : r.M) m = m.map([&](const Mat& x) { return restrict_to(s, x); }, r.dim);
    r.expand();
    return r;
}

CheckReport check_rtt_relations(const RTTRep& rep) {
    CheckReport all("rtt-relations", "RTT");
    Stopwatch sw;
    const LieAlgebra& g = *rep.g;
    const int N = g.N();
    const auto& idx = g.indices();
    const K zk = rep.zeta * K(g.kappa());
    int degM = 0;
    for (auto& m : rep.M) degM = std::max(degM, m.degree());

    // R~(w) M1(u) M2(v) = M2(v) M1(u) R~(w), w = u - v; bidegree <= degM + 2 in (u, v).
    CheckReport rtt("RTT", "RTT");
    const int G = degM + 3;
    std::vector<K> us, vs;
    for (int a = 0; a < G; ++a) {
        us.push_back(K(a + 1));
        vs.push_back(K(2 * a - 1, 3));
    }
    auto evals = [&](const std::vector<K>& pts) {
        std::vector<std::vector<Mat>> out;
        for (auto& p : pts) {
            std::vector<Mat> row;
            for (auto& m : rep.M) row.push_back(m.eval(p));
            out.push_back(std::move(row));
        }
        return out;
    };
    auto Mu = evals(us), Mv = evals(vs);
    for (int a = 0; a < G; ++a)
        for (int b = 0; b < G; ++b) {
            const auto& TU = Mu[a];
            const auto& TV = Mv[b];
            auto tu = [&](int i, int j) -> const Mat& { return TU[g.pos(i) * N + g.pos(j)]; };
            auto tv = [&](int i, int j) -> const Mat& { return TV[g.pos(i) * N + g.pos(j)]; };
            K w = us[a] - vs[b];
            K al = w * (w - zk), be = -rep.zeta * (w - zk), ga = rep.zeta * w;
            bool ok = true;
            for (int i : idx)
                for (int j : idx)
                    for (int k : idx)
                        for (int l : idx) {
                            if (!ok) continue;
                            Mat lhs = al * (tu(i, j) * tv(k, l)) + be * (tu(k, j) * tv(i, l));
                            Mat rhs = al * (tv(k, l) * tu(i, j)) + be * (tv(k, j) * tu(i, l));
                            if (k == -i)
                                for (int x : idx) lhs += (ga * K(g.theta(i, x))) * (tu(x, j) * tv(-x, l));
                            if (l == -j)
                                for (int x : idx) rhs += (ga * K(g.theta(x, j))) * (tv(k, -x) * tu(i, x));
                            Mat res = lhs - rhs;
                            rtt.expect_zero(res, [&] {
                                return "entry (" + std::to_string(i) + std::to_string(k) + "," + std::to_string(j) +
                                       std::to_string(l) + ") at u=" + us[a].str() + ", v=" + vs[b].str();
                            });
                            ok = res.is_zero();
                        }
        }
    all.add(std::move(rtt));

    // Unitarity: sum_a theta_aj M_ia(u) M_{-j,-a}(u + zeta kappa) = p(u) delta_ij.
    CheckReport un("unitarity", "T T^t = 1");
    std::vector<MatPolyU> Ms;
    for (auto& m : rep.M) Ms.push_back(m.shift(zk));
    auto m0 = [&](int i, int j) -> const MatPolyU& { return rep.M[g.pos(i) * N + g.pos(j)]; };
    auto ms = [&](int i, int j) -> const MatPolyU& { return Ms[g.pos(i) * N + g.pos(j)]; };
    Mat I = Mat::identity(rep.dim);
    PolyU p;
    bool have_p = false;
    for (int form = 0; form < 2; ++form)
        for (int i : idx)
            for (int j : idx) {
                MatPolyU s(rep.dim);
                for (int x : idx) {
                    if (form == 0)
                        s += PolyU(K(g.theta(x, j))) * (m0(i, x) * ms(-j, -x));
                    else
                        s += PolyU(K(g.theta(i, x))) * (ms(-x, -i) * m0(x, j));
                }
                if (!have_p) {
                    std::vector<K> pc;
                    for (int k = 0; k <= s.degree(); ++k) pc.push_back(s.coeffs()[k].get(0, 0));
                    p = PolyU(pc);
                    have_p = true;
                }
                MatPolyU expect = (i == j) ? MatPolyU(I, p) : MatPolyU(rep.dim);
                MatPolyU diff = s - expect;
                Mat res = diff.is_zero() ? Mat(rep.dim, rep.dim) : diff.coeffs().back();
                un.expect_zero(res, [&] {
                    return std::string(form == 0 ? "T(u)T^t(u+zeta kappa)" : "T^t(u+zeta kappa)T(u)") + " entry (" +
                           std::to_string(i) + "," + std::to_string(j) + ")";
                });
            }
    TruncSeriesU scal = ratfun_to_series(RatFunU{p, rep.den * rep.den.shift(zk)}, rep.order);
    TruncSeriesU prod = rep.phi.truncated(rep.order) * series_shift(rep.phi.truncated(rep.order), zk) * scal;
    un.expect(prod == TruncSeriesU(rep.order, K(1)),
              [&] { return "scalar factor phi(u)phi(u+zeta kappa)p(u)/(d(u)d(u+zeta kappa)) = " + prod.str(); });
    un.detail = "polynomial part exact; scalar prefactor to order " + std::to_string(rep.order);
    all.add(std::move(un));
    all.elapsed = sw.seconds();
    return all;
}

}  // namespace yang
