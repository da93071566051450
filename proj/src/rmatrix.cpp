#include "yangian/rmatrix.hpp"

#include <map>
#include <stdexcept>

namespace yang {

// ---------------------------------------------------------------- RatMatrix

Mat RatMatrix::eval(const K& u) const {
    K d = den.eval(u);
    if (d.is_zero()) throw PoleError(u);
    return d.inverse() * num.eval(u);
}

RatFunU RatMatrix::entry(int r, int c) const {
    std::vector<K> pc;
    for (auto& m : num.coeffs()) pc.push_back(m.get(r, c));
    return RatFunU{PolyU(pc), den};
}

RatMatrix RatMatrix::shift(const K& c) const {
    RatMatrix r = *this;
    r.num = num.shift(c);
    r.den = den.shift(c);
    return r;
}

RatMatrix RatMatrix::negate_arg() const {
    RatMatrix r = *this;
    r.num = MatPolyU(dim);
    for (int k = 0; k <= num.degree(); ++k) r.num += MatPolyU(num.coeffs()[k], PolyU::monomial(K(k % 2 ? -1 : 1), k));
    std::vector<K> dc = den.coeffs();
    for (size_t k = 1; k < dc.size(); k += 2) dc[k] = -dc[k];
    r.den = PolyU(dc);
    return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r;
    r.dim = a.dim;
    r.num = a.num * b.num;
    r.den = a.den * b.den;
    r.classical = a.classical && b.classical;
    return r;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.dim == b.dim && b.den * a.num == a.den * b.num;
}

bool proportional(const RatMatrix& a, const RatMatrix& b, RatFunU* ratio) {
    if (a.dim != b.dim || b.num.is_zero()) return false;
    // first nonzero entry of b
    int r = -1, c = -1;
    for (auto& m : b.num.coeffs()) {
        K v;
        if (m.first_nonzero(r, c, v)) break;
    }
    RatFunU ea = a.entry(r, c), eb = b.entry(r, c);
    PolyU x0 = ea.num(), y0 = eb.num();
    if (!(y0 * a.num == x0 * b.num)) return false;
    if (ratio) *ratio = (ea / eb).normalized();
    return true;
}

// ---------------------------------------------------------------- R(u)

namespace {

RatMatrix r_matrix_impl(const LieAlgebra& g, const K& zeta, bool with_q, const K& pole) {
    RatMatrix R;
    int N = g.N();
    R.dim = N * N;
    Mat I = Mat::identity(N * N);
    if (zeta.is_zero()) {
        R.num = MatPolyU(I, PolyU(K(1)));
        R.den = PolyU(K(1));
        R.classical = true;
        return R;
    }
    PolyU u = PolyU::monomial(K(1), 1);
    PolyU um = u - PolyU(pole);
    R.den = u * um;
    R.num = MatPolyU(I, R.den) - MatPolyU(g.P(), zeta * um);
    if (with_q) R.num += MatPolyU(g.Qop(), zeta * u);
    return R;
}

std::string kstr(const K& k) { return k.str(); }

}  // namespace

RatMatrix r_matrix(const LieAlgebra& g, const K& zeta) { return r_matrix_impl(g, zeta, true, zeta * K(g.kappa())); }
RatMatrix r_matrix_without_q(const LieAlgebra& g, const K& zeta) {
    RatMatrix R = r_matrix_impl(g, zeta, false, K(0));
    if (!zeta.is_zero()) {
        R.num = MatPolyU(Mat::identity(R.dim), PolyU::monomial(K(1), 1)) - MatPolyU(g.P(), PolyU(zeta));
        R.den = PolyU::monomial(K(1), 1);
    }
    return R;
}
RatMatrix r_matrix_with_pole(const LieAlgebra& g, const K& zeta, const K& c) { return r_matrix_impl(g, zeta, true, c); }

Mat partial_transpose(const LieAlgebra& g, const Mat& m, int slot) {
    int N = g.N();
    if (m.rows() != N * N) throw std::invalid_argument("partial transpose needs an operator on C^N (x) C^N");
    if (slot != 1 && slot != 2) throw std::invalid_argument("tensor slot must be 1 or 2");
    const auto& idx = g.indices();
    Mat r(N * N, N * N);
    for (int row = 0; row < N * N; ++row)
        for (auto& [col, v] : m.row(row)) {
            // entry of E_{ac} (x) E_{bd}
            int a = idx[row / N], b = idx[row % N], c = idx[col / N], d = idx[col % N];
            if (slot == 1)
                r.add(g.pos(-c) * N + g.pos(b), g.pos(-a) * N + g.pos(d), K(g.theta(a, c)) * v);
            else
                r.add(g.pos(a) * N + g.pos(-d), g.pos(c) * N + g.pos(-b), K(g.theta(b, d)) * v);
        }
    return r;
}

RatMatrix partial_transpose(const LieAlgebra& g, const RatMatrix& m, int slot) {
    RatMatrix r = m;
    r.num = m.num.map([&](const Mat& x) { return partial_transpose(g, x, slot); }, m.dim);
    return r;
}

CheckReport check_qybe(const LieAlgebra& g, const RatMatrix& R, const K& zeta) {
    CheckReport rpt("qybe", "eq YBE");
    Stopwatch sw;
    const int N = g.N(), N2 = N * N, N3 = N2 * N;
    const int dn = std::max(0, R.num.degree());
    const int G = 2 * dn + 1;  // degree <= 2 dn in each of u, v
    // Rational points with no pole of den(u), den(v), den(u - v).
    std::vector<K> us, vs;
    for (int base = 10;; base *= 3) {
        us.clear();
        vs.clear();
        for (int a = 0; a < G; ++a) {
            us.push_back(K(base + a) + K(1, 7));
            vs.push_back(K(-a) - K(1, 11));
        }
        bool ok = true;
        for (auto& u : us) ok &= !R.den.eval(u).is_zero();
        for (auto& v : vs) ok &= !R.den.eval(v).is_zero();
        for (auto& u : us)
            for (auto& v : vs) ok &= !R.den.eval(u - v).is_zero();
        if (ok) break;
    }
    Mat IN = Mat::identity(N);
    auto r13 = [&](const Mat& M) {
        Mat r(N3, N3);
        for (int row = 0; row < N2; ++row)
            for (auto& [col, v] : M.row(row)) {
                int a = row / N, c = row % N, a2 = col / N, c2 = col % N;
                for (int b = 0; b < N; ++b) r.add(a * N2 + b * N + c, a2 * N2 + b * N + c2, v);
            }
        return r;
    };
    std::vector<Mat> Ru, Rv;
    for (auto& u : us) Ru.push_back(r13(R.num.eval(u)));
    for (auto& v : vs) Rv.push_back(kron(IN, R.num.eval(v)));
    for (int a = 0; a < G; ++a)
        for (int b = 0; b < G; ++b) {
            Mat R12 = kron(R.num.eval(us[a] - vs[b]), IN);
            Mat res = R12 * Ru[a] * Rv[b] - Rv[b] * Ru[a] * R12;
            rpt.expect_zero(res, [&] { return "u=" + kstr(us[a]) + ", v=" + kstr(vs[b]); });
        }
    rpt.detail = g.name() + ", zeta=" + zeta.str() + ", grid " + std::to_string(G) + "x" + std::to_string(G) +
                 " on cleared numerators of degree " + std::to_string(dn);
    rpt.elapsed = sw.seconds();
    return rpt;
}

CheckReport check_qybe(const LieAlgebra& g, const K& zeta) { return check_qybe(g, r_matrix(g, zeta), zeta); }

CheckReport check_unitarity_crossing(const LieAlgebra& g, const K& zeta) {
    CheckReport rpt("r-unitarity-crossing", "R(u)R(-u), R(u)R(u+zeta kappa)^t");
    Stopwatch sw;
    RatMatrix R = r_matrix(g, zeta);
    RatMatrix target;
    target.dim = R.dim;
    PolyU u2 = PolyU::monomial(K(1), 2);
    target.num = MatPolyU(Mat::identity(R.dim), u2 - PolyU(zeta * zeta));
    target.den = u2;
    rpt.expect(R * R.negate_arg() == target, [] { return std::string("R(u)R(-u) != (1 - zeta^2/u^2) I"); });
    RatMatrix cross = partial_transpose(g, R.shift(zeta * K(g.kappa())), 1);
    rpt.expect(R * cross == target, [] { return std::string("R(u)R(u+zeta kappa)^{t1} != (1 - zeta^2/u^2) I"); });
    rpt.expect(cross == R.negate_arg(), [] { return std::string("R(u+zeta kappa)^{t1} != R(-u)"); });
    rpt.elapsed = sw.seconds();
    return rpt;
}

CheckReport check_tensor_identities(const LieAlgebra& g) {
    CheckReport rpt("tensor-identities", "P, Q, Omega");
    Stopwatch sw;
    const int N = g.N();
    Mat P = g.P(), Qm = g.Qop(), I = Mat::identity(N * N);
    int sign = g.symplectic() ? -1 : 1;
    rpt.expect_zero(P * P - I, [] { return "P^2 - I"; });
    rpt.expect_zero(Qm * Qm - K(N) * Qm, [] { return "Q^2 - N Q"; });
    rpt.expect_zero(P * Qm - K(sign) * Qm, [] { return "PQ -+ Q"; });
    rpt.expect_zero(Qm * P - K(sign) * Qm, [] { return "QP -+ Q"; });
    rpt.expect_zero(partial_transpose(g, P, 1) - Qm, [] { return "P^{t1} - Q"; });
    rpt.expect_zero(partial_transpose(g, P, 2) - Qm, [] { return "P^{t2} - Q"; });
    rpt.expect_zero(partial_transpose(g, partial_transpose(g, Qm + K(3) * P, 1), 1) - (Qm + K(3) * P),
                    [] { return "(M^{t1})^{t1} - M"; });
    Mat omega = g.omega_natural();
    rpt.expect_zero(omega - (P - Qm), [] { return "Omega - (P - Q)"; });
    Mat IN = Mat::identity(N);
    for (size_t a = 0; a < g.basis().size(); ++a) {
        const Mat& X = g.basis()[a];
        rpt.expect_zero(comm(kron(X, IN) + kron(IN, X), omega), [&] {
            return "[Delta F(" + std::to_string(g.labels()[a].i) + "," + std::to_string(g.labels()[a].j) + "), Omega]";
        });
    }
    rpt.detail = g.name();
    rpt.elapsed = sw.seconds();
    return rpt;
}

CheckReport check_casimir(const LieAlgebra& g) {
    CheckReport rpt("casimir", "Casimir 4 kappa");
    Stopwatch sw;
    Mat c(g.dim(), g.dim());
    for (auto& x : g.orthonormal()) {
        Mat a = g.ad(x);
        c += a * a;
    }
    rpt.expect_zero(c - K(4) * K(g.kappa()) * Mat::identity(g.dim()), [] { return "sum ad(X)^2 - 4 kappa"; });
    rpt.detail = g.name();
    rpt.elapsed = sw.seconds();
    return rpt;
}

std::vector<Mat> projectors(const LieAlgebra& g) {
    const int N = g.N();
    Mat P = g.P(), Qm = g.Qop(), I = Mat::identity(N * N);
    K h(1, 2), qn = K(1) / K(N);
    if (N == 2) return {K(1, 2) * Qm, h * (I + P)};
    if (g.symplectic()) return {qn * Qm, h * (I - P) - qn * Qm, h * (I + P)};
    return {qn * Qm, h * (I + P) - qn * Qm, h * (I - P)};
}

CheckReport check_projectors(const LieAlgebra& g) {
    CheckReport rpt("projectors", "projector decomposition");
    Stopwatch sw;
    auto pi = projectors(g);
    const int N = g.N();
    Mat sum(N * N, N * N);
    for (size_t a = 0; a < pi.size(); ++a) {
        sum += pi[a];
        rpt.expect_zero(pi[a] * pi[a] - pi[a], [&] { return "pi_" + std::to_string(a + 1) + "^2 - pi"; });
        for (size_t b = 0; b < pi.size(); ++b)
            if (a != b)
                rpt.expect_zero(pi[a] * pi[b], [&] { return "pi_" + std::to_string(a + 1) + " pi_" + std::to_string(b + 1); });
        Mat IN = Mat::identity(N);
        for (auto& X : g.basis()) rpt.expect_zero(comm(pi[a], kron(X, IN) + kron(IN, X)), [&] { return "[pi, Delta X]"; });
    }
    rpt.expect_zero(sum - Mat::identity(N * N), [] { return "sum pi - I"; });
    rpt.expect(pi[0].trace() == K(1), [] { return std::string("rank pi_1 != 1"); });
    rpt.elapsed = sw.seconds();
    return rpt;
}

TruncSeriesU h_series(const LieAlgebra& g, const K& zeta, int order) {
    PolyU u2 = PolyU::monomial(K(1), 2);
    TruncSeriesU q = ratfun_to_series(RatFunU{u2, u2 - PolyU(zeta * zeta)}, order);
    return solve_half_shift(q, zeta * K(g.kappa()));
}

namespace {

// Coefficients of u^0..u^-order of num/den.
std::vector<Mat> ratmatrix_series(const RatMatrix& R, int order) {
    int e = R.den.degree();
    TruncSeriesU inv = ratfun_to_series(RatFunU{PolyU(K(1)), R.den}, order + e);
    std::vector<Mat> out(order + 1, Mat(R.dim, R.dim));
    for (int p = 0; p <= order; ++p)
        for (int k = 0; k <= R.num.degree(); ++k)
            if (!inv[p + k].is_zero()) out[p] += inv[p + k] * R.num.coeffs()[k];
    return out;
}

}  // namespace

CheckReport check_log_r(const LieAlgebra& g, const K& zeta) {
    CheckReport rpt("log-r", "h-hk, lnR to order 2");
    Stopwatch sw;
    const int N = g.N();
    TruncSeriesU h = h_series(g, zeta, 8);
    rpt.expect(h[1].is_zero(), [&] { return "h_1 = " + h[1].str(); });
    rpt.expect(h[2] == zeta * zeta / K(2), [&] { return "h_2 = " + h[2].str(); });
    // h(u) h(u + zeta kappa) (1 - zeta^2 u^-2) = 1
    TruncSeriesU one_minus(8, K(1));
    one_minus[2] = -zeta * zeta;
    TruncSeriesU prod = h * series_shift(h, zeta * K(g.kappa())) * one_minus;
    rpt.expect(prod == TruncSeriesU(8, K(1)), [&] { return "h(u)h(u+zeta kappa)(1-zeta^2/u^2) = " + prod.str(); });
    Mat P = g.P(), Qm = g.Qop(), I = Mat::identity(N * N);
    Mat PQ = P - Qm;
    rpt.expect_zero(PQ * PQ - I - K(2) * K(g.kappa()) * Qm, [] { return "(P-Q)^2 - I - 2 kappa Q"; });
    auto Rs = ratmatrix_series(r_matrix(g, zeta), 2);
    std::vector<Mat> expect = {I, -zeta * PQ, (zeta * zeta / K(2)) * (PQ * PQ)};
    for (int k = 0; k <= 2; ++k) {
        Mat hr(N * N, N * N);
        for (int q = 0; q <= k; ++q) hr += h[q] * Rs[k - q];
        rpt.expect_zero(hr - expect[k], [&] { return "coefficient u^-" + std::to_string(k) + " of h(u)R(u)"; });
    }
    rpt.detail = g.name() + ", zeta=" + zeta.str() + ", order 2";
    rpt.elapsed = sw.seconds();
    return rpt;
}

// ---------------------------------------------------------------- intertwiner solver

namespace {

std::vector<SVec> commutator_rows(const Mat& X, int dim) {
    // rows of M -> [X, M] in the dim^2 entries of M (variable a*dim + b)
    Mat Xt = X.transpose();
    std::vector<SVec> rows;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            std::map<int, K> acc;
            for (auto& [c, v] : X.row(a)) acc[c * dim + b] += v;
            for (auto& [c, v] : Xt.row(b)) acc[a * dim + c] -= v;
            SVec r;
            for (auto& [k, v] : acc)
                if (!v.is_zero()) r.emplace_back(k, v);
            if (!r.empty()) rows.push_back(std::move(r));
        }
    return rows;
}

Mat from_entries(const SVec& v, int dim) {
    Mat m(dim, dim);
    for (auto& [k, x] : v) m.set(k / dim, k % dim, x);
    return m;
}

struct SeriesSolution {
    int rank = 0;
    std::vector<std::vector<Mat>> sols;  // [solution][k]
};

SeriesSolution solve_series(const JRep& V, const JRep& W, int D, bool normalize) {
    const LieAlgebra& g = *V.spec();
    const int dim = V.dim() * W.dim();
    Mat IV = Mat::identity(V.dim()), IW = Mat::identity(W.dim());

    // Commutant of the diagonal g-action (Chevalley generators suffice).
    std::vector<SVec> eqs;
    for (auto& ch : g.chevalley())
        for (const Mat* x : {&ch.xp, &ch.xm}) {
            Mat d = kron(V.g.of(*x), IW) + kron(IV, W.g.of(*x));
            auto rows = commutator_rows(d, dim);
            eqs.insert(eqs.end(), rows.begin(), rows.end());
        }
    std::vector<Mat> C;
    for (auto& v : nullspace(eqs, dim * dim)) C.push_back(from_entries(v, dim));
    const int nc = static_cast<int>(C.size());
    auto var = [&](int k, int c) { return k * nc + c; };

    Mat omega(dim, dim);
    for (auto& x : g.orthonormal()) omega += kron(V.g.of(x), W.g.of(x));
    const K hz = V.zeta / K(2);
    std::vector<SVec> rows;
    for (auto& X : g.basis()) {
        Mat X1 = kron(V.g.of(X), IW);
        Mat base = kron(V.J_of(X), IW) + kron(IV, W.J_of(X));
        Mat corr = hz * comm(X1, omega);
        Mat Bp = base + corr, Bm = base - corr;
        std::vector<Mat> L, M;
        for (auto& c : C) {
            L.push_back(comm(X1, c));
            M.push_back(Bp * c - c * Bm);
        }
        // [X1, R^(k)] + B+ R^(k-1) - R^(k-1) B- = 0, k = 0..D
        for (int k = 0; k <= D; ++k) {
            std::map<int, std::map<int, K>> acc;  // entry -> var -> coeff
            for (int c = 0; c < nc; ++c) {
                for (int r = 0; r < dim; ++r)
                    for (auto& [col, v] : L[c].row(r)) acc[r * dim + col][var(k, c)] += v;
                if (k >= 1)
                    for (int r = 0; r < dim; ++r)
                        for (auto& [col, v] : M[c].row(r)) acc[r * dim + col][var(k - 1, c)] += v;
            }
            for (auto& [e, m] : acc) {
                SVec row;
                for (auto& [j, v] : m)
                    if (!v.is_zero()) row.emplace_back(j, v);
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
    }
    const int nvar = (D + 1) * nc;
    auto ns = nullspace(rows, nvar);
    RowSpace r0(nc);
    for (auto& v : ns) {
        SVec head;
        for (auto& [j, x] : v)
            if (j < nc) head.emplace_back(j, x);
        r0.insert(head);
    }
    SeriesSolution out;
    out.rank = r0.rank();
    if (!normalize || out.rank == 0) return out;

    // Pivot entries fixing the scalar-series freedom: R^(k)_p = 0 for k >= 1.
    std::vector<int> piv;
    auto mat_of = [&](const std::vector<K>& coef) {
        Mat m(dim, dim);
        for (int c = 0; c < nc; ++c)
            if (!coef[c].is_zero()) m += coef[c] * C[c];
        return m;
    };
    if (out.rank == 1) {
        Mat R0 = mat_of(svec_dense(r0.rows()[0], nc));
        int best = -1;
        const int N = g.N();
        const bool natural_pair = V.dim() == N && W.dim() == N;
        for (int r = 0; r < dim && best < 0; ++r) {
            if (R0.get(r, r).is_zero()) continue;
            if (natural_pair) {
                int a = g.indices()[r / N], b = g.indices()[r % N];
                if (a == b || a == -b) continue;
            }
            best = r * dim + r;
        }
        for (int r = 0; r < dim && best < 0; ++r)
            if (!R0.get(r, r).is_zero()) best = r * dim + r;
        if (best < 0) {
            int i = 0, j = 0;
            K v;
            R0.first_nonzero(i, j, v);
            best = i * dim + j;
        }
        piv.push_back(best);
    } else {
        RowSpace ent(dim * dim);
        for (auto& row : r0.rows()) {
            Mat m = mat_of(svec_dense(row, nc));
            SVec e;
            for (int r = 0; r < dim; ++r)
                for (auto& [col, v] : m.row(r)) e.emplace_back(r * dim + col, v);
            ent.insert(e);
        }
        piv = ent.pivots();
    }
    for (int p : piv)
        for (int k = 1; k <= D; ++k) {
            SVec row;
            for (int c = 0; c < nc; ++c) {
                K v = C[c].get(p / dim, p % dim);
                if (!v.is_zero()) row.emplace_back(var(k, c), v);
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
    ns = nullspace(rows, nvar);
    for (auto& v : ns) {
        std::vector<K> dense = svec_dense(v, nvar);
        std::vector<Mat> sol;
        for (int k = 0; k <= D; ++k) sol.push_back(mat_of(std::vector<K>(dense.begin() + k * nc, dense.begin() + (k + 1) * nc)));
        // scale so the first pivot entry of R^(0) is 1
        for (int p : piv) {
            K x = sol[0].get(p / dim, p % dim);
            if (x.is_zero()) continue;
            K s = x.inverse();
            for (auto& m : sol) m = s * m;
            break;
        }
        out.sols.push_back(std::move(sol));
    }
    return out;
}

PolyU poly_lcm(const PolyU& a, const PolyU& b) {
    PolyU q, r;
    PolyU::divmod(a * b, PolyU::gcd(a, b), q, r);
    return q.monic();
}

}  // namespace

SolutionSpace solve_intertwiner(const JRep& V, const JRep& W, int D) {
    if (V.spec()->name() != W.spec()->name()) throw std::invalid_argument("intertwiner factors over different algebras");
    if (V.zeta != W.zeta) throw std::invalid_argument("intertwiner factors use different zeta");
    if (D < 1) throw std::invalid_argument("degree bound must be at least 1");
    SolutionSpace out;
    out.degree_bound = D;
    SeriesSolution lo = solve_series(V, W, D - 1, false);
    SeriesSolution hi = solve_series(V, W, D, true);
    out.rank = hi.rank;
    if (lo.rank != hi.rank) {
        out.stable = false;
        out.note = "rank unstable between D-1 and D (" + std::to_string(lo.rank) + " vs " + std::to_string(hi.rank) + ")";
    }
    const int dim = V.dim() * W.dim();
    for (auto& sol : hi.sols) {
        std::vector<std::vector<RatFunU>> ent(dim, std::vector<RatFunU>(dim));
        PolyU L(K(1));
        bool ok = true;
        for (int a = 0; a < dim && ok; ++a)
            for (int b = 0; b < dim && ok; ++b) {
                TruncSeriesU s(D);
                bool nz = false;
                for (int k = 0; k <= D; ++k) {
                    s[k] = sol[k].get(a, b);
                    nz |= !s[k].is_zero();
                }
                if (!nz) continue;
                RatFunU f;
                if (!pade_reconstruct(s, D / 2, f)) {
                    ok = false;
                    out.reconstructed = false;
                    out.note += (out.note.empty() ? "" : "; ") + std::string("no rational reconstruction for entry (") +
                                std::to_string(a) + "," + std::to_string(b) + ")";
                    break;
                }
                f = f.normalized();
                ent[a][b] = f;
                L = poly_lcm(L, f.den());
            }
        if (!ok) continue;
        RatMatrix m;
        m.dim = dim;
        m.den = L;
        m.num = MatPolyU(dim);
        std::vector<Mat> coeffs;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                if (ent[a][b].is_zero()) continue;
                PolyU q, r;
                PolyU::divmod(L, ent[a][b].den(), q, r);
                PolyU p = ent[a][b].num() * q;
                if (static_cast<int>(coeffs.size()) <= p.degree()) coeffs.resize(p.degree() + 1, Mat(dim, dim));
                for (int k = 0; k <= p.degree(); ++k) coeffs[k].add(a, b, p.coeff(k));
            }
        for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) m.num += MatPolyU(coeffs[k], PolyU::monomial(K(1), k));
        out.basis.push_back(std::move(m));
    }
    return out;
}

ABC abc_decomposition(const LieAlgebra& g, const RatMatrix& m) {
    const int N = g.N();
    if (N <= 2) throw std::invalid_argument("A/B/C decomposition needs N > 2");
    int a = g.indices()[0], b = g.indices()[1];
    auto at = [&](int i, int j, int k, int l) { return m.entry(g.pos(i) * N + g.pos(j), g.pos(k) * N + g.pos(l)); };
    ABC r;
    r.A = at(a, b, a, b);
    r.B = at(a, b, b, a);
    r.C = RatFunU(K(g.theta(a, b))) * at(a, -a, b, -b);  // theta = +-1
    return r;
}

CheckReport check_intertwiner_natural(const LieAlgebra& g0, const K& zeta, int D) {
    CheckReport rpt("intertwiner", "eq PRRP");
    Stopwatch sw;
    Spec g = make_spec(g0.series(), g0.n());
    JRep V = natural_j_rep(g, zeta);
    SolutionSpace s = solve_intertwiner(V, V, D);
    rpt.expect(s.rank == 1, [&] { return "rank " + std::to_string(s.rank); });
    rpt.expect(s.stable, [&] { return s.note; });
    rpt.expect(s.reconstructed && s.basis.size() == 1, [&] { return "reconstruction: " + s.note; });
    if (s.basis.size() == 1) {
        const RatMatrix& sol = s.basis[0];
        RatFunU ratio;
        RatMatrix R = r_matrix(*g, zeta);
        rpt.expect(proportional(sol, R, &ratio), [] { return std::string("solution not proportional to R(u)"); });
        if (g->N() > 2) {
            ABC abc = abc_decomposition(*g, sol);
            PolyU u = PolyU::monomial(K(1), 1);
            RatFunU w{u}, zk{PolyU(zeta * K(g->kappa()))}, z{PolyU(zeta)};
            rpt.expect(abc.A * z == abc.B * (RatFunU{PolyU(K(-1))} * w),
                       [&] { return "A zeta != -B w with A = " + abc.A.str() + ", B = " + abc.B.str(); });
            rpt.expect(abc.C * (w - zk) == abc.A * z,
                       [&] { return "C (w - zeta kappa) != A zeta with C = " + abc.C.str(); });
        } else {
            RatMatrix sl2;
            sl2.dim = 4;
            PolyU u = PolyU::monomial(K(1), 1);
            sl2.num = MatPolyU(Mat::identity(4), u) - MatPolyU(g->P(), PolyU(K(2) * zeta));
            sl2.den = u;
            rpt.expect(proportional(sol, sl2, &ratio), [] { return std::string("solution not proportional to I - (2 zeta/u) P"); });
        }
    }
    rpt.detail = g->name() + ", zeta=" + zeta.str() + ", D=" + std::to_string(D) + ", rank " + std::to_string(s.rank);
    rpt.elapsed = sw.seconds();
    return rpt;
}

}  // namespace yang
