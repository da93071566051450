#include "yangian/isom.hpp"

#include <stdexcept>

#include "yangian/upbw.hpp"

namespace yang {

namespace {

SpecialImages images_from(const UAlgebra& U, const std::vector<Mat>& basis, int node) {
    SpecialElements s = special_elements(U, node);
    return {U.act(s.v, basis), U.act(s.wp, basis), U.act(s.wm, basis), U.act(s.vtilde, basis)};
}

Q pairing_with_node(const LieAlgebra& g, const PosRoot& r, int node) {
    Q p = 0;
    for (int k = 0; k < g.n(); ++k) p += r.eps[k] * g.simple_roots()[node][k];
    return p;
}

std::string lbl(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

SpecialImages special_images(const GRep& rep, int node) {
    UAlgebra U(*rep.g);
    return images_from(U, rep.basis_mats(), node);
}

Mat root_anticommutator_sum(const GRep& rep, int node) {
    const LieAlgebra& g = *rep.g;
    Mat s(rep.dim, rep.dim);
    for (auto& r : g.positive_roots()) {
        Q p = pairing_with_node(g, r, node);
        if (p != 0) s += K(p) * anticomm(rep.of(r.xp), rep.of(r.xm));
    }
    return s;
}

CurRep phi_cr_from_j(const JRep& rep, int rmax) {
    if (rmax < 1) throw std::invalid_argument("phi_cr_from_j needs rmax >= 1");
    const LieAlgebra& g = *rep.spec();
    UAlgebra U(g);
    auto basis = rep.g.basis_mats();
    CurRep c;
    c.g = rep.spec();
    c.zeta = rep.zeta;
    c.dim = rep.dim();
    c.rmax = rmax;
    int n = g.n();
    c.xp.assign(n, {});
    c.xm.assign(n, {});
    c.h.assign(n, {});
    for (int i = 0; i < n; ++i) {
        const Chevalley& ch = g.chevalley()[i];
        SpecialImages s = images_from(U, basis, i);
        Mat h0 = rep.g.of(ch.h);
        c.xp[i] = {rep.g.of(ch.xp), rep.J_of(ch.xp) - rep.zeta * s.wp};
        c.xm[i] = {rep.g.of(ch.xm), rep.J_of(ch.xm) - rep.zeta * s.wm};
        c.h[i] = {h0, rep.J_of(ch.h) - rep.zeta * s.v};
        Mat ht = c.h[i][1] - (rep.zeta / K(2)) * (h0 * h0);
        K inv = K(g.pairing(i, i)).inverse();
        for (int r = 1; r < rmax; ++r) {
            c.xp[i].push_back(inv * comm(ht, c.xp[i][r]));
            c.xm[i].push_back(-inv * comm(ht, c.xm[i][r]));
            c.h[i].push_back(comm(c.xp[i][r + 1], c.xm[i][0]));
        }
    }
    return c;
}

namespace {

// Images of the F-basis from (element of g, image) seeds closed under ad of the acting pairs.
std::vector<Mat> close_under_brackets(const LieAlgebra& g, int dim, std::vector<std::pair<Mat, Mat>> seeds,
                                      const std::vector<std::pair<Mat, Mat>>& acting) {
    RowSpace span(g.dim());
    std::vector<std::pair<Mat, Mat>> found;
    for (size_t k = 0; k < seeds.size() && span.rank() < g.dim(); ++k) {
        if (span.insert(svec_from_dense(g.coords(seeds[k].first)))) {
            found.push_back(seeds[k]);
            for (auto& [a, img] : acting) seeds.push_back({comm(a, seeds[k].first), comm(img, seeds[k].second)});
        }
    }
    if (span.rank() < g.dim()) throw std::runtime_error("generators do not span g");
    int d = g.dim();
    std::vector<std::vector<K>> A(d, std::vector<K>(d));
    for (int k = 0; k < d; ++k) {
        auto c = g.coords(found[k].first);
        for (int a = 0; a < d; ++a) A[a][k] = c[a];
    }
    std::vector<Mat> imgs;
    for (int a = 0; a < d; ++a) {
        std::vector<K> e(d), x;
        e[a] = K(1);
        if (!solve_linear(A, e, x)) throw std::runtime_error("singular basis change");
        Mat m(dim, dim);
        for (int k = 0; k < d; ++k)
            if (!x[k].is_zero()) m += x[k] * found[k].second;
        imgs.push_back(m);
    }
    return imgs;
}

std::vector<std::pair<Mat, Mat>> degree_zero_pairs(const CurRep& rep) {
    std::vector<std::pair<Mat, Mat>> known;
    for (int i = 0; i < rep.g->n(); ++i) {
        const Chevalley& ch = rep.g->chevalley()[i];
        known.push_back({ch.xp, rep.Xp(i, 0)});
        known.push_back({ch.xm, rep.Xm(i, 0)});
    }
    return known;
}

}  // namespace

GRep grep_from_current(const CurRep& rep) {
    auto known = degree_zero_pairs(rep);
    return GRep::from_basis(rep.g, close_under_brackets(*rep.g, rep.dim, known, known));
}

JRep phi_j_from_cur(const CurRep& rep) {
    const LieAlgebra& g = *rep.g;
    if (rep.rmax < 1) throw std::invalid_argument("phi_j_from_cur needs degree-1 generators");
    UAlgebra U(g);
    // every basis element is a bracket word in the Chevalley generators, so g and J(g)
    // are both filled in by closing under ad of the degree-0 generators
    JRep out;
    out.zeta = rep.zeta;
    out.g = grep_from_current(rep);
    auto basis = out.g.basis_mats();
    std::vector<std::pair<Mat, Mat>> jseeds;
    for (int i = 0; i < g.n(); ++i) {
        const Chevalley& ch = g.chevalley()[i];
        SpecialImages s = images_from(U, basis, i);
        jseeds.push_back({ch.xp, rep.Xp(i, 1) + rep.zeta * s.wp});
        jseeds.push_back({ch.xm, rep.Xm(i, 1) + rep.zeta * s.wm});
        jseeds.push_back({ch.h, rep.H(i, 1) + rep.zeta * s.v});
    }
    out.J = GRep::from_basis(rep.g, close_under_brackets(g, rep.dim, jseeds, degree_zero_pairs(rep))).F;
    return out;
}

JRep phi_j_from_rtt(const RTTRep& rep) {
    if (rep.order < 2) throw std::invalid_argument("RTT module known only to order " + std::to_string(rep.order) + " < 2");
    const LieAlgebra& g = *rep.g;
    JRep out;
    out.zeta = rep.zeta;
    out.g.g = rep.g;
    out.g.dim = rep.dim;
    int N = g.N();
    out.g.F.assign(N * N, Mat());
    out.J = out.g.F;
    for (int i : g.indices())
        for (int j : g.indices()) {
            Mat sq(rep.dim, rep.dim);
            for (int k : g.indices()) sq += rep.t(1, i, k) * rep.t(1, k, j);
            out.g.F[g.pos(i) * N + g.pos(j)] = rep.t(1, i, j);
            out.J[g.pos(i) * N + g.pos(j)] = rep.zeta * (rep.t(2, i, j) - K(1, 2) * sq);
        }
    return out;
}

JRep chevalley_involution(const JRep& rep) {
    const LieAlgebra& g = *rep.spec();
    JRep out = rep;
    int N = g.N();
    for (int i : g.indices())
        for (int j : g.indices()) {
            out.g.F[g.pos(i) * N + g.pos(j)] = -rep.g.f(j, i);
            out.J[g.pos(i) * N + g.pos(j)] = -rep.j(j, i);
        }
    return out;
}

CheckReport check_cartan_j_commutators(const JRep& rep) {
    CheckReport rpt("cartan-j-commutators", "Jred:3");
    Stopwatch sw;
    const LieAlgebra& g = *rep.spec();
    const GRep& V = rep.g;
    int n = g.n();
    K scale = K(4) / (rep.zeta * rep.zeta);
    std::vector<Mat> quad(n + 1);  // sum_a F_ia F_ai
    for (int i = 1; i <= n; ++i) {
        quad[i] = Mat(rep.dim(), rep.dim());
        for (int a : g.indices()) quad[i] += V.f(i, a) * V.f(a, i);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            Mat lhs = scale * comm(rep.j(i, i), rep.j(j, j));
            Mat rhs = comm(quad[i], quad[j]);
            for (int a : g.indices())
                rhs += K(2) * (V.f(j, a) * V.f(a, -i) * V.f(-i, j) - V.f(j, -i) * V.f(-i, a) * V.f(a, j));
            rpt.expect_zero(lhs - rhs, [&] { return "i=" + std::to_string(i) + " j=" + std::to_string(j); });
        }
    rpt.elapsed = sw.seconds();
    return rpt;
}

CheckReport check_t2_symmetry(const RTTRep& rep) {
    CheckReport rpt("t2-symmetry", "t^2:tr");
    Stopwatch sw;
    if (rep.order < 2) {
        rpt.expect(false, [] { return "order < 2"; });
        return rpt;
    }
    const LieAlgebra& g = *rep.g;
    K kappa(g.kappa());
    for (int i : g.indices())
        for (int j : g.indices()) {
            Mat rhs = K(-g.theta(i, j)) * rep.t(2, -j, -i) - kappa * rep.t(1, i, j);
            for (int a : g.indices()) rhs += rep.t(1, i, a) * rep.t(1, a, j);
            rpt.expect_zero(rep.t(2, i, j) - rhs, [&] { return "t2" + lbl(i, j); });
        }
    rpt.elapsed = sw.seconds();
    return rpt;
}

CheckReport check_involution_composite(const RTTRep& rep) {
    CheckReport rpt("involution-composite", "T:YR-iso");
    Stopwatch sw;
    const LieAlgebra& g = *rep.g;
    JRep A = phi_j_from_rtt(rep);
    JRep B = chevalley_involution(A);
    JRep BB = chevalley_involution(B);
    rpt.expect(BB.g.F == A.g.F && BB.J == A.J, [] { return "involution applied twice differs"; });
    K zinv = rep.zeta.inverse();
    for (int i : g.indices())
        for (int j : g.indices()) {
            rpt.expect_zero(rep.t(1, i, j) + B.g.f(j, i), [&] { return "t1" + lbl(i, j) + " vs -F" + lbl(j, i); });
            Mat rhs = -zinv * B.j(j, i);
            for (int k : g.indices()) rhs += K(1, 2) * (B.g.f(k, i) * B.g.f(j, k));
            rpt.expect_zero(rep.t(2, i, j) - rhs, [&] { return "t2" + lbl(i, j); });
        }
    rpt.elapsed = sw.seconds();
    return rpt;
}

Route parse_route(const std::string& s) {
    if (s == "rtt-j") return Route::RttJ;
    if (s == "j-cur") return Route::JCur;
    if (s == "rtt-j-cur") return Route::RttJCur;
    throw std::invalid_argument("unknown route '" + s + "' (expected rtt-j, j-cur or rtt-j-cur)");
}

std::string route_name(Route r) {
    switch (r) {
        case Route::RttJ: return "rtt-j";
        case Route::JCur: return "j-cur";
        case Route::RttJCur: return "rtt-j-cur";
    }
    return "";
}

namespace {

void add_current_checks(CheckReport& rpt, const JRep& j, int rmax) {
    CurRep c = phi_cr_from_j(j, 2 * rmax);
    rpt.add(check_current_relations(c, rmax, rmax));
    rpt.add(check_minimal_relations(c));
    JRep back = phi_j_from_cur(c);
    CheckReport rt("cur-j-roundtrip", "T:Ycr(g)-");
    const LieAlgebra& g = *j.spec();
    for (int i : g.indices())
        for (int k : g.indices()) {
            rt.expect_zero(back.g.f(i, k) - j.g.f(i, k), [&] { return "F" + lbl(i, k); });
            rt.expect_zero(back.j(i, k) - j.j(i, k), [&] { return "J(F" + lbl(i, k) + ")"; });
        }
    rpt.add(std::move(rt));
}

}  // namespace

CheckReport verify_transport(const RTTRep& rep, Route route, int rmax) {
    if (route == Route::JCur) throw std::invalid_argument("route j-cur starts from a J-presentation module");
    CheckReport rpt("transport:" + route_name(route), "T:J->R");
    Stopwatch sw;
    JRep j = phi_j_from_rtt(rep);
    rpt.add(check_j_relations(j));
    rpt.add(check_cartan_j_commutators(j));
    rpt.add(check_t2_symmetry(rep));
    rpt.add(check_involution_composite(rep));
    if (route == Route::RttJCur) add_current_checks(rpt, j, rmax);
    rpt.elapsed = sw.seconds();
    return rpt;
}

CheckReport verify_transport(const JRep& rep, Route route, int rmax) {
    if (route != Route::JCur) throw std::invalid_argument("route " + route_name(route) + " starts from an RTT module");
    CheckReport rpt("transport:j-cur", "T:Ycr(g)-");
    Stopwatch sw;
    rpt.add(check_j_relations(rep));
    rpt.add(check_cartan_j_commutators(rep));
    add_current_checks(rpt, rep, rmax);
    rpt.elapsed = sw.seconds();
    return rpt;
}

}  // namespace yang
