#include "yangian/identities.hpp"

namespace yang {

namespace {

std::string ij(int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); }

}  // namespace

CheckReport check_gnw_identities(const LieAlgebra& g) {
    CheckReport rpt("gnw:" + g.name(), "lem:GNW");
    Stopwatch sw;
    UAlgebra U(g);
    const int n = g.n();
    std::vector<SpecialElements> sp;
    std::vector<UElement> xp, xm, h;
    for (int i = 0; i < n; ++i) {
        sp.push_back(special_elements(U, i));
        xp.push_back(U.from_mat(g.chevalley()[i].xp));
        xm.push_back(U.from_mat(g.chevalley()[i].xm));
        h.push_back(U.from_mat(g.chevalley()[i].h));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            K a(g.pairing(i, j));
            auto at = [&](const char* what) { return std::string(what) + " at " + ij(i, j); };
            rpt.expect(U.comm(h[i], sp[j].v).is_zero(), [&] { return at("[h, v]"); });
            rpt.expect(U.comm(h[i], sp[j].wp) == a * sp[j].wp, [&] { return at("[h, w+]"); });
            rpt.expect(U.comm(h[i], sp[j].wm) == -a * sp[j].wm, [&] { return at("[h, w-]"); });
            rpt.expect(U.comm(sp[i].vtilde, xp[j]) == a * sp[j].wp, [&] { return at("[vtilde, x+]"); });
            rpt.expect(U.comm(sp[i].vtilde, xm[j]) == -a * sp[j].wm, [&] { return at("[vtilde, x-]"); });
            UElement diag = i == j ? sp[i].v : UElement();
            rpt.expect(U.comm(sp[i].wp, xm[j]) == diag, [&] { return at("[w+, x-]"); });
            rpt.expect(U.comm(xp[i], sp[j].wm) == diag, [&] { return at("[x+, w-]"); });
            rpt.expect(U.comm(sp[i].wp, xp[j]) - U.comm(xp[i], sp[j].wp) == K(-1, 2) * a * U.anticomm(xp[i], xp[j]),
                       [&] { return at("[w+, x+] - [x+, w+]"); });
            rpt.expect(U.comm(sp[i].wm, xm[j]) - U.comm(xm[i], sp[j].wm) == K(1, 2) * a * U.anticomm(xm[i], xm[j]),
                       [&] { return at("[w-, x-] - [x-, w-]"); });
        }
    rpt.elapsed = sw.seconds();
    return rpt;
}

CheckReport check_v_cartan_form(const LieAlgebra& g) {
    CheckReport rpt("v-cartan-form:" + g.name(), "v_k");
    Stopwatch sw;
    UAlgebra U(g);
    for (int k = 0; k < g.n(); ++k) {
        UElement h = U.from_mat(g.chevalley()[k].h);
        UElement alt = K(g.kappa() / 2) * h - K(1, 2) * U.mul(h, h);
        for (auto& r : g.positive_roots()) {
            Q pr = 0;
            for (int c = 0; c < g.n(); ++c) pr += r.eps[c] * g.simple_roots()[k][c];
            alt += K(pr / 2) * U.mul(U.from_mat(r.xm), U.from_mat(r.xp));
        }
        rpt.expect(alt == special_elements(U, k).v, [&] { return "node " + std::to_string(k); });
    }
    rpt.elapsed = sw.seconds();
    return rpt;
}

CheckReport check_sl2_identities() {
    CheckReport rpt("sl2-identities", "w+w-");
    Stopwatch sw;
    LieAlgebra g = LieAlgebra::build(Series::C, 1);
    UAlgebra U(g);
    UElement e = K(1, 2) * U.gen(-1, 1), f = K(1, 2) * U.gen(1, -1), h = -U.gen(1, 1);
    rpt.expect(U.comm(e, f) == h && U.comm(h, e) == K(2) * e, [] { return "standard triple"; });
    auto ac = [&](const UElement& a, const UElement& b) { return U.anticomm(a, b); };
    UElement v = K(1, 2) * (ac(e, f) - U.mul(h, h));
    UElement wp = K(-1, 4) * ac(e, h), wm = K(-1, 4) * ac(f, h);
    UElement rhs = K(1, 16) * (K(4) * U.pow(h, 3) - K(2) * U.mul(ac(e, f), h) - K(2) * U.mul(e, ac(f, h)) -
                               K(2) * U.mul(ac(f, h), e) - K(2) * U.mul(h, ac(e, f)));
    UElement lhs = U.comm(wp, wm);
    rpt.expect(lhs == rhs, [&] { return "[w+, w-] = " + U.str(lhs); });
    rpt.expect(U.comm(v, U.comm(wm, wp)).is_zero(), [] { return "[v, [w-, w+]]"; });
    rpt.expect(U.mul(e, ac(f, h)) + U.mul(ac(f, h), e) == K(4) * U.mul(U.mul(e, f), h) - K(2) * h - K(2) * U.mul(h, h),
               [] { return "e{f,h} + {f,h}e"; });
    rpt.elapsed = sw.seconds();
    return rpt;
}

CheckReport check_cartan_commutator_reduction(const LieAlgebra& g) {
    CheckReport rpt("cartan-commutator-reduction:" + g.name(), "JF:cl");
    Stopwatch sw;
    UAlgebra U(g);
    auto F = [&](int a, int b) { return U.gen(a, b); };
    const auto& I = g.indices();
    // F_lk [F_ii, F_kl] summed over k < l
    auto half = [&](int i) {
        std::vector<UElement> out;
        for (int k : I)
            for (int l : I)
                if (k < l) out.push_back(U.mul(F(l, k), U.comm(F(i, i), F(k, l))));
        return out;
    };
    for (int i = 1; i <= g.n(); ++i)
        for (int j = 1; j <= g.n(); ++j) {
            if (i == j) continue;
            UElement lhs;
            auto right = half(i), left = half(j);
            for (auto& r : right)
                for (auto& l : left) lhs += U.comm(l, r);
            UElement rhs;
            for (int a : I)
                for (int b : I) rhs += U.comm(U.mul(F(i, a), F(a, i)), U.mul(F(j, b), F(b, j)));
            for (int a : I)
                rhs += K(2) * (U.mul(U.mul(F(j, a), F(a, -i)), F(-i, j)) - U.mul(U.mul(F(j, -i), F(-i, a)), F(a, j)));
            rpt.expect(K(1, 4) * lhs == rhs, [&] { return ij(i, j); });
        }
    rpt.elapsed = sw.seconds();
    return rpt;
}

}  // namespace yang
