#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "yangian/identities.hpp"

using namespace yang;

namespace {

UElement random_elem(const UAlgebra& U, std::mt19937& rng, int terms, int maxdeg) {
    const int d = U.lie().dim();
    std::uniform_int_distribution<int> lab(0, d - 1), deg(0, maxdeg), c(-3, 3);
    UElement e;
    for (int t = 0; t < terms; ++t) {
        Word w;
        int k = deg(rng);
        for (int s = 0; s < k; ++s) w.push_back(lab(rng));
        UElement m = U.one();
        for (int x : w) m = U.mul(m, U.gen(U.lie().labels()[x].i, U.lie().labels()[x].j));
        e += K(c(rng)) * m;
    }
    return e;
}

std::vector<Mat> adjoint_rep(const LieAlgebra& g) {
    std::vector<Mat> v;
    for (int a = 0; a < g.dim(); ++a) v.push_back(g.ad(a));
    return v;
}

}  // namespace

TEST_CASE("normal form agrees with matrix products in faithful representations") {
    for (auto [s, n] : {std::pair{Series::B, 2}, {Series::C, 2}, {Series::D, 3}}) {
        LieAlgebra g = LieAlgebra::build(s, n);
        UAlgebra U(g);
        auto adj = adjoint_rep(g);
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> lab(0, g.dim() - 1);
        for (int t = 0; t < 30; ++t) {
            Word w;
            for (int k = 0; k < 4; ++k) w.push_back(lab(rng));
            Mat nat = Mat::identity(g.N()), ad = Mat::identity(g.dim());
            for (int x : w) {
                nat = nat * g.basis()[x];
                ad = ad * adj[x];
            }
            const UElement& e = U.normal(w);
            CHECK(U.act(e, g.basis()) == nat);
            CHECK(U.act(e, adj) == ad);
            for (auto& [ww, c] : e.terms) CHECK(std::is_sorted(ww.begin(), ww.end()));
        }
    }
}

TEST_CASE("associativity and Jacobi identity") {
    LieAlgebra g = LieAlgebra::build(Series::C, 2);
    UAlgebra U(g);
    std::mt19937 rng(5);
    for (int t = 0; t < 5; ++t) {
        UElement a = random_elem(U, rng, 2, 2), b = random_elem(U, rng, 2, 2), c = random_elem(U, rng, 2, 1);
        CHECK(U.mul(U.mul(a, b), c) == U.mul(a, U.mul(b, c)));
        UElement jac = U.comm(a, U.comm(b, c)) + U.comm(b, U.comm(c, a)) + U.comm(c, U.comm(a, b));
        CHECK(jac.is_zero());
    }
    UElement x = U.gen(-1, 2), y = U.gen(2, -1);
    CHECK(U.comm(x, y) == U.from_mat(comm(g.F(-1, 2), g.F(2, -1))));
    CHECK(U.gen(-2, 1) == K(1) * U.gen(-1, 2));  // theta(-2,1) = -1
    CHECK(U.str(U.gen(1, 1)) == "1 * F(1,1)");
}

TEST_CASE("identities for v and w") {
    for (auto [s, n] : {std::pair{Series::C, 1}, {Series::B, 2}, {Series::C, 2}, {Series::D, 2}, {Series::D, 3}}) {
        LieAlgebra g = LieAlgebra::build(s, n);
        CAPTURE(g.name());
        UAlgebra U(g);
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
                CHECK(U.comm(h[i], sp[j].v).is_zero());
                CHECK(U.comm(h[i], sp[j].wp) == a * sp[j].wp);
                CHECK(U.comm(h[i], sp[j].wm) == -a * sp[j].wm);
                CHECK(U.comm(sp[i].vtilde, xp[j]) == a * sp[j].wp);
                CHECK(U.comm(sp[i].vtilde, xm[j]) == -a * sp[j].wm);
                UElement expect = (i == j) ? sp[i].v : UElement();
                CHECK(U.comm(sp[i].wp, xm[j]) == expect);
                CHECK(U.comm(xp[i], sp[j].wm) == expect);
                CHECK(U.comm(sp[i].wp, xp[j]) - U.comm(xp[i], sp[j].wp) ==
                      K(-1, 2) * a * U.anticomm(xp[i], xp[j]));
                CHECK(U.comm(sp[i].wm, xm[j]) - U.comm(xm[i], sp[j].wm) ==
                      K(1, 2) * a * U.anticomm(xm[i], xm[j]));
            }
        // Cartan form of v
        for (int k = 0; k < n; ++k) {
            UElement alt = K(g.kappa() / 2) * h[k] - K(1, 2) * U.mul(h[k], h[k]);
            for (auto& r : g.positive_roots()) {
                Q pr = 0;
                for (int c = 0; c < n; ++c) pr += r.eps[c] * g.simple_roots()[k][c];
                alt += K(pr / 2) * U.mul(U.from_mat(r.xm), U.from_mat(r.xp));
            }
            CHECK(alt == sp[k].v);
        }
    }
}

TEST_CASE("sl2 identities with the standard triple") {
    LieAlgebra g = LieAlgebra::build(Series::C, 1);
    UAlgebra U(g);
    UElement e = K(1, 2) * U.gen(-1, 1), f = K(1, 2) * U.gen(1, -1), h = -U.gen(1, 1);
    REQUIRE(U.comm(e, f) == h);
    REQUIRE(U.comm(h, e) == K(2) * e);
    auto ac = [&](const UElement& a, const UElement& b) { return U.anticomm(a, b); };
    UElement v_std = K(1, 2) * (ac(e, f) - U.mul(h, h));
    UElement wp_std = K(-1, 4) * ac(e, h), wm_std = K(-1, 4) * ac(f, h);
    SpecialElements s = special_elements(U, 0);
    // the general normalization differs by fixed scalars on sp2
    CHECK(s.v == K(4) * v_std);
    CHECK(s.wp == K(2) * K::sqrt2() * wp_std);
    CHECK(s.wm == K(2) * K::sqrt2() * wm_std);
    UElement rhs = K(1, 16) * (K(4) * U.pow(h, 3) - K(2) * U.mul(ac(e, f), h) - K(2) * U.mul(e, ac(f, h)) -
                               K(2) * U.mul(ac(f, h), e) - K(2) * U.mul(h, ac(e, f)));
    CHECK(U.comm(wp_std, wm_std) == rhs);
    CHECK(U.comm(v_std, U.comm(wm_std, wp_std)).is_zero());
    CHECK(U.mul(e, ac(f, h)) + U.mul(ac(f, h), e) ==
          K(4) * U.mul(U.mul(e, f), h) - K(2) * h - K(2) * U.mul(h, h));
}

TEST_CASE("straightening example") {
    LieAlgebra g = LieAlgebra::build(Series::B, 2);
    UAlgebra U(g);
    UElement lhs = U.mul(U.gen(2, 1), U.gen(1, 2));
    REQUIRE(g.label_index(1, 2) < g.label_index(2, 1));
    UElement expect = U.mul(U.gen(1, 2), U.gen(2, 1)) - U.gen(1, 1) + U.gen(2, 2);
    CHECK(lhs == expect);
    CHECK(U.mul(U.one(), lhs) == lhs);
    CHECK(U.normal({g.label_index(1, 1), g.label_index(1, 1)}).terms.size() == 1);
}

TEST_CASE("commutator of J(F_ii) images reduces to the stated cubic expression") {
    for (auto [s, n] : {std::pair{Series::B, 2}, {Series::C, 2}, {Series::D, 3}}) {
        LieAlgebra g = LieAlgebra::build(s, n);
        CAPTURE(g.name());
        UAlgebra U(g);
        auto F = [&](int a, int b) { return U.gen(a, b); };
        const auto& I = g.indices();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                UElement lhs;
                for (int k : I)
                    for (int l : I) {
                        if (k >= l) continue;
                        UElement right = U.mul(F(l, k), U.comm(F(i, i), F(k, l)));
                        for (int r : I)
                            for (int ss : I) {
                                if (r >= ss) continue;
                                UElement left = U.mul(F(ss, r), U.comm(F(j, j), F(r, ss)));
                                lhs += U.comm(left, right);
                            }
                    }
                UElement rhs;
                for (int a : I)
                    for (int b : I) rhs += U.comm(U.mul(F(i, a), F(a, i)), U.mul(F(j, b), F(b, j)));
                for (int a : I)
                    rhs += K(2) * (U.mul(U.mul(F(j, a), F(a, -i)), F(-i, j)) -
                                   U.mul(U.mul(F(j, -i), F(-i, a)), F(a, j)));
                CHECK(K(1, 4) * lhs == rhs);
            }
    }
}

TEST_CASE("library identity checks") {
    for (auto [s, n] : {std::pair{Series::C, 1}, {Series::B, 2}, {Series::C, 2}, {Series::D, 3}}) {
        LieAlgebra g = LieAlgebra::build(s, n);
        CAPTURE(g.name());
        for (auto r : {check_gnw_identities(g), check_v_cartan_form(g), check_cartan_commutator_reduction(g)}) {
            INFO(r.id << " " << r.witness);
            CHECK(r.pass);
            if (n > 1) CHECK(r.instances > 0);
        }
    }
    auto r = check_sl2_identities();
    CHECK(r.pass);
    CHECK(r.instances == 4);
    // sp2 has no pair i != j
    CHECK(check_cartan_commutator_reduction(LieAlgebra::build(Series::C, 1)).instances == 0);
}
