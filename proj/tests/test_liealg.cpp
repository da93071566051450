#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yangian/liealg.hpp"

using namespace yang;

namespace {

std::vector<LieAlgebra> all_small() {
    std::vector<LieAlgebra> v;
    for (int n = 1; n <= 3; ++n) {
        v.push_back(LieAlgebra::build(Series::B, n));
        v.push_back(LieAlgebra::build(Series::C, n));
        if (n >= 2) v.push_back(LieAlgebra::build(Series::D, n));
    }
    return v;
}

std::vector<Q> qv(std::initializer_list<Q> l) { return std::vector<Q>(l); }

}  // namespace

TEST_CASE("dimensions, kappa and index layout") {
    auto so5 = LieAlgebra::build(Series::B, 2);
    CHECK(so5.N() == 5);
    CHECK(so5.dim() == 10);
    CHECK(so5.kappa() == Q(3, 2));
    CHECK(so5.indices() == std::vector<int>{-2, -1, 0, 1, 2});
    auto sp4 = LieAlgebra::build(Series::C, 2);
    CHECK(sp4.dim() == 10);
    CHECK(sp4.kappa() == Q(3));
    CHECK(sp4.indices() == std::vector<int>{-2, -1, 1, 2});
    auto so6 = LieAlgebra::build(Series::D, 3);
    CHECK(so6.dim() == 15);
    CHECK(so6.kappa() == Q(2));
    CHECK(sp4.theta(-1, 2) == -1);
    CHECK(sp4.theta(-1, -2) == 1);
    CHECK_THROWS(LieAlgebra::build(Series::D, 1));
    CHECK_THROWS(so5.pos(3));
}

TEST_CASE("basis lies in the algebra and closes under brackets") {
    for (auto& g : all_small()) {
        CAPTURE(g.name());
        int N = g.N();
        CHECK(g.dim() == (g.symplectic() ? N * (N + 1) / 2 : N * (N - 1) / 2));
        for (auto& X : g.basis()) {
            CHECK(g.ttranspose(X) == -X);
            for (auto& Y : g.basis()) CHECK(g.contains(comm(X, Y)));
        }
        // redundant partners: F_ij = -theta_ij F_{-j,-i}
        for (int i : g.indices())
            for (int j : g.indices()) CHECK(g.F(i, j) == K(-g.theta(i, j)) * g.F(-j, -i));
    }
}

TEST_CASE("orthonormal basis and tensor operators") {
    for (auto& g : all_small()) {
        CAPTURE(g.name());
        auto& o = g.orthonormal();
        REQUIRE(static_cast<int>(o.size()) == g.dim());
        for (size_t a = 0; a < o.size(); ++a)
            for (size_t b = 0; b < o.size(); ++b) CHECK(g.form(o[a], o[b]) == K(a == b ? 1 : 0));
        Mat P = g.P(), Qm = g.Qop();
        int NN = g.N() * g.N();
        CHECK(P * P == Mat::identity(NN));
        CHECK(P * Qm == K(g.symplectic() ? -1 : 1) * Qm);
        CHECK(Qm * Qm == K(g.N()) * Qm);
        CHECK(g.omega_natural() == P - Qm);
        // half the F-basis sum over all index pairs gives the same tensor
        Mat half(NN, NN);
        for (int i : g.indices())
            for (int j : g.indices()) half += kron(g.F(i, j), g.F(j, i));
        CHECK(K(1, 2) * half == P - Qm);
    }
}

TEST_CASE("Casimir on the adjoint representation is 4 kappa") {
    for (auto& g : all_small()) {
        CAPTURE(g.name());
        Mat c(g.dim(), g.dim());
        for (auto& x : g.orthonormal()) {
            Mat a = g.ad(x);
            c += a * a;
        }
        CHECK(c == K(4 * g.kappa()) * Mat::identity(g.dim()));
    }
}

TEST_CASE("Chevalley generators") {
    for (auto& g : all_small()) {
        CAPTURE(g.name());
        auto& ch = g.chevalley();
        for (int i = 0; i < g.n(); ++i) {
            CHECK(g.form(ch[i].xp, ch[i].xm) == K(1));
            for (int j = 0; j < g.n(); ++j) {
                CHECK(comm(ch[i].h, ch[j].xp) == K(g.pairing(i, j)) * ch[j].xp);
                CHECK(comm(ch[i].h, ch[j].xm) == K(-g.pairing(i, j)) * ch[j].xm);
                if (i != j) CHECK(comm(ch[i].xp, ch[j].xm).is_zero());
            }
        }
        for (auto& r : g.positive_roots()) CHECK(g.form(r.xp, r.xm) == K(1));
    }
    // Cartan elements at node 0
    auto so5 = LieAlgebra::build(Series::B, 2);
    CHECK(so5.chevalley()[0].h == -so5.F(1, 1));
    CHECK(so5.chevalley()[0].xp == so5.F(0, 1));
    auto sp4 = LieAlgebra::build(Series::C, 2);
    CHECK(sp4.chevalley()[0].h == K(-2) * sp4.F(1, 1));
    CHECK(sp4.chevalley()[0].xp == K::sqrt2().inverse() * sp4.F(-1, 1));
    auto so6 = LieAlgebra::build(Series::D, 3);
    CHECK(so6.chevalley()[0].h == -so6.F(1, 1) - so6.F(2, 2));
    CHECK(so6.chevalley()[1].h == so6.F(1, 1) - so6.F(2, 2));
    CHECK(so6.chevalley()[1].xp == so6.F(1, 2));
}

TEST_CASE("simple roots, Cartan matrix, fundamental weights") {
    auto so7 = LieAlgebra::build(Series::B, 3);
    CHECK(so7.simple_roots()[0] == qv({-1, 0, 0}));
    CHECK(so7.simple_roots()[2] == qv({0, 1, -1}));
    CHECK(so7.cartan(0, 1) == -2);
    CHECK(so7.cartan(1, 0) == -1);
    CHECK(so7.fundamental_weights()[0] == qv({Q(-1, 2), Q(-1, 2), Q(-1, 2)}));
    CHECK(so7.fundamental_weights()[1] == qv({0, -1, -1}));
    CHECK(so7.fundamental_weights()[2] == qv({0, 0, -1}));

    auto sp6 = LieAlgebra::build(Series::C, 3);
    CHECK(sp6.simple_roots()[0] == qv({-2, 0, 0}));
    CHECK(sp6.d(0) == Q(2));
    CHECK(sp6.fundamental_weights()[0] == qv({-1, -1, -1}));
    CHECK(sp6.fundamental_weights()[1] == qv({0, -1, -1}));

    auto so8 = LieAlgebra::build(Series::D, 4);
    CHECK(so8.simple_roots()[0] == qv({-1, -1, 0, 0}));
    CHECK(so8.fundamental_weights()[0] == qv({Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)}));
    CHECK(so8.fundamental_weights()[1] == qv({Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)}));
    CHECK(so8.fundamental_weights()[2] == qv({0, 0, -1, -1}));
    CHECK(so8.cartan(0, 2) == -1);
    CHECK(so8.cartan(0, 1) == 0);
    for (auto& g : all_small()) CHECK(static_cast<int>(g.positive_roots().size()) ==
                                      (g.dim() - g.n()) / 2);
}

TEST_CASE("nodes admitting J = b X on the fundamental module") {
    CHECK(LieAlgebra::build(Series::B, 3).allowed_nodes() == std::vector<int>{0, 2});
    CHECK(LieAlgebra::build(Series::B, 2).allowed_nodes() == std::vector<int>{0, 1});
    CHECK(LieAlgebra::build(Series::B, 1).allowed_nodes() == std::vector<int>{0});
    CHECK(LieAlgebra::build(Series::C, 3).allowed_nodes() == std::vector<int>{0, 1, 2});
    CHECK(LieAlgebra::build(Series::D, 4).allowed_nodes() == std::vector<int>{0, 1, 3});
    CHECK(LieAlgebra::build(Series::D, 5).allowed_nodes() == std::vector<int>{0, 1, 4});
    CHECK(LieAlgebra::build(Series::D, 3).allowed_nodes() == std::vector<int>{0, 1, 2});
    CHECK(LieAlgebra::build(Series::D, 2).allowed_nodes() == std::vector<int>{0, 1});
}

TEST_CASE("bracket matches the structure-constant formula on all index quadruples") {
    for (auto& g : all_small()) {
        CAPTURE(g.name());
        auto d = [](int a, int b) { return a == b ? 1 : 0; };
        for (int i : g.indices())
            for (int j : g.indices())
                for (int k : g.indices())
                    for (int l : g.indices()) {
                        Mat expect = K(d(j, k)) * g.F(i, l) - K(d(i, l)) * g.F(k, j);
                        if (j == -l) expect += K(g.theta(i, j)) * g.F(k, -i);
                        if (i == -k) expect -= K(g.theta(i, j)) * g.F(-j, l);
                        CHECK(comm(g.F(i, j), g.F(k, l)) == expect);
                    }
    }
    auto so5 = LieAlgebra::build(Series::B, 2);
    CHECK(comm(so5.F(1, 1), so5.F(1, 2)) == so5.F(1, 2));
    CHECK(comm(so5.F(1, 2), so5.F(2, 1)) == so5.F(1, 1) - so5.F(2, 2));
}

TEST_CASE("bilinear form values and invariance") {
    auto so5 = LieAlgebra::build(Series::B, 2);
    CHECK(so5.form(so5.F(1, 2), so5.F(2, 1)) == K(1));
    CHECK(so5.form(so5.F(1, 1), so5.F(2, 2)) == K(0));
    auto sp4 = LieAlgebra::build(Series::C, 2);
    CHECK(sp4.form(sp4.F(1, -1), sp4.F(-1, 1)) == K(2));
    CHECK(sp4.F(1, -1) == K(2) * sp4.E(1, -1));
    for (auto& g : all_small()) {
        if (g.n() > 2) continue;
        auto& B = g.basis();
        for (auto& x : B)
            for (auto& y : B)
                for (auto& z : B) CHECK((g.form(comm(x, y), z) + g.form(y, comm(x, z))).is_zero());
    }
}
