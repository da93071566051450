// One line per acceptance criterion. Exit status 0 iff the failing criteria are exactly
// the ones named by --expect-fail.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "yangian/drinfeld.hpp"
#include "yangian/identities.hpp"
#include "yangian/rmatrix.hpp"

using namespace yang;

namespace {

struct Outcome {
    bool pass = true;
    long checks = 0;
    std::string witness;

    void add(const CheckReport& r) {
        ++checks;
        if (!r.pass && pass) witness = r.id + ": " + (r.witness.empty() ? r.detail : r.witness);
        pass = pass && r.pass;
    }
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) witness = what;
        pass = pass && ok;
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit;  // seconds
    std::function<void(Outcome&)> run;
};

Spec so(int N) { return make_spec(N % 2 ? Series::B : Series::D, N / 2); }
Spec sp(int N) { return make_spec(Series::C, N / 2); }

const std::vector<K> zetas_123{K(1), K(2), K(1, 3)};
const std::vector<K> zetas_13{K(1), K(1, 3)};

void tensor_identities(Outcome& o) {
    std::vector<Spec> specs{sp(2), so(3), so(4), sp(4), so(5), so(6), sp(6), so(7)};
    for (auto& g : specs) o.add(check_tensor_identities(*g));
}

void casimir(Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
        o.add(check_casimir(*make_spec(Series::B, n)));
        o.add(check_casimir(*make_spec(Series::C, n)));
        if (n >= 2) o.add(check_casimir(*make_spec(Series::D, n)));
    }
}

void qybe(Outcome& o) {
    for (auto& g : {so(3), so(4), so(5), so(6), sp(2), sp(4), sp(6)})
        for (auto& z : zetas_123) {
            o.add(check_qybe(*g, z));
            o.add(check_unitarity_crossing(*g, z));
        }
}

void pbw(Outcome& o) {
    for (auto& g : {sp(2), so(5), sp(4), so(6)}) {
        o.add(check_gnw_identities(*g));
        o.add(check_v_cartan_form(*g));
        o.add(check_cartan_commutator_reduction(*g));
    }
    o.add(check_sl2_identities());
}

void evaluation(Outcome& o) {
    for (auto& g : {so(5), sp(4), so(6), sp(2)})
        for (auto& z : zetas_13) {
            CurRep c = natural_current_rep(g, z, 8);
            o.add(check_current_relations(c, 3, 3));
            o.add(check_minimal_relations(c));
        }
}

void natural_j_zero(Outcome& o) {
    for (auto& g : {sp(2), so(4), so(5), sp(4), so(6)}) {
        JRep j = phi_j_from_cur(natural_current_rep(g, K(1), 2));
        bool zero = true;
        for (auto& m : j.J) zero = zero && m.is_zero();
        o.expect(zero, g->name() + ": transported J is nonzero");
        o.expect(j.g.F == natural_grep(g).F, g->name() + ": transported g-action differs");
        if (g->series() == Series::D && g->n() == 2)
            o.expect(j.J_of(g->chevalley()[1].h).is_zero(), "so4: J(h_1) != 0");
    }
    auto b = so(5), c = sp(4), d = so(6);
    o.expect(root_anticommutator_sum(natural_grep(b), 0) == b->E(-1, -1) + K(2) * b->E(0, 0) + b->E(1, 1), "case I");
    o.expect(root_anticommutator_sum(natural_grep(c), 0) == K(8) * (c->E(-1, -1) + c->E(1, 1)), "case II");
    o.expect(root_anticommutator_sum(natural_grep(d), 0) ==
                 K(2) * (d->E(-2, -2) + d->E(-1, -1) + d->E(1, 1) + d->E(2, 2)),
             "case III");
}

void intertwiner(Outcome& o) {
    for (auto& g : {so(5), sp(4), sp(2)}) o.add(check_intertwiner_natural(*g, K(1), 6));
}

void log_r(Outcome& o) {
    for (auto& g : {so(5), sp(4)}) {
        o.add(check_log_r(*g, K(1)));
        o.expect(h_series(*g, K(1))[2] == K(1, 2), g->name() + ": h_2 != zeta^2/2");
    }
}

void rtt(Outcome& o) {
    for (auto& g : {so(5), so(6), sp(4)}) o.add(check_rtt_relations(rtt_natural_rep(g, K(1), 8)));
    for (auto [g, node] : {std::pair{so(5), 0}, {so(6), 0}, {so(6), 1}}) {
        RTTRep t = rtt_spin_rep(g, node, K(1), 8);
        o.add(check_rtt_relations(t));
        GRep s = spin_grep(g, node);
        K kap(g->kappa());
        Mat I = Mat::identity(s.dim);
        std::string tag = g->name() + " spin " + std::to_string(node);
        JRep j = phi_j_from_rtt(t);
        for (size_t k = 0; k < j.J.size(); ++k)
            o.expect(j.J[k] == -kap / K(2) * j.g.F[k], tag + ": J != -(kappa/2) F");
        for (int a : g->indices())
            for (int b : g->indices()) {
                o.expect(t.t(2, a, b) == (a == b ? (kap / K(4) + K(1, 8)) * I : Mat(s.dim, s.dim)),
                         tag + ": t^(2) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
                Mat sq(s.dim, s.dim);
                for (int c : g->indices()) sq += s.f(a, c) * s.f(c, b);
                Mat rhs = kap * s.f(a, b);
                if (a == b) rhs += (kap / K(2) + K(1, 4)) * I;
                o.expect(sq == rhs, tag + ": F^2 identity");
            }
    }
}

void transports(Outcome& o) {
    for (auto& g : {sp(2), so(5), sp(4), so(6)})
        for (auto& z : zetas_13) {
            RTTRep nat = rtt_natural_rep(g, z, 8);
            o.add(verify_transport(nat, Route::RttJ));
            o.add(verify_transport(nat, Route::RttJCur));
            o.add(check_involution_composite(nat));
            o.add(verify_transport(natural_j_rep(g, z), Route::JCur));
            for (int node : g->allowed_nodes()) o.add(verify_transport(fundamental_j_rep(g, node, K(1, 3), z), Route::JCur));
            for (int node = 0; node < g->n(); ++node)
                if (is_spin_node(*g, node)) {
                    RTTRep s = rtt_spin_rep(g, node, z, 8);
                    o.add(verify_transport(s, Route::RttJCur));
                    o.add(check_involution_composite(s));
                }
        }
}

void translation(Outcome& o) {
    for (auto& g : {so(5), sp(4), so(6)})
        for (int node = 0; node < g->n(); ++node)
            if (translation_verifiable(*g, node)) o.add(check_translation(g, node, K(1), 8));
}

void cnm(Outcome& o) {
    for (auto [N, m] : {std::pair{5, 1}, {5, 2}, {6, 1}, {6, 2}, {4, 2}}) o.add(check_cnm_highest_weight(so(N), m, K(1), 8));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> expect_fail, only;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail (recorded analysis)");
    app.add_option("--only", only, "run only these criteria");
    CLI11_PARSE(app, argc, argv);

    std::vector<Criterion> crit{
        {1, "tensor-operator identities, N = 2..7", 5, tensor_identities},
        {2, "Casimir 4 kappa on the adjoint, n <= 3", 10, casimir},
        {3, "QYBE, unitarity and crossing, zeta in {1, 2, 1/3}", 120, qybe},
        {4, "PBW identity suite in U(g)", 180, pbw},
        {5, "evaluation module: current and minimal relations", 60, evaluation},
        {6, "transported J on C^N is zero; case sums", 30, natural_j_zero},
        {7, "intertwiner solver on natural (x) natural", 120, intertwiner},
        {8, "h(u) and the order-2 logarithm of R", 10, log_r},
        {9, "RTT relations on natural and spin modules", 300, rtt},
        {10, "isomorphism transports", 300, transports},
        {11, "RTT -> current translation of Drinfeld polynomials", 300, translation},
        {12, "C^{N,m} highest weights to order 8", 120, cnm},
    };

    std::set<int> failed;
    for (auto& c : crit) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        Outcome o;
        Stopwatch sw;
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.witness = std::string("error: ") + e.what();
        }
        double t = sw.seconds();
        bool in_time = t < c.limit;
        bool ok = o.pass && in_time;
        if (!ok) failed.insert(c.id);
        std::ostringstream line;
        line << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.checks
             << " checks, ";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f s / %.0f s", t, c.limit);
        line << buf << "]";
        if (!o.pass) line << "  first failure: " << o.witness;
        if (!in_time) line << "  over the time limit";
        std::cout << line.str() << std::endl;
    }
    std::set<int> expected(expect_fail.begin(), expect_fail.end());
    if (!only.empty()) {
        std::set<int> sel(only.begin(), only.end()), kept;
        for (int e : expected)
            if (sel.count(e)) kept.insert(e);
        expected = kept;
    }
    if (!expected.empty()) {
        std::cout << "expected failures:";
        for (int e : expected) std::cout << " " << e;
        std::cout << (failed == expected ? " (as recorded)" : " (mismatch)") << std::endl;
    }
    return failed == expected ? 0 : 1;
}
