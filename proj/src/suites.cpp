#include "yangian/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "yangian/identities.hpp"
#include "yangian/rmatrix.hpp"

namespace yang {

const char* const tool_version = "1.0.0";

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"liealg",       "pbw-identities", "qybe",
                                                "presentations", "isomorphisms",  "drinfeld"};
    return names;
}

void validate(const SuiteConfig& cfg) {
    if (cfg.specs.empty()) throw ConfigError("no spec selected");
    if (cfg.suites.empty()) throw ConfigError("no suite selected");
    if (cfg.zetas.empty()) throw ConfigError("no zeta value");
    for (auto& s : cfg.suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw ConfigError("unknown suite '" + s + "'");
    for (auto& z : cfg.zetas) {
        if (z.is_zero()) throw ConfigError("zeta must be nonzero");
        if (!z.is_rational()) throw ConfigError("zeta must be rational, got " + z.str());
    }
    for (auto [s, n] : cfg.specs) {
        try {
            LieAlgebra::build(s, n);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (cfg.order < 2) throw ConfigError("truncation order must be at least 2");
    if (cfg.rmax < 1 || cfg.smax < 0) throw ConfigError("r/s budgets must be positive");
    if (cfg.degree_bound < 1) throw ConfigError("degree bound must be positive");
}

bool Report::all_pass() const {
    return std::none_of(records.begin(), records.end(), [](const Record& r) { return r.status == "fail"; });
}

long Report::count(const std::string& status) const {
    return std::count_if(records.begin(), records.end(), [&](const Record& r) { return r.status == status; });
}

namespace {

struct JobOut {
    std::vector<Record> records;
    std::optional<TranslationTable> table;
};

struct Job {
    int suite = 0, spec = 0, zeta = -1;
    std::function<JobOut()> run;
};

struct Ctx {
    std::string suite, spec, zeta;

    Record from(const CheckReport& c) const {
        Record r{suite, spec, zeta, c.id, c.anchor, c.pass ? "pass" : "fail", c.witness, c.detail, c.instances,
                 c.elapsed};
        return r;
    }
    Record plain(std::string id, std::string anchor, std::string status, std::string witness) const {
        return Record{suite, spec, zeta, std::move(id), std::move(anchor), std::move(status), std::move(witness),
                      "", 0, 0};
    }
};

// Runs f; an exception becomes a failing record under the given id.
void guarded(JobOut& out, const Ctx& ctx, const std::string& id, const std::string& anchor,
             const std::function<CheckReport()>& f) {
    try {
        out.records.push_back(ctx.from(f()));
    } catch (const std::exception& e) {
        out.records.push_back(ctx.plain(id, anchor, "fail", std::string("error: ") + e.what()));
    }
}

JobOut run_liealg(const Ctx& ctx, Spec g) {
    JobOut out;
    guarded(out, ctx, "tensor-identities", "P,Q", [&] { return check_tensor_identities(*g); });
    guarded(out, ctx, "casimir", "4kappa", [&] { return check_casimir(*g); });
    guarded(out, ctx, "projectors", "R:A", [&] { return check_projectors(*g); });
    guarded(out, ctx, "grep:natural", "FijFkl", [&] {
        auto r = check_grep(natural_grep(g));
        r.id = "grep:natural:" + g->name();
        return r;
    });
    for (int node = 0; node < g->n(); ++node)
        if (is_spin_node(*g, node))
            guarded(out, ctx, "grep:spin", "FijFkl", [&] {
                auto r = check_grep(spin_grep(g, node));
                r.id = "grep:spin:" + g->name() + ":node=" + std::to_string(node);
                return r;
            });
    return out;
}

JobOut run_pbw(const Ctx& ctx, Spec g, const SuiteConfig& cfg) {
    JobOut out;
    if (g->n() > cfg.pbw_max_rank) {
        std::string why = "rank " + std::to_string(g->n()) + " exceeds the PBW budget " + std::to_string(cfg.pbw_max_rank);
        out.records.push_back(ctx.plain("gnw:" + g->name(), "lem:GNW", "skipped", why));
        out.records.push_back(ctx.plain("v-cartan-form:" + g->name(), "v_k", "skipped", why));
        out.records.push_back(ctx.plain("cartan-commutator-reduction:" + g->name(), "JF:cl", "skipped", why));
        return out;
    }
    guarded(out, ctx, "gnw", "lem:GNW", [&] { return check_gnw_identities(*g); });
    guarded(out, ctx, "v-cartan-form", "v_k", [&] { return check_v_cartan_form(*g); });
    guarded(out, ctx, "cartan-commutator-reduction", "JF:cl", [&] { return check_cartan_commutator_reduction(*g); });
    return out;
}

JobOut run_qybe(const Ctx& ctx, Spec g, const K& z, const SuiteConfig& cfg) {
    JobOut out;
    guarded(out, ctx, "qybe", "eq YBE", [&] { return check_qybe(*g, z); });
    guarded(out, ctx, "unitarity-crossing", "eq unitary", [&] { return check_unitarity_crossing(*g, z); });
    guarded(out, ctx, "log-r", "h-hk", [&] { return check_log_r(*g, z); });
    guarded(out, ctx, "intertwiner", "PRRP", [&] { return check_intertwiner_natural(*g, z, cfg.degree_bound); });
    return out;
}

JobOut run_presentations(const Ctx& ctx, Spec g, const K& z, const SuiteConfig& cfg) {
    JobOut out;
    guarded(out, ctx, "j-relations", "D:Y(g)-DI", [&] { return check_j_relations(natural_j_rep(g, z)); });
    CurRep c = natural_current_rep(g, z, std::max(8, cfg.rmax + cfg.smax + 1));
    guarded(out, ctx, "current-relations", "D:Ycr(g)-", [&] { return check_current_relations(c, cfg.rmax, cfg.smax); });
    guarded(out, ctx, "minimal-relations", "smallerset", [&] { return check_minimal_relations(c); });
    guarded(out, ctx, "rtt-relations", "RTT:BCD", [&] { return check_rtt_relations(rtt_natural_rep(g, z, cfg.order)); });
    for (int node = 0; node < g->n(); ++node)
        if (is_spin_node(*g, node))
            guarded(out, ctx, "rtt-relations:spin", "RTT:BCD", [&] {
                auto r = check_rtt_relations(rtt_spin_rep(g, node, z, cfg.order));
                r.id += ":spin" + std::to_string(node);
                return r;
            });
    return out;
}

JobOut run_isomorphisms(const Ctx& ctx, Spec g, const K& z, const SuiteConfig& cfg) {
    JobOut out;
    RTTRep nat = rtt_natural_rep(g, z, cfg.order);
    auto tagged = [&](CheckReport r, const std::string& what) {
        r.id += ":" + what;
        return r;
    };
    for (Route route : {Route::RttJ, Route::RttJCur})
        guarded(out, ctx, "transport", "T:YR-iso",
                [&] { return tagged(verify_transport(nat, route, cfg.rmax), "natural"); });
    guarded(out, ctx, "transport", "T:Ycr(g)-",
            [&] { return tagged(verify_transport(natural_j_rep(g, z), Route::JCur, cfg.rmax), "natural"); });
    for (int node = 0; node < g->n(); ++node)
        if (is_spin_node(*g, node))
            guarded(out, ctx, "transport", "T:YR-iso", [&] {
                return tagged(verify_transport(rtt_spin_rep(g, node, z, cfg.order), Route::RttJCur, cfg.rmax),
                              "spin" + std::to_string(node));
            });
    guarded(out, ctx, "involution-composite", "T:YR-iso", [&] { return check_involution_composite(nat); });
    return out;
}

DrinfeldTuple canonical_p(const LieAlgebra& g, int node, const K& zeta) {
    DrinfeldTuple P;
    P.side = Side::Rtt;
    for (int k = 1; k <= g.n(); ++k)
        P.polys.push_back(k == node + 1 ? PolyU::linear_root(zeta * fundamental_rtt_point(g, node)) : PolyU(K(1)));
    return P;
}

JobOut run_drinfeld(const Ctx& ctx, Spec g, const K& z, const SuiteConfig& cfg) {
    JobOut out;
    for (int m = 1; m <= std::min(2, g->n()); ++m) {
        long ambient = g->N() * (m == 2 ? g->N() : 1);
        if (ambient > 4096) continue;
        guarded(out, ctx, "cnm-highest-weight:m=" + std::to_string(m), "R-CN,m",
                [&] { return check_cnm_highest_weight(g, m, z, cfg.order); });
    }
    TranslationTable table = translation_report(*g, z);
    for (auto& e : table.entries) {
        std::string id = "translation:" + g->name() + ":node=" + std::to_string(e.node);
        if (!translation_verifiable(*g, e.node)) {
            out.records.push_back(ctx.plain(id, "T:cr-R", "unverified", "translated, unverified"));
            continue;
        }
        size_t before = out.records.size();
        guarded(out, ctx, id, "T:cr-R", [&] { return check_translation(g, e.node, z, cfg.order); });
        e.status = out.records.size() > before && out.records.back().status == "pass" ? "verified" : "failed";
    }
    out.table = std::move(table);
    return out;
}

}  // namespace

TranslationTable translation_report(const LieAlgebra& g, const K& zeta) {
    TranslationTable t;
    t.spec = g.name();
    t.rows = translation_table(g);
    for (int node = 0; node < g.n(); ++node) {
        TranslationEntry e;
        e.node = node;
        e.zeta = zeta.str();
        e.input = canonical_p(g, node, zeta);
        e.output = translate_tuple(e.input, g, zeta);
        e.status = "translated, unverified";
        t.entries.push_back(std::move(e));
    }
    return t;
}

Report run_suite(const SuiteConfig& cfg) {
    validate(cfg);
    std::vector<Spec> specs;
    for (auto [s, n] : cfg.specs) specs.push_back(make_spec(s, n));

    std::vector<Job> jobs;
    auto suite_index = [](const std::string& s) {
        return static_cast<int>(std::find(suite_names().begin(), suite_names().end(), s) - suite_names().begin());
    };
    std::vector<std::string> suites = cfg.suites;
    std::sort(suites.begin(), suites.end(), [&](auto& a, auto& b) { return suite_index(a) < suite_index(b); });
    suites.erase(std::unique(suites.begin(), suites.end()), suites.end());

    for (auto& suite : suites) {
        int si = suite_index(suite);
        bool per_zeta = suite != "liealg" && suite != "pbw-identities";
        for (size_t gi = 0; gi < specs.size(); ++gi) {
            Spec g = specs[gi];
            if (!per_zeta) {
                Ctx ctx{suite, g->name(), ""};
                if (suite == "liealg")
                    jobs.push_back({si, static_cast<int>(gi), -1, [=] { return run_liealg(ctx, g); }});
                else
                    jobs.push_back({si, static_cast<int>(gi), -1, [=, &cfg] { return run_pbw(ctx, g, cfg); }});
                continue;
            }
            for (size_t zi = 0; zi < cfg.zetas.size(); ++zi) {
                K z = cfg.zetas[zi];
                Ctx ctx{suite, g->name(), z.str()};
                std::function<JobOut()> f;
                if (suite == "qybe") f = [=, &cfg] { return run_qybe(ctx, g, z, cfg); };
                if (suite == "presentations") f = [=, &cfg] { return run_presentations(ctx, g, z, cfg); };
                if (suite == "isomorphisms") f = [=, &cfg] { return run_isomorphisms(ctx, g, z, cfg); };
                if (suite == "drinfeld") f = [=, &cfg] { return run_drinfeld(ctx, g, z, cfg); };
                jobs.push_back({si, static_cast<int>(gi), static_cast<int>(zi), f});
            }
        }
        if (suite == "pbw-identities")
            jobs.push_back({si, -1, -1, [si] {
                                JobOut out;
                                Ctx ctx{suite_names()[si], "sp2", ""};
                                guarded(out, ctx, "sl2-identities", "w+w-", [] { return check_sl2_identities(); });
                                return out;
                            }});
    }

    std::vector<JobOut> results(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k; (k = next++) < jobs.size();) results[k] = jobs[k].run();
    };
    unsigned hw = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::max(1u, std::thread::hardware_concurrency());
    unsigned nthreads = std::min<unsigned>(hw, static_cast<unsigned>(jobs.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // single-writer assembly in (suite, spec, zeta, id) order
    std::vector<size_t> order(jobs.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        auto& x = jobs[a];
        auto& y = jobs[b];
        return std::tie(x.suite, x.spec, x.zeta) < std::tie(y.suite, y.spec, y.zeta);
    });
    Report rep;
    rep.tool_version = tool_version;
    rep.config = cfg;
    for (size_t k : order) {
        auto recs = results[k].records;
        std::stable_sort(recs.begin(), recs.end(), [](const Record& a, const Record& b) { return a.id < b.id; });
        rep.records.insert(rep.records.end(), recs.begin(), recs.end());
        if (results[k].table) rep.tables.push_back(*results[k].table);
    }
    return rep;
}

std::string report_text(const Report& r, bool timing) {
    std::vector<std::vector<std::string>> rows{{"suite", "spec", "zeta", "id", "anchor", "status", "witness"}};
    if (timing) rows[0].push_back("elapsed");
    for (auto& rec : r.records) {
        rows.push_back({rec.suite, rec.spec, rec.zeta.empty() ? "-" : rec.zeta, rec.id, rec.anchor, rec.status,
                        rec.witness.empty() ? rec.detail : rec.witness});
        if (timing) {
            std::ostringstream t;
            t << std::fixed << std::setprecision(3) << rec.elapsed;
            rows.back().push_back(t.str());
        }
    }
    std::vector<size_t> width(rows[0].size(), 0);
    for (auto& row : rows)
        for (size_t c = 0; c + 1 < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    };
    for (auto& row : rows) emit(row);
    for (auto& t : r.tables) {
        os << "\ntranslation " << t.spec << "\n";
        for (auto& row : t.rows) os << "  k=" << row.k << "  " << row.formula << "\n";
        for (auto& e : t.entries)
            os << "  node " << e.node << " zeta " << e.zeta << ": " << e.input.str() << " -> " << e.output.str() << "  ["
               << e.status << "]\n";
    }
    os << "\n"
       << r.records.size() << " checks: " << r.count("pass") << " pass, " << r.count("fail") << " fail, "
       << r.count("skipped") << " skipped, " << r.count("unverified") << " unverified\n";
    return os.str();
}

}  // namespace yang
