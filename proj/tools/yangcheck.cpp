#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "yangian/suites.hpp"

using namespace yang;
using nlohmann::ordered_json;

namespace {

Series parse_series(const std::string& s) {
    if (s == "B" || s == "b") return Series::B;
    if (s == "C" || s == "c") return Series::C;
    if (s == "D" || s == "d") return Series::D;
    throw ConfigError("series must be B, C or D, got '" + s + "'");
}

ordered_json tuple_json(const DrinfeldTuple& t) {
    ordered_json polys = ordered_json::array();
    for (auto& p : t.polys) {
        ordered_json cs = ordered_json::array();
        for (auto& c : p.coeffs()) cs.push_back(c.str());
        polys.push_back(cs);
    }
    return {{"side", t.side == Side::Rtt ? "rtt" : "cur"}, {"polys", polys}};
}

ordered_json report_json(const Report& r, bool timing) {
    const auto& c = r.config;
    ordered_json specs = ordered_json::array(), zetas = ordered_json::array();
    for (auto [s, n] : c.specs) specs.push_back(algebra_name(s, n));
    for (auto& z : c.zetas) zetas.push_back(z.str());
    ordered_json j;
    j["report_version"] = 1;
    j["tool_version"] = r.tool_version;
    j["config"] = {{"specs", specs}, {"zeta", zetas},      {"order", c.order},
                   {"rmax", c.rmax},  {"smax", c.smax},    {"degree_bound", c.degree_bound},
                   {"suites", c.suites}};
    ordered_json recs = ordered_json::array();
    for (auto& rec : r.records) {
        ordered_json o;
        o["suite"] = rec.suite;
        o["spec"] = rec.spec;
        o["zeta"] = rec.zeta.empty() ? ordered_json(nullptr) : ordered_json(rec.zeta);
        o["id"] = rec.id;
        o["paper_anchor"] = rec.anchor;
        o["status"] = rec.status;
        o["witness"] = rec.witness;
        o["detail"] = rec.detail;
        o["instances"] = rec.instances;
        o["elapsed"] = timing ? ordered_json(rec.elapsed) : ordered_json(nullptr);
        recs.push_back(o);
    }
    j["records"] = recs;
    ordered_json tables = ordered_json::array();
    for (auto& t : r.tables) {
        ordered_json rows = ordered_json::array(), entries = ordered_json::array();
        for (auto& row : t.rows)
            rows.push_back({{"k", row.k}, {"node", row.node}, {"offset", row.offset.str()}, {"formula", row.formula}});
        for (auto& e : t.entries)
            entries.push_back({{"node", e.node},
                               {"zeta", e.zeta},
                               {"input", tuple_json(e.input)},
                               {"output", tuple_json(e.output)},
                               {"status", e.status}});
        tables.push_back({{"spec", t.spec}, {"rows", rows}, {"entries", entries}});
    }
    j["translation_tables"] = tables;
    j["summary"] = {{"checks", r.records.size()},     {"pass", r.count("pass")},
                    {"fail", r.count("fail")},        {"skipped", r.count("skipped")},
                    {"unverified", r.count("unverified")}};
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Yangian presentations for so_N and sp_N"};
    std::vector<std::string> series;
    std::vector<int> ranks;
    std::vector<std::string> zetas, suites;
    std::string format = "text", out;
    bool timing = false;
    SuiteConfig cfg;
    app.add_option("--series", series, "B, C or D (repeatable, paired with --n)")->required();
    app.add_option("--n", ranks, "rank (repeatable)")->required();
    app.add_option("--zeta", zetas, "deformation parameter p/q (repeatable)");
    app.add_option("--order", cfg.order, "series truncation order");
    app.add_option("--rmax", cfg.rmax, "r budget for current-presentation checks");
    app.add_option("--smax", cfg.smax, "s budget for current-presentation checks");
    app.add_option("--degree-bound", cfg.degree_bound, "intertwiner polynomial degree bound");
    app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
    app.add_option("--suite", suites, "suite name (repeatable)")->required();
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out, "write the report to this path");
    app.add_flag("--timing", timing, "include wall-clock times (reports are then not byte-identical)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (series.size() != ranks.size() && series.size() != 1)
            throw ConfigError("--series must be given once or once per --n");
        for (size_t k = 0; k < ranks.size(); ++k)
            cfg.specs.push_back({parse_series(series.size() == 1 ? series[0] : series[k]), ranks[k]});
        if (!zetas.empty()) {
            cfg.zetas.clear();
            for (auto& z : zetas) {
                try {
                    cfg.zetas.push_back(K::parse(z));
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(e.what());
                }
            }
        }
        cfg.suites = suites;
        validate(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }

    Report rep = run_suite(cfg);
    std::string body = format == "json" ? report_json(rep, timing).dump(2) + "\n" : report_text(rep, timing);
    if (out.empty()) {
        std::cout << body;
    } else {
        std::filesystem::path p(out);
        if (const char* dir = std::getenv("YANGCHECK_REPORT_DIR"); dir && p.is_relative()) p = std::filesystem::path(dir) / p;
        std::ofstream f(p);
        if (!f) {
            std::cerr << "cannot write " << p << "\n";
            return 2;
        }
        f << body;
    }
    return rep.all_pass() ? 0 : 1;
}
