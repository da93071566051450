#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yangian/drinfeld.hpp"

namespace yang {

/// Invalid configuration: unknown suite, empty spec list, zero or irrational zeta, ...
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();

struct SuiteConfig {
    std::vector<std::pair<Series, int>> specs;
    std::vector<K> zetas{K(1)};
    int order = 8;
    int rmax = 3;
    int smax = 3;
    int pbw_max_rank = 3;
    int degree_bound = 6;
    std::vector<std::string> suites;
    int threads = 0;  // 0: hardware concurrency
};

/// Throws ConfigError.
void validate(const SuiteConfig& cfg);

struct Record {
    std::string suite;
    std::string spec;
    std::string zeta;  // "" for zeta-independent checks
    std::string id;
    std::string anchor;
    std::string status;  // pass | fail | skipped | unverified
    std::string witness;
    std::string detail;
    long instances = 0;
    double elapsed = 0;
};

struct TranslationEntry {
    int node = 0;
    std::string zeta;
    DrinfeldTuple input, output;
    std::string status;  // verified | failed | translated, unverified
};

struct TranslationTable {
    std::string spec;
    std::vector<TranslationRow> rows;
    std::vector<TranslationEntry> entries;
};

struct Report {
    std::string tool_version;
    SuiteConfig config;
    std::vector<Record> records;  // ordered by (suite, spec, zeta, id)
    std::vector<TranslationTable> tables;

    bool all_pass() const;
    long count(const std::string& status) const;
};

extern const char* const tool_version;

/// Runs the named suites over every (spec, zeta) pair, concurrently; assembly is
/// single-threaded and the record order deterministic.
Report run_suite(const SuiteConfig& cfg);

/// Translation rows plus, per node, the canonical fundamental P-tuple and its image.
TranslationTable translation_report(const LieAlgebra& g, const K& zeta);

/// Aligned text tables.
std::string report_text(const Report& r, bool timing = false);

}  // namespace yang
