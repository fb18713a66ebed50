// Experiment harness: edge-count comparison table, d-regular reference
// comparison, and the paired BA/ER, BA/CONF, and mixing-diversity runs.
// Each run returns typed rows; CSV and JSON renderings are separate so the
// CLI stays thin and tests can inspect values directly.

#ifndef FIBERCOUNT_EXPERIMENTS_HPP
#define FIBERCOUNT_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibercount/ratios.hpp"

namespace fibercount {

struct TableEdgesRow {
    std::int64_t x = 0;
    std::optional<double> ln_ratio;  // empty at x = 0
    double ln_recursive = 0.0;
    double ln_closed_form = 0.0;
};

std::vector<TableEdgesRow> table_edges(int n, std::int64_t x_max);
std::string table_edges_csv(const std::vector<TableEdgesRow>& rows);

struct RegularCompareRow {
    int n = 0;
    int d = 0;
    bool skipped_parity = false;
    double ln_recursive = 0.0;
    double ln_reference = 0.0;
    double relative_diff = 0.0;  // |ln_recursive - ln_reference| / |ln_reference|
};

std::vector<RegularCompareRow> regular_compare(const std::vector<int>& sizes,
                                               const std::vector<int>& degrees, NewmanMode mode);
std::string regular_compare_csv(const std::vector<RegularCompareRow>& rows);

struct BaErSample {
    int index = 0;
    bool ok = false;
    std::string error;
    std::int64_t edges = 0;
    double ln_ba = 0.0;
    double ln_er = 0.0;
};

struct BaErReport {
    int n = 0;
    int m = 1;
    int samples = 0;
    std::uint64_t seed = 0;
    NewmanMode mode = NewmanMode::standard;
    std::vector<BaErSample> rows;
};

// Paired BA / equal-edge-count ER graphs; degree-distribution fiber of each.
BaErReport run_ba_er(int n, int m, int samples, std::uint64_t seed, NewmanMode mode);
std::string ba_er_csv(const BaErReport& report);
std::string ba_er_json(const BaErReport& report);

struct BaConfSample {
    int index = 0;
    bool ok = false;
    std::string error;
    double ln_ba = 0.0;
    double ln_conf = 0.0;
};

struct BaConfReport {
    int n = 0;
    int m = 1;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<BaConfSample> rows;
};

// Paired BA / equal-degree-sequence configuration graphs; degree-mixing
// fiber of each.
BaConfReport run_ba_conf(int n, int m, int samples, std::uint64_t seed);
std::string ba_conf_csv(const BaConfReport& report);
std::string ba_conf_json(const BaConfReport& report);

struct DiversitySample {
    int index = 0;
    bool ok = false;
    std::string error;
    double ln_distinct = 0.0;
    int inner_failures = 0;
    bool floored = false;
};

struct DiversityReport {
    int n = 0;
    int m = 1;
    int samples = 0;
    int inner_samples = 0;
    std::uint64_t seed = 0;
    NewmanMode mode = NewmanMode::standard;
    std::vector<DiversitySample> rows;
};

// Distinct degree-mixing-matrix estimates for BA-generated degree
// distributions.
DiversityReport run_diversity(int n, int m, int samples, int inner_samples, std::uint64_t seed,
                              NewmanMode mode);
std::string diversity_csv(const DiversityReport& report);
std::string diversity_json(const DiversityReport& report);

}  // namespace fibercount

#endif  // FIBERCOUNT_EXPERIMENTS_HPP
