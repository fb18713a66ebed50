#include "fibercount/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "fibercount/fibers.hpp"
#include "fibercount/generators.hpp"
#include "fibercount/parallel.hpp"

namespace fibercount {

namespace {

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

constexpr double kLn10 = 2.302585092994046;

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
    std::size_t count = 0;
};

MeanSd mean_sd(const std::vector<double>& values) {
    MeanSd out;
    out.count = values.size();
    if (values.empty()) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        out.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return out;
}

nlohmann::json mean_sd_json(const MeanSd& stats) {
    return {{"mean", stats.mean}, {"sd", stats.sd}, {"count", stats.count}};
}

}  // namespace

std::vector<TableEdgesRow> table_edges(int n, std::int64_t x_max) {
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (x_max < 0 || x_max > max_edges)
        throw std::invalid_argument("table_edges: x_max out of [0, C(n,2)]");
    std::vector<TableEdgesRow> rows;
    rows.reserve(static_cast<std::size_t>(x_max) + 1);
    double ln_running = 0.0;
    for (std::int64_t x = 0; x <= x_max; ++x) {
        TableEdgesRow row;
        row.x = x;
        if (x > 0) {
            const double r = ratio_edges(n, x - 1, x);
            row.ln_ratio = std::log(r);
            ln_running += std::log(r);
        }
        row.ln_recursive = ln_running;
        const LogCount closed = closed_form_edges(n, x);
        row.ln_closed_form = closed.ln();
        rows.push_back(row);
    }
    return rows;
}

std::string table_edges_csv(const std::vector<TableEdgesRow>& rows) {
    std::ostringstream out;
    out << "x,ln_ratio,ln_count_recursive,ln_count_closed_form,"
           "log10_count_recursive,log10_count_closed_form\n";
    for (const auto& row : rows) {
        out << row.x << ',';
        if (row.ln_ratio) out << fmt(*row.ln_ratio);
        out << ',' << fmt(row.ln_recursive) << ',' << fmt(row.ln_closed_form) << ','
            << fmt(row.ln_recursive / kLn10) << ',' << fmt(row.ln_closed_form / kLn10) << '\n';
    }
    return out.str();
}

std::vector<RegularCompareRow> regular_compare(const std::vector<int>& sizes,
                                               const std::vector<int>& degrees, NewmanMode mode) {
    std::vector<RegularCompareRow> rows;
    for (int n : sizes) {
        for (int d : degrees) {
            RegularCompareRow row;
            row.n = n;
            row.d = d;
            if ((static_cast<std::int64_t>(n) * d) % 2 != 0) {
                row.skipped_parity = true;
                rows.push_back(row);
                continue;
            }
            DegreeSequence seq;
            seq.degrees.assign(static_cast<std::size_t>(n), d);
            row.ln_recursive = count_degseq_fiber(seq, mode).log_count.ln();
            row.ln_reference = liebenau_regular_reference(n, d).ln();
            row.relative_diff =
                std::abs(row.ln_recursive - row.ln_reference) / std::abs(row.ln_reference);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string regular_compare_csv(const std::vector<RegularCompareRow>& rows) {
    std::ostringstream out;
    out << "n,d,status,ln_recursive,ln_reference,rel_diff,log10_recursive,log10_reference\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.d << ',';
        if (row.skipped_parity) {
            out << "skipped_parity,,,,,\n";
            continue;
        }
        out << "ok," << fmt(row.ln_recursive) << ',' << fmt(row.ln_reference) << ','
            << fmt(row.relative_diff) << ',' << fmt(row.ln_recursive / kLn10) << ','
            << fmt(row.ln_reference / kLn10) << '\n';
    }
    return out.str();
}

BaErReport run_ba_er(int n, int m, int samples, std::uint64_t seed, NewmanMode mode) {
    if (samples < 1) throw std::invalid_argument("run_ba_er: samples must be >= 1");
    BaErReport report;
    report.n = n;
    report.m = m;
    report.samples = samples;
    report.seed = seed;
    report.mode = mode;
    report.rows.resize(static_cast<std::size_t>(samples));

    parallel_chunks(samples, [&](std::int64_t, std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            BaErSample& row = report.rows[static_cast<std::size_t>(i)];
            row.index = static_cast<int>(i);
            try {
                RngStream rng_ba = RngStream::substream(seed, 2 * static_cast<std::uint64_t>(i));
                RngStream rng_er = RngStream::substream(seed, 2 * static_cast<std::uint64_t>(i) + 1);
                const Graph ba = gen_ba(n, m, rng_ba);
                const Graph er = gen_er_gnm(n, phi_edges(ba), rng_er);
                row.edges = phi_edges(ba);
                row.ln_ba = count_degdist_fiber(degree_distribution(ba), mode).log_count.ln();
                row.ln_er = count_degdist_fiber(degree_distribution(er), mode).log_count.ln();
                row.ok = true;
            } catch (const std::exception& err) {
                row.ok = false;
                row.error = err.what();
            }
        }
    });
    return report;
}

std::string ba_er_csv(const BaErReport& report) {
    std::ostringstream out;
    out << "sample,edges,ln_fiber_ba,ln_fiber_er,diff_ln,log10_fiber_ba,log10_fiber_er\n";
    for (const auto& row : report.rows) {
        if (!row.ok) continue;
        out << row.index << ',' << row.edges << ',' << fmt(row.ln_ba) << ',' << fmt(row.ln_er)
            << ',' << fmt(row.ln_ba - row.ln_er) << ',' << fmt(row.ln_ba / kLn10) << ','
            << fmt(row.ln_er / kLn10) << '\n';
    }
    return out.str();
}

namespace {

template <typename Row>
nlohmann::json failed_indices(const std::vector<Row>& rows) {
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& row : rows)
        if (!row.ok) failed.push_back(row.index);
    return failed;
}

}  // namespace

std::string ba_er_json(const BaErReport& report) {
    std::vector<double> ba, er, diff;
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& row : report.rows) {
        if (!row.ok) continue;
        ba.push_back(row.ln_ba);
        er.push_back(row.ln_er);
        diff.push_back(row.ln_ba - row.ln_er);
        samples.push_back({{"sample", row.index},
                           {"edges", row.edges},
                           {"ln_fiber_ba", row.ln_ba},
                           {"ln_fiber_er", row.ln_er},
                           {"diff_ln", row.ln_ba - row.ln_er}});
    }
    nlohmann::json record{
        {"experiment", "ba-er"},
        {"parameters",
         {{"n", report.n},
          {"m", report.m},
          {"samples", report.samples},
          {"seed", report.seed},
          {"mode", newman_mode_name(report.mode)}}},
        {"samples", samples},
        {"failures", failed_indices(report.rows).size()},
        {"failed_samples", failed_indices(report.rows)},
        {"summary",
         {{"ln_fiber_ba", mean_sd_json(mean_sd(ba))},
          {"ln_fiber_er", mean_sd_json(mean_sd(er))},
          {"diff_ln", mean_sd_json(mean_sd(diff))}}},
    };
    return record.dump();
}

BaConfReport run_ba_conf(int n, int m, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("run_ba_conf: samples must be >= 1");
    BaConfReport report;
    report.n = n;
    report.m = m;
    report.samples = samples;
    report.seed = seed;
    report.rows.resize(static_cast<std::size_t>(samples));

    parallel_chunks(samples, [&](std::int64_t, std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            BaConfSample& row = report.rows[static_cast<std::size_t>(i)];
            row.index = static_cast<int>(i);
            try {
                RngStream rng_ba = RngStream::substream(seed, 2 * static_cast<std::uint64_t>(i));
                RngStream rng_conf = RngStream::substream(seed, 2 * static_cast<std::uint64_t>(i) + 1);
                const Graph ba = gen_ba(n, m, rng_ba);
                const Graph conf = gen_config_uniform(degree_sequence(ba), rng_conf);
                DegreeMixingMatrix dmm_ba = degree_mixing_matrix(ba);
                DegreeMixingMatrix dmm_conf = degree_mixing_matrix(conf);
                dmm_ba.shrink_to_content();
                dmm_conf.shrink_to_content();
                row.ln_ba = count_degmix_fiber(dmm_ba, n).log_count.ln();
                row.ln_conf = count_degmix_fiber(dmm_conf, n).log_count.ln();
                row.ok = true;
            } catch (const std::exception& err) {
                row.ok = false;
                row.error = err.what();
            }
        }
    });
    return report;
}

std::string ba_conf_csv(const BaConfReport& report) {
    std::ostringstream out;
    out << "sample,ln_fiber_ba,ln_fiber_conf,diff_ln,log10_fiber_ba,log10_fiber_conf\n";
    for (const auto& row : report.rows) {
        if (!row.ok) continue;
        out << row.index << ',' << fmt(row.ln_ba) << ',' << fmt(row.ln_conf) << ','
            << fmt(row.ln_ba - row.ln_conf) << ',' << fmt(row.ln_ba / kLn10) << ','
            << fmt(row.ln_conf / kLn10) << '\n';
    }
    return out.str();
}

std::string ba_conf_json(const BaConfReport& report) {
    std::vector<double> ba, conf, diff;
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& row : report.rows) {
        if (!row.ok) continue;
        ba.push_back(row.ln_ba);
        conf.push_back(row.ln_conf);
        diff.push_back(row.ln_ba - row.ln_conf);
        samples.push_back({{"sample", row.index},
                           {"ln_fiber_ba", row.ln_ba},
                           {"ln_fiber_conf", row.ln_conf},
                           {"diff_ln", row.ln_ba - row.ln_conf}});
    }
    nlohmann::json record{
        {"experiment", "ba-conf"},
        {"parameters",
         {{"n", report.n}, {"m", report.m}, {"samples", report.samples}, {"seed", report.seed}}},
        {"samples", samples},
        {"failures", failed_indices(report.rows).size()},
        {"failed_samples", failed_indices(report.rows)},
        {"summary",
         {{"ln_fiber_ba", mean_sd_json(mean_sd(ba))},
          {"ln_fiber_conf", mean_sd_json(mean_sd(conf))},
          {"diff_ln", mean_sd_json(mean_sd(diff))}}},
    };
    return record.dump();
}

DiversityReport run_diversity(int n, int m, int samples, int inner_samples, std::uint64_t seed,
                              NewmanMode mode) {
    if (samples < 1) throw std::invalid_argument("run_diversity: samples must be >= 1");
    if (inner_samples < 1) throw std::invalid_argument("run_diversity: inner_samples must be >= 1");
    DiversityReport report;
    report.n = n;
    report.m = m;
    report.samples = samples;
    report.inner_samples = inner_samples;
    report.seed = seed;
    report.mode = mode;
    report.rows.resize(static_cast<std::size_t>(samples));

    parallel_chunks(samples, [&](std::int64_t, std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            DiversitySample& row = report.rows[static_cast<std::size_t>(i)];
            row.index = static_cast<int>(i);
            try {
                RngStream rng_ba = RngStream::substream(seed, 2 * static_cast<std::uint64_t>(i));
                const Graph ba = gen_ba(n, m, rng_ba);
                const auto estimate = estimate_distinct_dmm(
                    degree_distribution(ba), inner_samples,
                    split_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1), mode);
                row.ln_distinct = estimate.value.ln();
                row.inner_failures = estimate.failed;
                row.floored = estimate.floored;
                row.ok = true;
            } catch (const std::exception& err) {
                row.ok = false;
                row.error = err.what();
            }
        }
    });
    return report;
}

std::string diversity_csv(const DiversityReport& report) {
    std::ostringstream out;
    out << "sample,ln_distinct_dmm,log10_distinct_dmm,inner_failures,floored\n";
    for (const auto& row : report.rows) {
        if (!row.ok) continue;
        out << row.index << ',' << fmt(row.ln_distinct) << ',' << fmt(row.ln_distinct / kLn10)
            << ',' << row.inner_failures << ',' << (row.floored ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string diversity_json(const DiversityReport& report) {
    std::vector<double> values;
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& row : report.rows) {
        if (!row.ok) continue;
        values.push_back(row.ln_distinct);
        samples.push_back({{"sample", row.index},
                           {"ln_distinct_dmm", row.ln_distinct},
                           {"inner_failures", row.inner_failures},
                           {"floored", row.floored}});
    }
    nlohmann::json record{
        {"experiment", "diversity"},
        {"parameters",
         {{"n", report.n},
          {"m", report.m},
          {"samples", report.samples},
          {"inner_samples", report.inner_samples},
          {"seed", report.seed},
          {"mode", newman_mode_name(report.mode)}}},
        {"samples", samples},
        {"failures", failed_indices(report.rows).size()},
        {"failed_samples", failed_indices(report.rows)},
        {"summary", {{"ln_distinct_dmm", mean_sd_json(mean_sd(values))}}},
    };
    return record.dump();
}

}  // namespace fibercount
