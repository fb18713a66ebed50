#include "fibercount/ratios.hpp"

#include <cmath>
#include <map>

#include "fibercount/errors.hpp"
#include "fibercount/logspace.hpp"

namespace fibercount {

double ratio_edges(int n, std::int64_t x_prev, std::int64_t x_cur) {
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (x_cur != x_prev + 1)
        throw std::invalid_argument("ratio_edges: requires x_cur = x_prev + 1");
    if (x_prev < 0 || x_cur > max_edges)
        throw std::invalid_argument("ratio_edges: step outside [0, C(n,2)]");
    return static_cast<double>(max_edges - x_prev) / static_cast<double>(x_cur);
}

namespace detail {

double class_pair_count(const DegreeDistribution& D, int dl, int dj) {
    const double cl = static_cast<double>(D.at(dl));
    if (dl == dj) return cl * (cl - 1.0) / 2.0;
    return cl * static_cast<double>(D.at(dj));
}

double expected_dmm_entry_with_stubs(const DegreeDistribution& D, int x, int y,
                                     std::int64_t stubs, NewmanMode mode) {
    if (stubs <= 0) return 0.0;
    const double numerator = static_cast<double>(x) * static_cast<double>(D.at(x)) *
                             static_cast<double>(y) * static_cast<double>(D.at(y));
    const double denominator =
        (mode == NewmanMode::standard) ? static_cast<double>(stubs) : 0.5 * static_cast<double>(stubs);
    double value = numerator / denominator;
    if (x == y) value *= 0.5;
    return value;
}

DegreeHistogram neighbor_degree_histogram(const Graph& g, int v) {
    std::map<int, int> counts;
    for (int u : g.neighbors(v)) counts[g.degree(u)] += 1;
    return DegreeHistogram(counts.begin(), counts.end());
}

namespace {

// ln C(top, bottom); nullopt when the binomial is zero or ill-formed.
std::optional<double> log_choose(std::int64_t top, std::int64_t bottom) {
    if (top < 0 || bottom < 0 || bottom > top) return std::nullopt;
    LogCount c = log_binomial(top, bottom);
    return c.ln();
}

std::int64_t doubled_diagonal_entry(const DegreeMixingMatrix& dmm, int a, int b) {
    const std::int64_t value = dmm.at(a, b);
    return a == b ? 2 * value : value;
}

// One endpoint's factor of the unequal-degree beta form: the product of
// per-degree-class binomials over the other endpoint's row, divided by the
// row-total binomial. other_deg carries the indicator that strips the path
// edge itself when s = 1.
std::optional<double> endpoint_factor(int deg, int other_deg, const DegreeMixingMatrix& dmm,
                                      std::int64_t row_stubs, const DegreeHistogram& neigh,
                                      int s) {
    double log_product = 0.0;
    bool other_seen = false;
    for (const auto& [z, count] : neigh) {
        const std::int64_t indicator = (other_deg == z) ? s : 0;
        if (indicator != 0) other_seen = true;
        const auto term =
            log_choose(doubled_diagonal_entry(dmm, deg, z) - indicator, count - indicator);
        if (!term) return std::nullopt;
        log_product += *term;
    }
    if (s != 0 && !other_seen) {
        // the indicator lands on a degree class absent from the histogram
        const auto term = log_choose(doubled_diagonal_entry(dmm, deg, other_deg) - s, -s);
        if (!term) return std::nullopt;
        log_product += *term;
    }
    const auto denominator = log_choose(row_stubs - s, deg - s);
    if (!denominator) return std::nullopt;
    return log_product - *denominator;
}

std::optional<double> equal_degree_factor(int deg, const DegreeMixingMatrix& dmm,
                                          std::int64_t row_stubs, const DegreeHistogram& neigh_l,
                                          const DegreeHistogram& neigh_j, int s) {
    std::map<int, int> merged;
    for (const auto& [z, count] : neigh_l) merged[z] += count;
    for (const auto& [z, count] : neigh_j) merged[z] += count;
    if (s != 0) merged.try_emplace(deg, 0);  // make sure the indicator class is visited
    double log_product = 0.0;
    for (const auto& [z, count] : merged) {
        const std::int64_t indicator = (z == deg) ? s : 0;
        const auto term = log_choose(doubled_diagonal_entry(dmm, deg, z) - indicator,
                                     count - 2 * indicator);
        if (!term) return std::nullopt;
        log_product += *term;
    }
    const auto denominator = log_choose(row_stubs - s, 2 * deg - 2 * s);
    if (!denominator) return std::nullopt;
    return log_product - *denominator;
}

}  // namespace

std::optional<double> log_beta_correction(int deg_l, int deg_j, const DegreeMixingMatrix& dmm,
                                          std::int64_t row_stubs_l, std::int64_t row_stubs_j,
                                          const DegreeHistogram& neigh_l,
                                          const DegreeHistogram& neigh_j, int s) {
    if (s != 0 && s != 1) throw std::invalid_argument("log_beta_correction: s must be 0 or 1");
    if (deg_l != deg_j) {
        const auto factor_l = endpoint_factor(deg_l, deg_j, dmm, row_stubs_l, neigh_l, s);
        const auto factor_j = endpoint_factor(deg_j, deg_l, dmm, row_stubs_j, neigh_j, s);
        if (!factor_l || !factor_j) return std::nullopt;
        return *factor_l + *factor_j;
    }
    return equal_degree_factor(deg_l, dmm, row_stubs_l, neigh_l, neigh_j, s);
}

}  // namespace detail

double expected_dmm_entry(const DegreeDistribution& D, int x, int y, NewmanMode mode) {
    return detail::expected_dmm_entry_with_stubs(D, x, y, D.stub_count(), mode);
}

namespace {

void check_step_context(const StepContext& ctx) {
    if (ctx.g_cur.edge_count() != ctx.g_prev.edge_count() + 1)
        throw std::invalid_argument("StepContext: graphs must differ by exactly one edge");
    if (!ctx.g_cur.has_edge(ctx.l, ctx.j) || ctx.g_prev.has_edge(ctx.l, ctx.j))
        throw std::invalid_argument("StepContext: (l, j) must be the edge added");
}

}  // namespace

double ratio_degdist(const StepContext& ctx, NewmanMode mode) {
    check_step_context(ctx);
    const DegreeDistribution dist_prev = degree_distribution(ctx.g_prev);
    const DegreeDistribution dist_cur = degree_distribution(ctx.g_cur);
    const int dl_prev = ctx.g_prev.degree(ctx.l);
    const int dj_prev = ctx.g_prev.degree(ctx.j);

    const double beta1 = detail::class_pair_count(dist_prev, dl_prev, dj_prev);
    const double alpha_prev = expected_dmm_entry(dist_prev, dl_prev, dj_prev, mode);
    const double numerator = beta1 - alpha_prev;
    if (numerator <= 0.0)
        throw EstimationError("degree-distribution ratio has nonpositive numerator");
    const double alpha_cur =
        expected_dmm_entry(dist_cur, ctx.g_cur.degree(ctx.l), ctx.g_cur.degree(ctx.j), mode);
    if (alpha_cur <= 0.0)
        throw EstimationError("degree-distribution ratio has zero denominator");
    return numerator / alpha_cur;
}

double ratio_mixing(const std::vector<std::int64_t>& class_sizes, std::int64_t prev_entry,
                    std::int64_t cur_entry, bool same_category, int cat_l, int cat_j) {
    if (same_category != (cat_l == cat_j))
        throw std::invalid_argument("ratio_mixing: same_category flag contradicts categories");
    if (cat_l < 0 || cat_j < 0 || cat_l >= static_cast<int>(class_sizes.size()) ||
        cat_j >= static_cast<int>(class_sizes.size()))
        throw std::invalid_argument("ratio_mixing: category out of range");
    if (cur_entry != prev_entry + 1)
        throw std::invalid_argument("ratio_mixing: requires cur_entry = prev_entry + 1");
    const std::int64_t ml = class_sizes[static_cast<std::size_t>(cat_l)];
    const std::int64_t mj = class_sizes[static_cast<std::size_t>(cat_j)];
    const std::int64_t pairs = same_category ? ml * (ml - 1) / 2 : ml * mj;
    if (pairs - prev_entry <= 0)
        throw std::invalid_argument("ratio_mixing: block already saturated");
    return static_cast<double>(pairs - prev_entry) / static_cast<double>(cur_entry);
}

double beta_factor(const StepContext& ctx, int s) {
    check_step_context(ctx);
    if (s != 0 && s != 1) throw std::invalid_argument("beta_factor: s must be 0 or 1");
    const Graph& g = (s == 0) ? ctx.g_prev : ctx.g_cur;
    const DegreeDistribution dist = degree_distribution(g);
    const DegreeMixingMatrix dmm = degree_mixing_matrix(g);
    const int deg_l = g.degree(ctx.l);
    const int deg_j = g.degree(ctx.j);
    const auto neigh_l = detail::neighbor_degree_histogram(g, ctx.l);
    const auto neigh_j = detail::neighbor_degree_histogram(g, ctx.j);
    const std::int64_t row_stubs_l = static_cast<std::int64_t>(deg_l) * dist.at(deg_l);
    const std::int64_t row_stubs_j = static_cast<std::int64_t>(deg_j) * dist.at(deg_j);
    const auto value = detail::log_beta_correction(deg_l, deg_j, dmm, row_stubs_l, row_stubs_j,
                                                   neigh_l, neigh_j, s);
    if (!value) throw EstimationError("beta factor has an ill-formed binomial");
    return std::exp(*value);
}

double ratio_degmix(const StepContext& ctx) {
    check_step_context(ctx);
    const DegreeDistribution dist_prev = degree_distribution(ctx.g_prev);
    const DegreeMixingMatrix dmm_prev = degree_mixing_matrix(ctx.g_prev);
    const int dl_prev = ctx.g_prev.degree(ctx.l);
    const int dj_prev = ctx.g_prev.degree(ctx.j);

    const double gamma1 = detail::class_pair_count(dist_prev, dl_prev, dj_prev);
    const double alpha2 = static_cast<double>(dmm_prev.at(dl_prev, dj_prev));
    const double numerator = gamma1 - alpha2;
    if (numerator <= 0.0)
        throw EstimationError("degree-mixing ratio has nonpositive numerator");

    const DegreeMixingMatrix dmm_cur = degree_mixing_matrix(ctx.g_cur);
    const std::int64_t entry_cur = dmm_cur.at(ctx.g_cur.degree(ctx.l), ctx.g_cur.degree(ctx.j));
    if (entry_cur <= 0) throw EstimationError("degree-mixing ratio has zero denominator");

    const double log_beta0 = std::log(beta_factor(ctx, 0));
    const double log_beta1 = std::log(beta_factor(ctx, 1));
    return std::exp(std::log(numerator) + log_beta0 - std::log(static_cast<double>(entry_cur)) -
                    log_beta1);
}

}  // namespace fibercount
