#include "fibercount/fibers.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "fibercount/errors.hpp"
#include "fibercount/generators.hpp"

namespace fibercount {

const char* newman_mode_name(NewmanMode mode) {
    return mode == NewmanMode::standard ? "standard" : "as-printed";
}

NewmanMode newman_mode_from_name(const std::string& name) {
    if (name == "standard") return NewmanMode::standard;
    if (name == "as-printed") return NewmanMode::as_printed;
    throw std::invalid_argument("unknown normalization mode: " + name);
}

std::string FiberEstimate::to_json() const {
    nlohmann::json record{
        {"property", property_kind_name(property)},
        {"n", n},
        {"target", target_digest},
        {"ln_count", log_count.is_zero() ? nullptr : nlohmann::json(log_count.ln())},
        {"log10_count", log_count.is_zero() ? nullptr : nlohmann::json(log_count.log10())},
        {"path_length", path_length},
        {"mode", newman_mode_name(mode)},
        {"failures", failures},
    };
    return record.dump();
}

FiberEstimate count_edges_fiber(int n, std::int64_t x) {
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (x < 0 || x > max_edges)
        throw std::invalid_argument("count_edges_fiber: x out of [0, C(n,2)]");
    double ln_total = 0.0;
    for (std::int64_t i = 1; i <= x; ++i) ln_total += std::log(ratio_edges(n, i - 1, i));
    FiberEstimate est;
    est.property = PropertyKind::edges;
    est.n = n;
    est.target_digest = encode_edge_count(x);
    est.log_count = LogCount::from_ln(ln_total);
    est.path_length = static_cast<std::size_t>(x);
    return est;
}

LogCount closed_form_edges(int n, std::int64_t x) {
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    return log_binomial(max_edges, x);
}

FiberEstimate count_degdist_fiber(const DegreeDistribution& D, NewmanMode mode) {
    const EdgePath path = havel_hakimi_path(D);
    const int n = path.n;

    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    DegreeDistribution dist;
    dist.counts.assign(static_cast<std::size_t>(D.max_degree()) + 2, 0);
    dist.counts[0] = n;
    std::int64_t stubs = 0;

    double ln_total = 0.0;
    std::size_t step = 0;
    for (const Edge& e : path.ordered_edges) {
        ++step;
        const int dl = degree[static_cast<std::size_t>(e.u)];
        const int dj = degree[static_cast<std::size_t>(e.v)];
        const double beta1 = detail::class_pair_count(dist, dl, dj);
        const double alpha_prev = detail::expected_dmm_entry_with_stubs(dist, dl, dj, stubs, mode);
        const double numerator = beta1 - alpha_prev;
        if (numerator <= 0.0)
            throw EstimationError("degree-distribution ratio has nonpositive numerator", step);

        for (int v : {e.u, e.v}) {
            const int dv = degree[static_cast<std::size_t>(v)];
            dist.counts[static_cast<std::size_t>(dv)] -= 1;
            dist.counts[static_cast<std::size_t>(dv) + 1] += 1;
            degree[static_cast<std::size_t>(v)] = dv + 1;
        }
        stubs += 2;

        const double alpha_cur = detail::expected_dmm_entry_with_stubs(
            dist, degree[static_cast<std::size_t>(e.u)], degree[static_cast<std::size_t>(e.v)],
            stubs, mode);
        if (alpha_cur <= 0.0)
            throw EstimationError("degree-distribution ratio has zero denominator", step);
        ln_total += std::log(numerator) - std::log(alpha_cur);
    }

    FiberEstimate est;
    est.property = PropertyKind::degree_distribution;
    est.n = n;
    est.target_digest = encode_degree_distribution(D);
    est.log_count = LogCount::from_ln(ln_total);
    est.path_length = path.ordered_edges.size();
    est.mode = mode;
    return est;
}

FiberEstimate count_degseq_fiber(const DegreeSequence& d, NewmanMode mode) {
    d.validate();
    const DegreeDistribution D = degree_distribution(d);
    FiberEstimate est = count_degdist_fiber(D, mode);

    // divide by the number of ways to assign vertices to degree classes
    const std::int64_t n = D.vertex_count();
    double ln_assignments = 0.0;
    std::int64_t remaining = n;
    for (std::size_t j = 0; j < D.counts.size(); ++j) {
        ln_assignments += log_binomial(remaining, D.counts[j]).ln();
        remaining -= D.counts[j];
    }

    est.property = PropertyKind::degree_sequence;
    est.target_digest = encode_degree_sequence(d);
    est.log_count = LogCount::from_ln(est.log_count.ln() - ln_assignments);
    return est;
}

FiberEstimate count_mixing_fiber(const CovariateAssignment& a, const MixingMatrix& mm) {
    const auto M = a.class_sizes();
    if (!mm.feasible(M))
        throw NotGraphicalError("mixing matrix infeasible for the class sizes");
    const EdgePath path = mixing_path(a, mm);

    MixingMatrix filled(mm.categories());
    double ln_total = 0.0;
    for (const Edge& e : path.ordered_edges) {
        const int cl = a.labels[static_cast<std::size_t>(e.u)];
        const int cj = a.labels[static_cast<std::size_t>(e.v)];
        const std::int64_t prev = filled.at(cl, cj);
        ln_total += std::log(ratio_mixing(M, prev, prev + 1, cl == cj, cl, cj));
        filled.add(cl, cj, 1);
    }

    FiberEstimate est;
    est.property = PropertyKind::mixing;
    est.n = a.size();
    est.target_digest = encode_mixing_matrix(mm);
    est.log_count = LogCount::from_ln(ln_total);
    est.path_length = path.ordered_edges.size();
    return est;
}

LogCount closed_form_mixing(const std::vector<std::int64_t>& class_sizes, const MixingMatrix& mm) {
    if (static_cast<int>(class_sizes.size()) != mm.categories())
        throw std::invalid_argument("closed_form_mixing: class count mismatch");
    LogCount total = LogCount::one();
    for (int k = 0; k < mm.categories(); ++k) {
        for (int l = k; l < mm.categories(); ++l) {
            const std::int64_t pairs =
                (k == l) ? class_sizes[static_cast<std::size_t>(k)] *
                               (class_sizes[static_cast<std::size_t>(k)] - 1) / 2
                         : class_sizes[static_cast<std::size_t>(k)] *
                               class_sizes[static_cast<std::size_t>(l)];
            total *= log_binomial(pairs, mm.at(k, l));
        }
    }
    return total;
}

namespace {

// Incremental state along a degree-mixing path: adjacency, degrees, degree
// distribution, and the mixing matrix of the current prefix. Adding the edge
// (l, j) relabels every edge incident to l or j into the rows for the new
// endpoint degrees.
class DegreeMixState {
public:
    explicit DegreeMixState(int n)
        : graph_(n), degree_(static_cast<std::size_t>(n), 0), dmm_(8) {
        dist_.counts.assign(static_cast<std::size_t>(n) + 2, 0);
        dist_.counts[0] = n;
    }

    const Graph& graph() const { return graph_; }
    const DegreeDistribution& dist() const { return dist_; }
    const DegreeMixingMatrix& dmm() const { return dmm_; }
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }

    std::int64_t row_stubs(int deg) const {
        return static_cast<std::int64_t>(deg) * dist_.at(deg);
    }

    detail::DegreeHistogram neighbor_histogram(int v) const {
        std::map<int, int> counts;
        for (int u : graph_.neighbors(v)) counts[degree(u)] += 1;
        return detail::DegreeHistogram(counts.begin(), counts.end());
    }

    void add_edge(int l, int j) {
        const int dl = degree(l);
        const int dj = degree(j);
        dmm_.ensure_degree_class(std::max(dl, dj) + 1);
        for (int u : graph_.neighbors(l)) {
            dmm_.add(dl, degree(u), -1);
            dmm_.add(dl + 1, degree(u), +1);
        }
        for (int u : graph_.neighbors(j)) {
            dmm_.add(dj, degree(u), -1);
            dmm_.add(dj + 1, degree(u), +1);
        }
        dmm_.add(dl + 1, dj + 1, +1);
        for (int v : {l, j}) {
            const int dv = degree(v);
            dist_.counts[static_cast<std::size_t>(dv)] -= 1;
            dist_.counts[static_cast<std::size_t>(dv) + 1] += 1;
            degree_[static_cast<std::size_t>(v)] = dv + 1;
        }
        graph_.add_edge(l, j);
    }

private:
    Graph graph_;
    std::vector<int> degree_;
    DegreeDistribution dist_;
    DegreeMixingMatrix dmm_;
};

}  // namespace

FiberEstimate count_degmix_fiber(const DegreeMixingMatrix& dmm, int n) {
    const EdgePath path = degree_mixing_path(dmm, n);

    DegreeMixState state(n);
    double ln_total = 0.0;
    std::size_t step = 0;
    for (const Edge& e : path.ordered_edges) {
        ++step;
        const int dl = state.degree(e.u);
        const int dj = state.degree(e.v);
        const double gamma1 = detail::class_pair_count(state.dist(), dl, dj);
        const double alpha2 = static_cast<double>(state.dmm().at(dl, dj));
        const double numerator = gamma1 - alpha2;
        if (numerator <= 0.0)
            throw EstimationError("degree-mixing ratio has nonpositive numerator", step);
        const auto log_beta0 = detail::log_beta_correction(
            dl, dj, state.dmm(), state.row_stubs(dl), state.row_stubs(dj),
            state.neighbor_histogram(e.u), state.neighbor_histogram(e.v), 0);
        if (!log_beta0)
            throw EstimationError("degree-mixing correction has an ill-formed binomial", step);

        state.add_edge(e.u, e.v);

        const int dl_cur = state.degree(e.u);
        const int dj_cur = state.degree(e.v);
        const std::int64_t entry = state.dmm().at(dl_cur, dj_cur);
        if (entry <= 0)
            throw EstimationError("degree-mixing ratio has zero denominator", step);
        const auto log_beta1 = detail::log_beta_correction(
            dl_cur, dj_cur, state.dmm(), state.row_stubs(dl_cur), state.row_stubs(dj_cur),
            state.neighbor_histogram(e.u), state.neighbor_histogram(e.v), 1);
        if (!log_beta1)
            throw EstimationError("degree-mixing correction has an ill-formed binomial", step);

        ln_total += std::log(numerator) + *log_beta0 -
                    std::log(static_cast<double>(entry)) - *log_beta1;
    }

    FiberEstimate est;
    est.property = PropertyKind::degree_mixing;
    est.n = n;
    est.target_digest = encode_degree_mixing_matrix(dmm);
    est.log_count = LogCount::from_ln(ln_total);
    est.path_length = path.ordered_edges.size();
    return est;
}

LogCount liebenau_regular_reference(int n, int d) {
    if (d < 1 || d > n - 1)
        throw std::invalid_argument("liebenau_regular_reference: requires 1 <= d <= n-1");
    if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw std::invalid_argument("liebenau_regular_reference: n*d must be even");
    const double lambda = static_cast<double>(d) / static_cast<double>(n - 1);
    double entropy = lambda * std::log(lambda);
    if (lambda < 1.0) entropy += (1.0 - lambda) * std::log1p(-lambda);
    const double pairs = 0.5 * static_cast<double>(n) * (n - 1);
    const double value = 0.5 * std::log(2.0) + 0.25 + pairs * entropy +
                         static_cast<double>(n) * log_binomial(n - 1, d).ln();
    return LogCount::from_ln(value);
}

DistinctDmmEstimate estimate_distinct_dmm(const DegreeDistribution& D, int sample_count,
                                          std::uint64_t rng_seed, NewmanMode mode) {
    if (sample_count < 1)
        throw std::invalid_argument("estimate_distinct_dmm: sample_count must be >= 1");
    const FiberEstimate dist_fiber = count_degdist_fiber(D, mode);

    // canonical sequence consistent with D: ascending degrees
    DegreeSequence d;
    for (std::size_t k = 0; k < D.counts.size(); ++k)
        for (std::int64_t c = 0; c < D.counts[k]; ++c) d.degrees.push_back(static_cast<int>(k));
    const int n = d.size();

    double ln_sum = 0.0;
    int succeeded = 0;
    int failed = 0;
    std::string last_error;
    for (int i = 0; i < sample_count; ++i) {
        RngStream rng = RngStream::substream(rng_seed, static_cast<std::uint64_t>(i));
        try {
            const Graph g = gen_config_uniform(d, rng);
            DegreeMixingMatrix dmm = degree_mixing_matrix(g);
            dmm.shrink_to_content();
            ln_sum += count_degmix_fiber(dmm, n).log_count.ln();
            ++succeeded;
        } catch (const std::runtime_error& err) {
            ++failed;
            last_error = err.what();
        }
    }
    if (succeeded == 0)
        throw EstimationError("all degree-mixing samples failed; last error: " + last_error);

    const double raw = dist_fiber.log_count.ln() - ln_sum / succeeded;
    DistinctDmmEstimate result;
    result.attempted = sample_count;
    result.failed = failed;
    result.floored = raw < 0.0;
    result.value = LogCount::from_ln(result.floored ? 0.0 : raw);
    return result;
}

}  // namespace fibercount
