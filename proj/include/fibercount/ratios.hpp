// Per-step fiber-size ratios: given consecutive prefix graphs that differ by
// one edge, each kernel returns the multiplicative factor by which the fiber
// grows for the property in question.

#ifndef FIBERCOUNT_RATIOS_HPP
#define FIBERCOUNT_RATIOS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fibercount/graph.hpp"

namespace fibercount {

// Normalization of the expected degree-mixing entry. "standard" divides the
// stub product by the total stub count (exact for a single edge and the
// default everywhere); "as_printed" divides by half the stub count instead,
// kept selectable for fidelity experiments.
enum class NewmanMode { standard, as_printed };

// One path step: g_cur equals g_prev plus exactly the edge (l, j).
struct StepContext {
    const Graph& g_prev;
    const Graph& g_cur;
    int l = 0;
    int j = 0;
};

// Edge-count ratio (C(n,2) - x_prev) / x_cur. Requires x_cur = x_prev + 1
// and x_cur <= C(n,2).
double ratio_edges(int n, std::int64_t x_prev, std::int64_t x_cur);

// Expected degree-mixing entry between degree classes x and y given a
// degree distribution: stub products halved on the diagonal. Returns 0 when
// the distribution has no stubs.
double expected_dmm_entry(const DegreeDistribution& D, int x, int y,
                          NewmanMode mode = NewmanMode::standard);

// Degree-distribution ratio (beta1(g_prev) - alpha1(g_prev)) / alpha1(g_cur).
// Throws EstimationError when the numerator is nonpositive or the
// denominator vanishes.
double ratio_degdist(const StepContext& ctx, NewmanMode mode = NewmanMode::standard);

// Covariate-mixing ratio for one block step: (pairs - prev_entry)/cur_entry
// with pairs = M_l*M_j across categories or C(M_l,2) within. Categories are
// 0-based indices into class_sizes.
double ratio_mixing(const std::vector<std::int64_t>& class_sizes, std::int64_t prev_entry,
                    std::int64_t cur_entry, bool same_category, int cat_l, int cat_j);

// Product-of-binomials correction to the naive degree-mixing count, for the
// path edge (l, j). s = 0 evaluates on g_prev, s = 1 on g_cur. Throws
// EstimationError when a binomial argument is negative or inverted.
double beta_factor(const StepContext& ctx, int s);

// Degree-mixing ratio
//   [(gamma1(g_prev) - alpha2(g_prev)) * beta0(g_prev)]
//     / [DMM_{d_l,d_j}(g_cur) * beta1(g_cur)].
double ratio_degmix(const StepContext& ctx);

namespace detail {

// beta1 / gamma1: number of vertex pairs with the given degree classes,
// D_dl * D_dj off the diagonal and C(D_dl, 2) on it.
double class_pair_count(const DegreeDistribution& D, int dl, int dj);

// expected_dmm_entry with the stub total precomputed by the caller.
double expected_dmm_entry_with_stubs(const DegreeDistribution& D, int x, int y,
                                     std::int64_t stubs, NewmanMode mode);

// Sparse neighbor-degree histogram: ascending (degree, count), counts > 0.
using DegreeHistogram = std::vector<std::pair<int, int>>;

DegreeHistogram neighbor_degree_histogram(const Graph& g, int v);

// ln of the beta correction. row_stubs_* is deg * D_deg for the endpoint's
// degree class (the degree-mixing row total with a doubled diagonal).
// nullopt signals an ill-formed binomial.
std::optional<double> log_beta_correction(int deg_l, int deg_j, const DegreeMixingMatrix& dmm,
                                          std::int64_t row_stubs_l, std::int64_t row_stubs_j,
                                          const DegreeHistogram& neigh_l,
                                          const DegreeHistogram& neigh_j, int s);

}  // namespace detail

}  // namespace fibercount

#endif  // FIBERCOUNT_RATIOS_HPP
