// Fiber-size estimates: the number of labeled graphs sharing a property
// value, assembled as a product of per-step ratios along a construction
// path, plus closed-form and asymptotic reference values.

#ifndef FIBERCOUNT_FIBERS_HPP
#define FIBERCOUNT_FIBERS_HPP

#include <cstdint>
#include <string>

#include "fibercount/graph.hpp"
#include "fibercount/logspace.hpp"
#include "fibercount/paths.hpp"
#include "fibercount/ratios.hpp"

namespace fibercount {

const char* newman_mode_name(NewmanMode mode);
NewmanMode newman_mode_from_name(const std::string& name);

struct FiberEstimate {
    PropertyKind property = PropertyKind::edges;
    int n = 0;
    std::string target_digest;
    LogCount log_count = LogCount::one();
    std::size_t path_length = 0;
    NewmanMode mode = NewmanMode::standard;
    int failures = 0;  // skipped samples, for sampling-based estimates

    // JSON record: {property, n, target, ln_count, log10_count, path_length,
    // mode, failures}
    std::string to_json() const;
};

// Number of graphs on n vertices with exactly x edges, via the recursion.
FiberEstimate count_edges_fiber(int n, std::int64_t x);

// The same count in closed form: C(C(n,2), x).
LogCount closed_form_edges(int n, std::int64_t x);

// Number of graphs with degree distribution D.
FiberEstimate count_degdist_fiber(const DegreeDistribution& D,
                                  NewmanMode mode = NewmanMode::standard);

// Number of graphs with the exact labeled degree sequence d: the
// distribution count divided by the vertex-to-degree assignment
// permutations.
FiberEstimate count_degseq_fiber(const DegreeSequence& d, NewmanMode mode = NewmanMode::standard);

// Number of graphs with mixing matrix mm under the given assignment.
FiberEstimate count_mixing_fiber(const CovariateAssignment& a, const MixingMatrix& mm);

// Exact closed form for the mixing fiber: blocks draw from disjoint pair
// populations, so per-block binomials multiply.
LogCount closed_form_mixing(const std::vector<std::int64_t>& class_sizes, const MixingMatrix& mm);

// Number of graphs with degree mixing matrix dmm on n vertices.
FiberEstimate count_degmix_fiber(const DegreeMixingMatrix& dmm, int n);

// Asymptotic count of d-regular graphs on n vertices, transcribed from the
// proof of the 1990 enumeration conjecture:
//   sqrt(2) * e^{1/4} * (lambda^lambda (1-lambda)^(1-lambda))^C(n,2)
//     * C(n-1, d)^n,  lambda = d/(n-1).
// Requires n*d even and 1 <= d <= n-1.
LogCount liebenau_regular_reference(int n, int d);

struct DistinctDmmEstimate {
    LogCount value = LogCount::one();
    int attempted = 0;
    int failed = 0;     // samples skipped after estimation failures
    bool floored = false;  // raw estimate fell below ln 1 and was clamped
};

// Number of distinct degree mixing matrices across graphs with degree
// distribution D: ln|c_degdist(D)| minus the mean ln|c_degmix(DMM(g))| over
// configuration-model samples g. Deterministic under a fixed seed.
DistinctDmmEstimate estimate_distinct_dmm(const DegreeDistribution& D, int sample_count,
                                          std::uint64_t rng_seed,
                                          NewmanMode mode = NewmanMode::standard);

}  // namespace fibercount

#endif  // FIBERCOUNT_FIBERS_HPP
