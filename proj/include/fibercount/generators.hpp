// Random graph models: Barabasi-Albert preferential attachment, uniform
// G(n,m), and configuration-model sampling with a fixed degree sequence.
//
// All randomness flows through RngStream (mt19937_64 plus rejection-based
// bounded draws), so identical seeds produce bit-identical graphs on every
// platform.

#ifndef FIBERCOUNT_GENERATORS_HPP
#define FIBERCOUNT_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "fibercount/graph.hpp"

namespace fibercount {

// Stable derivation of per-task seeds from a master seed, so that samples
// of an experiment can run in any order (or in parallel) without changing
// their streams.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for (seed, index); used to give each sample of an
    // experiment its own stream so that parallel order cannot matter.
    static RngStream substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [0, 1), 53-bit resolution.
    double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

// Preferential attachment: complete seed graph on m+1 vertices, then each
// new vertex attaches m edges to distinct existing vertices with probability
// proportional to current degree. Requires n > m >= 1.
Graph gen_ba(int n, int m, RngStream& rng);

// Uniform over all graphs with exactly m_edges edges.
Graph gen_er_gnm(int n, std::int64_t m_edges, RngStream& rng);

// Approximately uniform over simple graphs with degree sequence d: repeated
// stub matching with rejection of self-loops and multi-edges; after
// max_retries failed matchings, falls back to a Havel-Hakimi graph
// randomized by 10*|E| accepted degree-preserving double-edge swaps.
// Throws NotGraphicalError when d is not graphical.
Graph gen_config_uniform(const DegreeSequence& d, RngStream& rng, int max_retries = 100);

}  // namespace fibercount

#endif  // FIBERCOUNT_GENERATORS_HPP
