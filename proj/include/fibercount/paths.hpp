// Construction paths: ordered edge lists whose prefix graphs sweep a
// property from its empty-graph value to a target value, one edge at a time.
// Every builder is deterministic; ties break toward the lowest vertex index.

#ifndef FIBERCOUNT_PATHS_HPP
#define FIBERCOUNT_PATHS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fibercount/graph.hpp"

namespace fibercount {

struct EdgePath {
    int n = 0;
    std::vector<Edge> ordered_edges;
    PropertyKind kind = PropertyKind::edges;

    // Graph formed by the full edge set.
    Graph final_graph() const;
};

// The first x pairs in lexicographic order; prefix i has exactly i edges.
EdgePath edge_count_path(int n, std::int64_t x);

// Havel-Hakimi construction. The residual list assigns degree j to D_j
// consecutive vertices in ascending degree order; each round zeroes the
// highest-residual vertex and connects it to the next-largest residuals.
// Throws NotGraphicalError when the distribution is not realizable.
EdgePath havel_hakimi_path(const DegreeDistribution& D);

// Edges block by block in the order (0,0),(0,1),...,(0,q-1),(1,1),...,
// (q-1,q-1); within a block, lexicographic pairs with the demanded endpoint
// categories. Throws NotGraphicalError when a block demands more pairs than
// exist.
EdgePath mixing_path(const CovariateAssignment& a, const MixingMatrix& mm);

// Degree-mixing construction. Derives per-class vertex counts from the
// matrix, places within-class edges via an evenly-spread stub schedule plus
// Havel-Hakimi, then cross-class edges onto minimum-current-degree vertices.
// n fixes the number of isolated vertices (the matrix cannot carry it).
// Throws NotGraphicalError when the matrix is not realizable.
EdgePath degree_mixing_path(const DegreeMixingMatrix& dmm, int n);

// Per-class vertex counts implied by a degree mixing matrix, indexed by
// degree; entry 0 holds the isolated-vertex count n - sum. Throws
// NotGraphicalError on stub totals not divisible by the degree or counts
// exceeding n.
std::vector<std::int64_t> dmm_degree_counts(const DegreeMixingMatrix& dmm, int n);

struct EdgeCountTarget {
    std::int64_t edges = 0;
};
struct DegreeDistributionTarget {
    DegreeDistribution distribution;
};
struct MixingTarget {
    CovariateAssignment assignment;
    MixingMatrix matrix;
};
struct DegreeMixingTarget {
    DegreeMixingMatrix matrix;
};

using PathTarget =
    std::variant<EdgeCountTarget, DegreeDistributionTarget, MixingTarget, DegreeMixingTarget>;

struct PathCheck {
    bool ok = true;
    std::string diagnostic;  // first violated condition, empty when ok
};

// Checks that every prefix is a simple graph, consecutive prefixes differ by
// exactly one edge, and the full graph realizes the declared target.
PathCheck verify_path(const EdgePath& path, const PathTarget& target);

}  // namespace fibercount

#endif  // FIBERCOUNT_PATHS_HPP
