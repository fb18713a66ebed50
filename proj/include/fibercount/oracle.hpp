// Exact fiber sizes for small n by exhausting all 2^C(n,2) labeled graphs.
// Ground truth for tests; n is capped at 7 (2,097,152 graphs).

#ifndef FIBERCOUNT_ORACLE_HPP
#define FIBERCOUNT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>

#include "fibercount/graph.hpp"

namespace fibercount {

inline constexpr int kMaxOracleVertices = 7;

struct FiberTable {
    PropertyKind property = PropertyKind::edges;
    int n = 0;
    // canonical property encoding (see encode_* in graph.hpp) -> exact count
    std::map<std::string, std::int64_t> counts;

    std::int64_t total() const;  // sums to 2^C(n,2)
    std::string to_json() const;
};

// Tallies every labeled graph on n vertices by the given property. The
// covariate assignment is required for (and only for) mixing. Throws
// std::invalid_argument when n exceeds kMaxOracleVertices.
FiberTable enumerate_fibers(int n, PropertyKind phi, const CovariateAssignment* a = nullptr);

// Count for an encoded property value; 0 when the value never occurs.
std::int64_t exact_count(const FiberTable& table, const std::string& encoded_value);

}  // namespace fibercount

#endif  // FIBERCOUNT_ORACLE_HPP
