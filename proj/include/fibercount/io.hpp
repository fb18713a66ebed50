// File formats:
//   Edge list:  first line "n <vertex-count>", then one edge per line as
//               "i j" with i < j, 0-indexed. Order is significant when the
//               file stores a construction path.
//   Covariates: one integer category label per line (1-based), length n.

#ifndef FIBERCOUNT_IO_HPP
#define FIBERCOUNT_IO_HPP

#include <iosfwd>
#include <string>

#include "fibercount/graph.hpp"

namespace fibercount {

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

CovariateAssignment read_covariates(std::istream& in);
CovariateAssignment read_covariates_file(const std::string& path);

}  // namespace fibercount

#endif  // FIBERCOUNT_IO_HPP
