#include "fibercount/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fibercount {

namespace {

std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // allow comments and blank lines
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (n < 0) {
            if (first != "n")
                throw std::invalid_argument("edge list: expected header 'n <count>' on line " +
                                            std::to_string(line_no));
            if (!(fields >> n) || n < 0)
                throw std::invalid_argument("edge list: bad vertex count");
            continue;
        }
        int i = 0, j = 0;
        try {
            i = std::stoi(first);
        } catch (const std::exception&) {
            throw std::invalid_argument("edge list: bad vertex id on line " + std::to_string(line_no));
        }
        if (!(fields >> j))
            throw std::invalid_argument("edge list: missing second endpoint on line " +
                                        std::to_string(line_no));
        edges.emplace_back(i, j);
    }
    if (n < 0) throw std::invalid_argument("edge list: missing 'n <count>' header");
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open_for_read(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    write_edge_list(out, g);
}

CovariateAssignment read_covariates(std::istream& in) {
    CovariateAssignment a;
    std::string line;
    std::size_t line_no = 0;
    int max_label = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        int label = 0;
        if (!(fields >> label)) continue;
        if (label < 1)
            throw std::invalid_argument("covariates: labels are 1-based, got " +
                                        std::to_string(label) + " on line " + std::to_string(line_no));
        a.labels.push_back(label - 1);
        max_label = std::max(max_label, label);
    }
    a.categories = max_label;
    a.validate();
    return a;
}

CovariateAssignment read_covariates_file(const std::string& path) {
    auto in = open_for_read(path);
    return read_covariates(in);
}

}  // namespace fibercount
