// Labeled simple undirected graphs and the property maps defined on them:
// edge count, degree sequence, degree distribution, covariate mixing matrix,
// degree mixing matrix.

#ifndef FIBERCOUNT_GRAPH_HPP
#define FIBERCOUNT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fibercount {

// The network properties this library counts graphs by.
enum class PropertyKind { edges, degree_distribution, degree_sequence, mixing, degree_mixing };

const char* property_kind_name(PropertyKind kind);
PropertyKind property_kind_from_name(const std::string& name);

struct Edge {
    int u = 0;  // always u < v
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. No self-loops, no duplicate
// edges. Mutation is limited to add_edge so that path builders can grow a
// graph one edge at a time; everything else treats graphs as values.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    bool has_edge(int i, int j) const;

    // Throws std::invalid_argument on self-loops, out-of-range vertices, or
    // duplicate edges.
    void add_edge(int i, int j);

    int degree(int v) const;

    // Neighbors of v in ascending order.
    const std::vector<int>& neighbors(int v) const;

    // Edges in insertion order (u < v within each edge).
    const std::vector<Edge>& edges() const { return edges_; }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

// Per-vertex degrees d_0..d_{n-1}.
struct DegreeSequence {
    std::vector<int> degrees;

    int size() const { return static_cast<int>(degrees.size()); }
    std::int64_t degree_sum() const;

    // Checks each degree is in [0, n-1] and the sum is even; throws
    // std::invalid_argument otherwise. Graphicality is a separate question.
    void validate() const;
};

// Vertex counts per degree class: counts[k] = number of vertices of degree k.
struct DegreeDistribution {
    std::vector<std::int64_t> counts;

    std::int64_t vertex_count() const;
    std::int64_t stub_count() const;  // sum_k k * counts[k]
    int max_degree() const;           // highest k with counts[k] > 0, or 0

    std::int64_t at(int k) const {
        return (k >= 0 && k < static_cast<int>(counts.size())) ? counts[k] : 0;
    }

    // Nonnegative counts, degrees below n, even stub total.
    void validate() const;

    friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;
};

// Vertex category labels. Stored 0-based (0..categories-1); text files carry
// 1-based labels and are translated on read.
struct CovariateAssignment {
    std::vector<int> labels;
    int categories = 0;

    int size() const { return static_cast<int>(labels.size()); }
    std::vector<std::int64_t> class_sizes() const;  // M_k for k = 0..q-1
    void validate() const;
};

// Symmetric q x q matrix of edge counts between covariate categories.
class MixingMatrix {
public:
    MixingMatrix() = default;
    explicit MixingMatrix(int q) : q_(q), cells_(static_cast<std::size_t>(q) * q, 0) {}

    int categories() const { return q_; }
    std::int64_t at(int k, int l) const { return cells_[index(k, l)]; }
    void set(int k, int l, std::int64_t value);
    void add(int k, int l, std::int64_t delta);

    std::int64_t total_edges() const;  // sum over k <= l

    // Feasibility against class sizes M: off-diagonal <= M_k*M_l,
    // diagonal <= C(M_k, 2).
    bool feasible(const std::vector<std::int64_t>& class_sizes) const;

    friend bool operator==(const MixingMatrix&, const MixingMatrix&) = default;

private:
    std::size_t index(int k, int l) const;

    int q_ = 0;
    std::vector<std::int64_t> cells_;
};

// Symmetric matrix of edge counts between degree classes. Sized up to the
// maximum realized degree; entries outside the stored range read as 0.
class DegreeMixingMatrix {
public:
    DegreeMixingMatrix() = default;
    explicit DegreeMixingMatrix(int degree_classes)
        : size_(degree_classes),
          cells_(static_cast<std::size_t>(degree_classes) * degree_classes, 0) {}

    int degree_classes() const { return size_; }
    std::int64_t at(int k, int l) const;
    void set(int k, int l, std::int64_t value);
    void add(int k, int l, std::int64_t delta);

    std::int64_t total_edges() const;  // sum over k <= l

    // Grows storage so that degree class k is addressable.
    void ensure_degree_class(int k);

    // Drops trailing all-zero degree classes (canonical storage size).
    void shrink_to_content();

    friend bool operator==(const DegreeMixingMatrix& a, const DegreeMixingMatrix& b) {
        return a.trimmed_cells() == b.trimmed_cells();
    }

private:
    std::size_t index(int k, int l) const;
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> trimmed_cells() const;

    int size_ = 0;
    std::vector<std::int64_t> cells_;
};

// phi_1: number of edges.
std::int64_t phi_edges(const Graph& g);

// phi_2a: degree of every labeled vertex.
DegreeSequence degree_sequence(const Graph& g);

// phi_2: vertex counts per degree.
DegreeDistribution degree_distribution(const Graph& g);
DegreeDistribution degree_distribution(const DegreeSequence& d);

// phi_3: edge counts between covariate categories. Each edge counted once.
MixingMatrix mixing_matrix(const Graph& g, const CovariateAssignment& a);

// phi_4: edge counts between degree classes, degrees taken in g itself.
DegreeMixingMatrix degree_mixing_matrix(const Graph& g);

// Number of neighbors of v whose degree (in g) equals z.
int neighbor_degree_count(const Graph& g, int v, int z);

// Canonical text encodings of property values, shared by the exhaustive
// oracle's table keys and by estimate reports. Equal values always encode
// to equal strings.
std::string encode_edge_count(std::int64_t x);
std::string encode_degree_sequence(const DegreeSequence& d);
std::string encode_degree_distribution(const DegreeDistribution& D);
std::string encode_mixing_matrix(const MixingMatrix& mm);
std::string encode_degree_mixing_matrix(const DegreeMixingMatrix& dmm);

}  // namespace fibercount

#endif  // FIBERCOUNT_GRAPH_HPP
