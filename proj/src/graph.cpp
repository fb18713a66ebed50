#include "fibercount/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace fibercount {

const char* property_kind_name(PropertyKind kind) {
    switch (kind) {
        case PropertyKind::edges: return "edges";
        case PropertyKind::degree_distribution: return "degdist";
        case PropertyKind::degree_sequence: return "degseq";
        case PropertyKind::mixing: return "mixing";
        case PropertyKind::degree_mixing: return "degmix";
    }
    return "unknown";
}

PropertyKind property_kind_from_name(const std::string& name) {
    if (name == "edges") return PropertyKind::edges;
    if (name == "degdist") return PropertyKind::degree_distribution;
    if (name == "degseq") return PropertyKind::degree_sequence;
    if (name == "mixing") return PropertyKind::mixing;
    if (name == "degmix") return PropertyKind::degree_mixing;
    throw std::invalid_argument("unknown property kind: " + name);
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
}

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    const auto& nb = adj_[static_cast<std::size_t>(i)];
    return std::binary_search(nb.begin(), nb.end(), j);
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("Graph: vertex out of range");
    if (i == j) throw std::invalid_argument("Graph: self-loops are not allowed");
    if (has_edge(i, j)) {
        std::ostringstream msg;
        msg << "Graph: duplicate edge (" << i << ", " << j << ")";
        throw std::invalid_argument(msg.str());
    }
    auto insert_sorted = [](std::vector<int>& nb, int v) {
        nb.insert(std::upper_bound(nb.begin(), nb.end(), v), v);
    };
    insert_sorted(adj_[static_cast<std::size_t>(i)], j);
    insert_sorted(adj_[static_cast<std::size_t>(j)], i);
    edges_.emplace_back(i, j);
}

int Graph::degree(int v) const {
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    return adj_[static_cast<std::size_t>(v)];
}

std::int64_t DegreeSequence::degree_sum() const {
    std::int64_t sum = 0;
    for (int d : degrees) sum += d;
    return sum;
}

void DegreeSequence::validate() const {
    const int n = size();
    for (int d : degrees) {
        if (d < 0 || d > n - 1)
            throw std::invalid_argument("DegreeSequence: degree out of [0, n-1]");
    }
    if (degree_sum() % 2 != 0)
        throw std::invalid_argument("DegreeSequence: degree sum must be even");
}

std::int64_t DegreeDistribution::vertex_count() const {
    std::int64_t sum = 0;
    for (std::int64_t c : counts) sum += c;
    return sum;
}

std::int64_t DegreeDistribution::stub_count() const {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < counts.size(); ++k)
        sum += static_cast<std::int64_t>(k) * counts[k];
    return sum;
}

int DegreeDistribution::max_degree() const {
    for (int k = static_cast<int>(counts.size()) - 1; k >= 0; --k)
        if (counts[static_cast<std::size_t>(k)] > 0) return k;
    return 0;
}

void DegreeDistribution::validate() const {
    for (std::int64_t c : counts) {
        if (c < 0) throw std::invalid_argument("DegreeDistribution: negative count");
    }
    const std::int64_t n = vertex_count();
    if (max_degree() > n - 1 && n > 0)
        throw std::invalid_argument("DegreeDistribution: degree exceeds n-1");
    if (stub_count() % 2 != 0)
        throw std::invalid_argument("DegreeDistribution: odd stub total");
}

std::vector<std::int64_t> CovariateAssignment::class_sizes() const {
    std::vector<std::int64_t> m(static_cast<std::size_t>(categories), 0);
    for (int label : labels) m[static_cast<std::size_t>(label)] += 1;
    return m;
}

void CovariateAssignment::validate() const {
    if (categories <= 0 && !labels.empty())
        throw std::invalid_argument("CovariateAssignment: no categories");
    for (int label : labels) {
        if (label < 0 || label >= categories)
            throw std::invalid_argument("CovariateAssignment: label out of range");
    }
}

std::size_t MixingMatrix::index(int k, int l) const {
    if (k < 0 || l < 0 || k >= q_ || l >= q_)
        throw std::invalid_argument("MixingMatrix: category out of range");
    return static_cast<std::size_t>(k) * q_ + l;
}

void MixingMatrix::set(int k, int l, std::int64_t value) {
    cells_[index(k, l)] = value;
    cells_[index(l, k)] = value;
}

void MixingMatrix::add(int k, int l, std::int64_t delta) {
    cells_[index(k, l)] += delta;
    if (k != l) cells_[index(l, k)] += delta;
}

std::int64_t MixingMatrix::total_edges() const {
    std::int64_t sum = 0;
    for (int k = 0; k < q_; ++k)
        for (int l = k; l < q_; ++l) sum += at(k, l);
    return sum;
}

bool MixingMatrix::feasible(const std::vector<std::int64_t>& class_sizes) const {
    if (static_cast<int>(class_sizes.size()) != q_) return false;
    for (int k = 0; k < q_; ++k) {
        for (int l = k; l < q_; ++l) {
            if (at(k, l) < 0) return false;
            const std::int64_t pairs = (k == l) ? class_sizes[static_cast<std::size_t>(k)] *
                                                      (class_sizes[static_cast<std::size_t>(k)] - 1) / 2
                                                : class_sizes[static_cast<std::size_t>(k)] *
                                                      class_sizes[static_cast<std::size_t>(l)];
            if (at(k, l) > pairs) return false;
        }
    }
    return true;
}

std::int64_t DegreeMixingMatrix::at(int k, int l) const {
    if (k < 0 || l < 0) throw std::invalid_argument("DegreeMixingMatrix: negative degree class");
    if (k >= size_ || l >= size_) return 0;
    return cells_[index(k, l)];
}

std::size_t DegreeMixingMatrix::index(int k, int l) const {
    return static_cast<std::size_t>(k) * size_ + l;
}

void DegreeMixingMatrix::set(int k, int l, std::int64_t value) {
    if (k < 0 || l < 0 || k >= size_ || l >= size_)
        throw std::invalid_argument("DegreeMixingMatrix: degree class out of range");
    cells_[index(k, l)] = value;
    cells_[index(l, k)] = value;
}

void DegreeMixingMatrix::add(int k, int l, std::int64_t delta) {
    if (k < 0 || l < 0 || k >= size_ || l >= size_)
        throw std::invalid_argument("DegreeMixingMatrix: degree class out of range");
    cells_[index(k, l)] += delta;
    if (k != l) cells_[index(l, k)] += delta;
}

std::int64_t DegreeMixingMatrix::total_edges() const {
    std::int64_t sum = 0;
    for (int k = 0; k < size_; ++k)
        for (int l = k; l < size_; ++l) sum += cells_[index(k, l)];
    return sum;
}

void DegreeMixingMatrix::ensure_degree_class(int k) {
    if (k < size_) return;
    DegreeMixingMatrix larger(std::max(k + 1, size_ * 2));
    for (int a = 0; a < size_; ++a)
        for (int b = a; b < size_; ++b) larger.set(a, b, cells_[index(a, b)]);
    *this = std::move(larger);
}

void DegreeMixingMatrix::shrink_to_content() {
    int needed = 0;
    for (int k = 0; k < size_; ++k)
        for (int l = 0; l < size_; ++l)
            if (cells_[index(k, l)] != 0) needed = std::max(needed, std::max(k, l) + 1);
    if (needed == size_) return;
    DegreeMixingMatrix smaller(needed);
    for (int k = 0; k < needed; ++k)
        for (int l = k; l < needed; ++l) smaller.set(k, l, cells_[index(k, l)]);
    *this = std::move(smaller);
}

std::vector<std::pair<std::pair<int, int>, std::int64_t>> DegreeMixingMatrix::trimmed_cells() const {
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> out;
    for (int k = 0; k < size_; ++k)
        for (int l = k; l < size_; ++l)
            if (cells_[index(k, l)] != 0) out.push_back({{k, l}, cells_[index(k, l)]});
    return out;
}

std::int64_t phi_edges(const Graph& g) {
    return g.edge_count();
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d;
    d.degrees.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        d.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    return d;
}

DegreeDistribution degree_distribution(const Graph& g) {
    return degree_distribution(degree_sequence(g));
}

DegreeDistribution degree_distribution(const DegreeSequence& d) {
    DegreeDistribution dist;
    const int n = d.size();
    dist.counts.assign(static_cast<std::size_t>(std::max(n, 1)), 0);
    for (int deg : d.degrees) {
        if (deg < 0 || deg >= std::max(n, 1))
            throw std::invalid_argument("degree_distribution: degree out of range");
        dist.counts[static_cast<std::size_t>(deg)] += 1;
    }
    return dist;
}

MixingMatrix mixing_matrix(const Graph& g, const CovariateAssignment& a) {
    if (a.size() != g.vertex_count())
        throw std::invalid_argument("mixing_matrix: assignment length differs from vertex count");
    a.validate();
    MixingMatrix mm(a.categories);
    for (const Edge& e : g.edges())
        mm.add(a.labels[static_cast<std::size_t>(e.u)], a.labels[static_cast<std::size_t>(e.v)], 1);
    return mm;
}

DegreeMixingMatrix degree_mixing_matrix(const Graph& g) {
    int max_deg = 0;
    for (int v = 0; v < g.vertex_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
    DegreeMixingMatrix dmm(max_deg + 1);
    for (const Edge& e : g.edges()) dmm.add(g.degree(e.u), g.degree(e.v), 1);
    return dmm;
}

int neighbor_degree_count(const Graph& g, int v, int z) {
    int count = 0;
    for (int u : g.neighbors(v))
        if (g.degree(u) == z) ++count;
    return count;
}

std::string encode_edge_count(std::int64_t x) {
    return std::to_string(x);
}

std::string encode_degree_sequence(const DegreeSequence& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.degrees.size(); ++i) {
        if (i > 0) out << ',';
        out << d.degrees[i];
    }
    return out.str();
}

std::string encode_degree_distribution(const DegreeDistribution& D) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < D.counts.size(); ++k) {
        if (D.counts[k] == 0) continue;
        if (!first) out << ';';
        out << k << ':' << D.counts[k];
        first = false;
    }
    return out.str();
}

namespace {

std::string encode_symmetric_cells(int size, const std::function<std::int64_t(int, int)>& at) {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < size; ++k) {
        for (int l = k; l < size; ++l) {
            if (at(k, l) == 0) continue;
            if (!first) out << ';';
            out << k << ',' << l << ':' << at(k, l);
            first = false;
        }
    }
    return out.str();
}

}  // namespace

std::string encode_mixing_matrix(const MixingMatrix& mm) {
    return encode_symmetric_cells(mm.categories(),
                                  [&](int k, int l) { return mm.at(k, l); });
}

std::string encode_degree_mixing_matrix(const DegreeMixingMatrix& dmm) {
    return encode_symmetric_cells(dmm.degree_classes(),
                                  [&](int k, int l) { return dmm.at(k, l); });
}

}  // namespace fibercount
