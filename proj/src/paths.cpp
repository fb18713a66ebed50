#include "fibercount/paths.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fibercount/errors.hpp"

namespace fibercount {

Graph EdgePath::final_graph() const {
    Graph g(n);
    for (const Edge& e : ordered_edges) g.add_edge(e.u, e.v);
    return g;
}

EdgePath edge_count_path(int n, std::int64_t x) {
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (x < 0 || x > max_edges)
        throw std::invalid_argument("edge_count_path: x out of [0, C(n,2)]");
    EdgePath path;
    path.n = n;
    path.kind = PropertyKind::edges;
    path.ordered_edges.reserve(static_cast<std::size_t>(x));
    for (int i = 0; i < n && static_cast<std::int64_t>(path.ordered_edges.size()) < x; ++i)
        for (int j = i + 1; j < n && static_cast<std::int64_t>(path.ordered_edges.size()) < x; ++j)
            path.ordered_edges.emplace_back(i, j);
    return path;
}

namespace {

// Algorithm core shared by the degree-distribution path and the within-class
// step of the degree-mixing path: repeatedly zero the max-residual vertex and
// connect it to the next-largest residuals. vertex_ids maps local slots to
// graph vertices. Residuals are consumed. Appends edges in construction order.
void havel_hakimi_edges(std::vector<int>& residual, const std::vector<int>& vertex_ids,
                        std::vector<Edge>& out) {
    const int m = static_cast<int>(residual.size());
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int round = 0; round < m; ++round) {
        int v = 0;
        for (int i = 1; i < m; ++i)
            if (residual[static_cast<std::size_t>(i)] > residual[static_cast<std::size_t>(v)]) v = i;
        const int l = residual[static_cast<std::size_t>(v)];
        if (l == 0) break;
        residual[static_cast<std::size_t>(v)] = 0;

        order.resize(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        order.erase(order.begin() + v);
        if (l > static_cast<int>(order.size()))
            throw NotGraphicalError("degree list not realizable: vertex needs more partners than exist");
        // largest residual first, ties to the lowest index
        std::partial_sort(order.begin(), order.begin() + l, order.end(), [&](int a, int b) {
            const int ra = residual[static_cast<std::size_t>(a)];
            const int rb = residual[static_cast<std::size_t>(b)];
            return ra != rb ? ra > rb : a < b;
        });
        for (int t = 0; t < l; ++t) {
            const int u = order[static_cast<std::size_t>(t)];
            if (residual[static_cast<std::size_t>(u)] == 0)
                throw NotGraphicalError("degree list not realizable: residual would go negative");
            residual[static_cast<std::size_t>(u)] -= 1;
            out.emplace_back(vertex_ids[static_cast<std::size_t>(v)],
                             vertex_ids[static_cast<std::size_t>(u)]);
        }
    }
}

}  // namespace

EdgePath havel_hakimi_path(const DegreeDistribution& D) {
    D.validate();
    const std::int64_t n64 = D.vertex_count();
    const int n = static_cast<int>(n64);

    // residual list: degree j repeated D_j times, ascending
    std::vector<int> residual;
    residual.reserve(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < D.counts.size(); ++j)
        for (std::int64_t c = 0; c < D.counts[j]; ++c) residual.push_back(static_cast<int>(j));

    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);

    EdgePath path;
    path.n = n;
    path.kind = PropertyKind::degree_distribution;
    havel_hakimi_edges(residual, ids, path.ordered_edges);
    if (std::any_of(residual.begin(), residual.end(), [](int r) { return r != 0; }))
        throw NotGraphicalError("degree distribution not realizable: residuals remain");
    return path;
}

EdgePath mixing_path(const CovariateAssignment& a, const MixingMatrix& mm) {
    a.validate();
    if (mm.categories() != a.categories)
        throw std::invalid_argument("mixing_path: matrix size differs from category count");
    const auto M = a.class_sizes();
    const int q = a.categories;
    const int n = a.size();

    std::vector<std::vector<int>> members(static_cast<std::size_t>(q));
    for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(a.labels[static_cast<std::size_t>(v)])].push_back(v);

    EdgePath path;
    path.n = n;
    path.kind = PropertyKind::mixing;
    for (int k = 0; k < q; ++k) {
        for (int l = k; l < q; ++l) {
            const std::int64_t demand = mm.at(k, l);
            if (demand < 0) throw std::invalid_argument("mixing_path: negative matrix entry");
            if (demand == 0) continue;
            std::vector<Edge> block_pairs;
            if (k == l) {
                const auto& cls = members[static_cast<std::size_t>(k)];
                for (std::size_t i = 0; i < cls.size(); ++i)
                    for (std::size_t j = i + 1; j < cls.size(); ++j)
                        block_pairs.emplace_back(cls[i], cls[j]);
            } else {
                for (int u : members[static_cast<std::size_t>(k)])
                    for (int w : members[static_cast<std::size_t>(l)]) block_pairs.emplace_back(u, w);
            }
            std::sort(block_pairs.begin(), block_pairs.end());
            if (demand > static_cast<std::int64_t>(block_pairs.size())) {
                std::ostringstream msg;
                msg << "mixing matrix infeasible: block (" << k + 1 << "," << l + 1 << ") demands "
                    << demand << " edges but only " << block_pairs.size() << " pairs exist";
                throw NotGraphicalError(msg.str());
            }
            path.ordered_edges.insert(path.ordered_edges.end(), block_pairs.begin(),
                                      block_pairs.begin() + static_cast<std::ptrdiff_t>(demand));
        }
    }
    return path;
}

std::vector<std::int64_t> dmm_degree_counts(const DegreeMixingMatrix& dmm, int n) {
    const int classes = dmm.degree_classes();
    for (int l = 0; l < classes; ++l) {
        if (dmm.at(0, l) != 0)
            throw NotGraphicalError("degree mixing matrix references degree-0 vertices");
    }
    std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max(classes, 1)), 0);
    std::int64_t assigned = 0;
    for (int j = 1; j < classes; ++j) {
        std::int64_t stubs = dmm.at(j, j);
        for (int i = 0; i < classes; ++i) stubs += dmm.at(i, j);
        if (stubs % j != 0) {
            std::ostringstream msg;
            msg << "degree mixing matrix not graphical: stub total " << stubs
                << " for degree class " << j << " is not divisible by " << j;
            throw NotGraphicalError(msg.str());
        }
        counts[static_cast<std::size_t>(j)] = stubs / j;
        assigned += stubs / j;
    }
    if (assigned > n) {
        std::ostringstream msg;
        msg << "degree mixing matrix not graphical: needs " << assigned << " vertices but n is " << n;
        throw NotGraphicalError(msg.str());
    }
    counts[0] = n - assigned;
    return counts;
}

EdgePath degree_mixing_path(const DegreeMixingMatrix& dmm, int n) {
    const auto class_counts = dmm_degree_counts(dmm, n);
    const int classes = static_cast<int>(class_counts.size());

    // vertex blocks in ascending degree-class order
    std::vector<int> class_offset(static_cast<std::size_t>(classes) + 1, 0);
    class_offset[0] = static_cast<int>(class_counts[0]);
    for (int j = 1; j < classes; ++j)
        class_offset[static_cast<std::size_t>(j) + 1] = 0;  // filled below
    {
        int off = static_cast<int>(class_counts[0]);
        for (int j = 1; j < classes; ++j) {
            class_offset[static_cast<std::size_t>(j)] = off;
            off += static_cast<int>(class_counts[static_cast<std::size_t>(j)]);
        }
        class_offset[static_cast<std::size_t>(classes)] = off;
    }

    EdgePath path;
    path.n = n;
    path.kind = PropertyKind::degree_mixing;

    Graph g(n);
    std::vector<int> current(static_cast<std::size_t>(n), 0);
    auto add_edge = [&](int u, int v) {
        g.add_edge(u, v);
        current[static_cast<std::size_t>(u)] += 1;
        current[static_cast<std::size_t>(v)] += 1;
        path.ordered_edges.emplace_back(u, v);
    };

    // within-class edges: spread 2*DMM_{j,j} stubs as evenly as possible over
    // the class, then realize the stub counts with Havel-Hakimi
    for (int j = 1; j < classes; ++j) {
        const std::int64_t within = dmm.at(j, j);
        if (within == 0) continue;
        const std::int64_t class_size = class_counts[static_cast<std::size_t>(j)];
        if (class_size == 0)
            throw NotGraphicalError("degree mixing matrix not graphical: within-class edges in an empty class");
        std::vector<int> stub_counts(static_cast<std::size_t>(class_size), 0);
        for (std::int64_t p = 0; p < 2 * within; ++p)
            stub_counts[static_cast<std::size_t>(p % class_size)] += 1;

        std::vector<int> ids(static_cast<std::size_t>(class_size));
        std::iota(ids.begin(), ids.end(), class_offset[static_cast<std::size_t>(j)]);
        std::vector<Edge> class_edges;
        havel_hakimi_edges(stub_counts, ids, class_edges);
        for (const Edge& e : class_edges) add_edge(e.u, e.v);
    }

    // cross-class edges: schedule per lower class, connect minimum-current-
    // degree vertices; when the scheduled vertex has no unused partner left,
    // fall back to the next-smallest eligible vertex
    for (int j = 1; j < classes; ++j) {
        for (int i = j + 1; i < classes; ++i) {
            const std::int64_t between = dmm.at(j, i);
            if (between == 0) continue;
            const std::int64_t dj = class_counts[static_cast<std::size_t>(j)];
            const std::int64_t di = class_counts[static_cast<std::size_t>(i)];
            if (dj == 0 || di == 0)
                throw NotGraphicalError("degree mixing matrix not graphical: cross-class edges touch an empty class");
            std::vector<std::int64_t> batch(static_cast<std::size_t>(dj), 0);
            for (std::int64_t p = 0; p < between; ++p) batch[static_cast<std::size_t>(p % dj)] += 1;

            auto class_vertices = [&](int cls) {
                std::pair<int, int> range{class_offset[static_cast<std::size_t>(cls)],
                                          class_offset[static_cast<std::size_t>(cls) + 1]};
                return range;
            };
            const auto [j_begin, j_end] = class_vertices(j);
            const auto [i_begin, i_end] = class_vertices(i);

            auto min_current = [&](int begin, int end, auto&& eligible) {
                int best = -1;
                for (int v = begin; v < end; ++v) {
                    if (!eligible(v)) continue;
                    if (best < 0 || current[static_cast<std::size_t>(v)] <
                                        current[static_cast<std::size_t>(best)])
                        best = v;
                }
                return best;
            };

            for (std::size_t k = 0; k < batch.size(); ++k) {
                std::int64_t remaining = batch[k];
                if (remaining == 0) continue;
                int v = min_current(j_begin, j_end, [](int) { return true; });
                while (remaining > 0) {
                    int w = min_current(i_begin, i_end,
                                        [&](int u) { return !g.has_edge(v, u); });
                    if (w < 0) {
                        // scheduled vertex exhausted its partners; retry with
                        // the next-smallest eligible vertex of the class
                        v = min_current(j_begin, j_end, [&](int u) {
                            if (u == v) return false;
                            for (int cand = i_begin; cand < i_end; ++cand)
                                if (!g.has_edge(u, cand)) return true;
                            return false;
                        });
                        if (v < 0)
                            throw NotGraphicalError(
                                "degree mixing matrix not realizable: cross-class block cannot "
                                "be placed without duplicate edges");
                        continue;
                    }
                    add_edge(v, w);
                    remaining -= 1;
                }
            }
        }
    }
    return path;
}

namespace {

struct TargetChecker {
    const Graph& g;

    std::string operator()(const EdgeCountTarget& t) const {
        if (phi_edges(g) != t.edges)
            return "final edge count " + std::to_string(phi_edges(g)) + " differs from target " +
                   std::to_string(t.edges);
        return {};
    }
    std::string operator()(const DegreeDistributionTarget& t) const {
        DegreeDistribution got = degree_distribution(g);
        DegreeDistribution want = t.distribution;
        if (encode_degree_distribution(got) != encode_degree_distribution(want))
            return "final degree distribution differs from target";
        return {};
    }
    std::string operator()(const MixingTarget& t) const {
        if (!(mixing_matrix(g, t.assignment) == t.matrix))
            return "final mixing matrix differs from target";
        return {};
    }
    std::string operator()(const DegreeMixingTarget& t) const {
        if (!(degree_mixing_matrix(g) == t.matrix))
            return "final degree mixing matrix differs from target";
        return {};
    }
};

}  // namespace

PathCheck verify_path(const EdgePath& path, const PathTarget& target) {
    Graph g(path.n);
    std::size_t step = 0;
    for (const Edge& e : path.ordered_edges) {
        ++step;
        try {
            g.add_edge(e.u, e.v);
        } catch (const std::invalid_argument& err) {
            return {false, "prefix " + std::to_string(step) + " is not a simple graph: " + err.what()};
        }
    }
    std::string mismatch = std::visit(TargetChecker{g}, target);
    if (!mismatch.empty()) return {false, mismatch};
    return {};
}

}  // namespace fibercount
