#include "fibercount/oracle.hpp"

#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fibercount/parallel.hpp"

namespace fibercount {

std::int64_t FiberTable::total() const {
    std::int64_t sum = 0;
    for (const auto& [key, count] : counts) sum += count;
    return sum;
}

std::string FiberTable::to_json() const {
    nlohmann::json record{
        {"property", property_kind_name(property)},
        {"n", n},
        {"fibers", nlohmann::json::object()},
        {"graphs", total()},
    };
    for (const auto& [key, count] : counts) record["fibers"][key] = count;
    return record.dump();
}

namespace {

// Per-mask tally machinery on packed edge slots. Slot t encodes the t-th
// pair (i, j), i < j, in lexicographic order; vertex degrees come from
// popcounts of per-vertex incidence masks.
struct SlotLayout {
    int n = 0;
    int slots = 0;
    std::array<std::uint32_t, 8> incident{};        // slot bits touching vertex v
    std::array<std::pair<int, int>, 32> endpoints;  // slot -> (i, j)

    explicit SlotLayout(int n_in) : n(n_in) {
        int t = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++t) {
                incident[static_cast<std::size_t>(i)] |= (1u << t);
                incident[static_cast<std::size_t>(j)] |= (1u << t);
                endpoints[static_cast<std::size_t>(t)] = {i, j};
            }
        }
        slots = t;
    }

    void degrees_of(std::uint32_t mask, std::array<int, 8>& deg) const {
        for (int v = 0; v < n; ++v)
            deg[static_cast<std::size_t>(v)] =
                std::popcount(mask & incident[static_cast<std::size_t>(v)]);
    }
};

std::string symmetric_tally_key(const std::array<std::array<int, 8>, 8>& cell, int size) {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < size; ++k) {
        for (int l = k; l < size; ++l) {
            if (cell[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] == 0) continue;
            if (!first) out << ';';
            out << k << ',' << l << ':' << cell[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
            first = false;
        }
    }
    return out.str();
}

}  // namespace

FiberTable enumerate_fibers(int n, PropertyKind phi, const CovariateAssignment* a) {
    if (n < 0 || n > kMaxOracleVertices)
        throw std::invalid_argument("enumerate_fibers: n must be between 0 and " +
                                    std::to_string(kMaxOracleVertices));
    if (phi == PropertyKind::mixing) {
        if (a == nullptr)
            throw std::invalid_argument("enumerate_fibers: mixing requires a covariate assignment");
        if (a->size() != n)
            throw std::invalid_argument("enumerate_fibers: assignment length differs from n");
        a->validate();
    }

    const SlotLayout layout(n);
    const std::int64_t mask_count = std::int64_t{1} << layout.slots;

    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t worker_slots = std::max<std::size_t>(1, hw == 0 ? 1 : hw);
    std::vector<std::map<std::string, std::int64_t>> partial(worker_slots);

    parallel_chunks(mask_count, [&](std::int64_t w, std::int64_t begin, std::int64_t end) {
        auto& tally = partial[static_cast<std::size_t>(w)];
        std::array<int, 8> deg{};
        std::array<std::array<int, 8>, 8> cell{};
        for (std::int64_t m = begin; m < end; ++m) {
            const auto mask = static_cast<std::uint32_t>(m);
            std::string key;
            switch (phi) {
                case PropertyKind::edges:
                    key = std::to_string(std::popcount(mask));
                    break;
                case PropertyKind::degree_sequence: {
                    layout.degrees_of(mask, deg);
                    std::ostringstream out;
                    for (int v = 0; v < n; ++v) {
                        if (v > 0) out << ',';
                        out << deg[static_cast<std::size_t>(v)];
                    }
                    key = out.str();
                    break;
                }
                case PropertyKind::degree_distribution: {
                    layout.degrees_of(mask, deg);
                    std::array<int, 8> hist{};
                    for (int v = 0; v < n; ++v) hist[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])] += 1;
                    std::ostringstream out;
                    bool first = true;
                    for (int k = 0; k < n; ++k) {
                        if (hist[static_cast<std::size_t>(k)] == 0) continue;
                        if (!first) out << ';';
                        out << k << ':' << hist[static_cast<std::size_t>(k)];
                        first = false;
                    }
                    key = out.str();
                    break;
                }
                case PropertyKind::mixing: {
                    for (auto& row : cell) row.fill(0);
                    for (int t = 0; t < layout.slots; ++t) {
                        if (!(mask & (1u << t))) continue;
                        const auto [i, j] = layout.endpoints[static_cast<std::size_t>(t)];
                        int ck = a->labels[static_cast<std::size_t>(i)];
                        int cl = a->labels[static_cast<std::size_t>(j)];
                        if (ck > cl) std::swap(ck, cl);
                        cell[static_cast<std::size_t>(ck)][static_cast<std::size_t>(cl)] += 1;
                    }
                    key = symmetric_tally_key(cell, a->categories);
                    break;
                }
                case PropertyKind::degree_mixing: {
                    layout.degrees_of(mask, deg);
                    for (auto& row : cell) row.fill(0);
                    for (int t = 0; t < layout.slots; ++t) {
                        if (!(mask & (1u << t))) continue;
                        const auto [i, j] = layout.endpoints[static_cast<std::size_t>(t)];
                        int dk = deg[static_cast<std::size_t>(i)];
                        int dl = deg[static_cast<std::size_t>(j)];
                        if (dk > dl) std::swap(dk, dl);
                        cell[static_cast<std::size_t>(dk)][static_cast<std::size_t>(dl)] += 1;
                    }
                    key = symmetric_tally_key(cell, n);
                    break;
                }
            }
            tally[key] += 1;
        }
    });

    FiberTable table;
    table.property = phi;
    table.n = n;
    for (const auto& part : partial)
        for (const auto& [key, count] : part) table.counts[key] += count;
    return table;
}

std::int64_t exact_count(const FiberTable& table, const std::string& encoded_value) {
    const auto it = table.counts.find(encoded_value);
    return it == table.counts.end() ? 0 : it->second;
}

}  // namespace fibercount
