#pragma once

#include "satedge/error.hpp"
#include "satedge/graph.hpp"

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace satedge {

/// Half-open vertex range [begin, end) occupied by one part of a blow-up.
struct PartRange {
    std::string name;
    int begin = 0;
    int end = 0;

    int size() const noexcept { return end - begin; }
    bool contains(int v) const noexcept { return v >= begin && v < end; }
    VertexSet as_set(std::size_t universe) const {
        VertexSet s(universe);
        s.insert_range(begin, end);
        return s;
    }
    friend bool operator==(const PartRange&, const PartRange&) = default;
};

/// A base graph and the size of the independent set replacing each base vertex.
struct BlowupSpec {
    Graph base;
    std::vector<std::size_t> sizes;
    std::vector<std::string> names;  // optional part labels, one per base vertex

    std::size_t vertex_count() const { return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}); }

    /// Sum over base edges ab of sizes[a] * sizes[b].
    std::size_t edge_count() const {
        std::size_t total = 0;
        for (auto [a, b] : base.edges()) total += sizes[static_cast<std::size_t>(a)] * sizes[static_cast<std::size_t>(b)];
        return total;
    }
};

struct Blowup {
    BlowupSpec spec;
    Graph graph;
    std::vector<PartRange> parts;  // parts[i] replaces base vertex i

    /// Index of the part holding v.
    std::size_t part_of(int v) const {
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i].contains(v)) return i;
        throw invalid_argument("vertex " + std::to_string(v) + " is not in any part");
    }
};

/// Parts are laid out contiguously in base-vertex order.
inline Blowup blow_up(BlowupSpec spec) {
    if (spec.sizes.size() != spec.base.order())
        throw invalid_argument("blow-up needs one size per base vertex");
    const std::size_t n = spec.vertex_count();
    std::vector<PartRange> parts;
    parts.reserve(spec.sizes.size());
    int next = 0;
    for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
        std::string name = i < spec.names.size() ? spec.names[i] : "P" + std::to_string(i);
        parts.push_back({std::move(name), next, next + static_cast<int>(spec.sizes[i])});
        next += static_cast<int>(spec.sizes[i]);
    }
    GraphBuilder b(n);
    std::vector<VertexSet> masks;
    masks.reserve(parts.size());
    for (const auto& part : parts) masks.push_back(part.as_set(n));
    for (auto [a, c] : spec.base.edges()) b.join(masks[static_cast<std::size_t>(a)], masks[static_cast<std::size_t>(c)]);
    Graph g = std::move(b).build();
    return Blowup{std::move(spec), std::move(g), std::move(parts)};
}

/// Complete (p-1)-partite K_{2,...,2} on {v_i, u_i} plus an apex v_0 joined to every v_i.
/// Labels: 0 = v_0, 1..p-1 = v_1..v_{p-1}, p..2p-2 = u_1..u_{p-1}.
inline Graph base_graph(int p) {
    if (p < 3) throw invalid_argument("base_graph needs p >= 3");
    const int k = p - 1;
    GraphBuilder b(static_cast<std::size_t>(2 * p - 1));
    auto v = [](int i) { return i; };
    auto u = [k](int i) { return k + i; };
    for (int i = 1; i <= k; ++i) {
        b.add_edge(0, v(i));
        for (int j = i + 1; j <= k; ++j) {
            b.add_edge(v(i), v(j));
            b.add_edge(v(i), u(j));
            b.add_edge(u(i), v(j));
            b.add_edge(u(i), u(j));
        }
    }
    return std::move(b).build();
}

inline std::vector<std::string> base_graph_names(int p) {
    std::vector<std::string> names{"V0"};
    for (int i = 1; i < p; ++i) names.push_back("V" + std::to_string(i));
    for (int i = 1; i < p; ++i) names.push_back("U" + std::to_string(i));
    return names;
}

}  // namespace satedge
