#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "lsg/graph.hpp"

namespace lsg::detail {

struct CutScanResult {
    std::int64_t boundary = 0;
    int size = 0;
    std::uint32_t mask = 0; // bit v-1 set iff vertex v is in the cut side
    bool found = false;
};

inline VertexSubset subset_from_mask(std::uint32_t mask) {
    std::vector<int> members;
    for (int b = 0; b < 32; ++b)
        if (mask & (1u << b))
            members.push_back(b + 1);
    return VertexSubset(std::move(members));
}

// Tie order: smaller ratio, then smaller side, then the side containing the
// smallest vertex id on which the two sides differ.
inline bool cut_better(std::int64_t b1, int s1, std::uint32_t m1, std::int64_t b2, int s2,
                       std::uint32_t m2) {
    const std::int64_t lhs = b1 * s2;
    const std::int64_t rhs = b2 * s1;
    if (lhs != rhs)
        return lhs < rhs;
    if (s1 != s2)
        return s1 < s2;
    const std::uint32_t diff = m1 ^ m2;
    if (diff == 0)
        return false;
    return (m1 & (diff & ~(diff - 1))) != 0;
}

// Exact minimizer of |boundary(S)| / |S| over the vertex subsets of `ids`
// with size in [min_size, max_size]; boundaries are counted inside the
// subgraph induced by `ids`. Gray-code enumeration keeps the incremental
// boundary update O(degree) per subset.
inline CutScanResult scan_min_ratio_cut_of(const Graph& g, const std::vector<int>& ids,
                                           int min_size, int max_size) {
    const int t = static_cast<int>(ids.size());
    if (t < 1 || t > 31)
        throw InternalError("cut scan limited to 31 vertices, got " + std::to_string(t));

    // position -> member-neighbor positions (ids is sorted ascending, so
    // position order equals id order and lexicographic ties agree).
    std::vector<int> pos_of(g.vertex_count() + 1, -1);
    for (int i = 0; i < t; ++i)
        pos_of[ids[i]] = i;
    std::vector<std::vector<int>> local(t);
    for (int i = 0; i < t; ++i)
        for (int u : g.neighbors(ids[i]))
            if (pos_of[u] != -1)
                local[i].push_back(pos_of[u]);

    CutScanResult best;
    std::uint32_t members = 0;
    std::int64_t boundary = 0;
    int size = 0;
    const std::uint64_t count = (1ull << t) - 1;
    for (std::uint64_t i = 1; i <= count; ++i) {
        const int flip = std::countr_zero(i);
        std::int64_t inside = 0;
        for (int u : local[flip])
            if (members & (1u << u))
                ++inside;
        const std::uint32_t bit = 1u << flip;
        if (members & bit) {
            members ^= bit;
            --size;
            boundary -= static_cast<std::int64_t>(local[flip].size()) - 2 * inside;
        } else {
            members ^= bit;
            ++size;
            boundary += static_cast<std::int64_t>(local[flip].size()) - 2 * inside;
        }
        if (size < min_size || size > max_size)
            continue;
        if (!best.found || cut_better(boundary, size, members, best.boundary, best.size, best.mask)) {
            best.found = true;
            best.boundary = boundary;
            best.size = size;
            best.mask = members;
        }
    }
    if (best.found) {
        // Translate the position mask back to vertex-id bits.
        std::uint32_t id_mask = 0;
        for (int i = 0; i < t; ++i)
            if (best.mask & (1u << i))
                id_mask |= 1u << (ids[i] - 1);
        best.mask = id_mask;
    }
    return best;
}

inline CutScanResult scan_min_ratio_cut(const Graph& g, int min_size, int max_size) {
    std::vector<int> ids(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v)
        ids[v - 1] = v;
    return scan_min_ratio_cut_of(g, ids, min_size, max_size);
}

inline CutScanResult scan_min_ratio_cut_within(const Graph& g, std::uint32_t within, int min_size,
                                               int max_size) {
    return scan_min_ratio_cut_of(g, subset_from_mask(within).members, min_size, max_size);
}

inline bool mask_connected(const Graph& g, std::uint32_t mask) {
    if (mask == 0)
        return false;
    const int start = std::countr_zero(mask) + 1;
    std::uint32_t seen = 1u << (start - 1);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            const std::uint32_t bit = 1u << (w - 1);
            if ((mask & bit) && !(seen & bit)) {
                seen |= bit;
                stack.push_back(w);
            }
        }
    }
    return seen == mask;
}

} // namespace lsg::detail
