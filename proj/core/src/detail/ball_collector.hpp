#pragma once

#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "lsg/oracle.hpp"

namespace lsg::detail {

struct CollectedBall {
    std::vector<int> order;    // discovery order; order[0] is the start vertex
    std::vector<int> dist;     // parallel to order
    std::vector<EdgeKey> edges; // induced edges of the ball, ascending
    std::vector<TranscriptEntry> probes;
    bool truncated = false;    // probe_limit hit before the ball was complete
};

// Builds the induced ball of the given radius around `start` through an
// incidence-list prober, recording every probe in order.
//
// Probe discipline (all choices deterministic):
//   - phase 1 expands vertices at distance < radius in discovery order,
//     probing slots 1..d until the first NONE, which discovers every ball
//     vertex and every induced edge with an endpoint at distance < radius;
//   - phase 2 probes the distance-radius vertices in discovery order except
//     the last one discovered, whose incident ball edges are all revealed by
//     the other endpoints;
//   - a vertex whose d distinct neighbors are already known is never probed.
// Together these keep the probe count at most d * (|ball| - 1), which stays
// within the d^(k+1) budget for every d >= 1, k >= 1.
template <typename Prober>
CollectedBall collect_ball(Prober&& probe, int n, int degree_bound, int start, int radius,
                           std::uint64_t probe_limit = std::numeric_limits<std::uint64_t>::max()) {
    CollectedBall out;
    std::vector<int> dist(n + 1, -1);
    std::vector<int> known(n + 1, 0); // distinct neighbors discovered so far
    std::set<EdgeKey> seen;           // includes edges to out-of-ball vertices

    auto record_edge = [&](int a, int b) {
        if (seen.insert(EdgeKey(a, b)).second) {
            ++known[a];
            ++known[b];
        }
    };
    std::uint64_t used = 0;
    // Probes one vertex; returns false when the probe limit was reached.
    auto probe_vertex = [&](int u, bool discover) {
        for (int slot = 1; slot <= degree_bound; ++slot) {
            if (known[u] >= degree_bound)
                break;
            if (used >= probe_limit) {
                out.truncated = true;
                return false;
            }
            std::optional<int> answer = probe(u, slot);
            ++used;
            out.probes.push_back(TranscriptEntry{u, slot, answer});
            if (!answer)
                break;
            record_edge(u, *answer);
            if (discover && dist[*answer] == -1) {
                dist[*answer] = dist[u] + 1;
                out.order.push_back(*answer);
            }
        }
        return true;
    };

    dist[start] = 0;
    out.order.push_back(start);
    for (std::size_t head = 0; head < out.order.size() && !out.truncated; ++head) {
        int u = out.order[head];
        if (dist[u] >= radius)
            continue;
        probe_vertex(u, true);
    }
    if (!out.truncated) {
        std::vector<int> frontier;
        for (int v : out.order)
            if (dist[v] == radius)
                frontier.push_back(v);
        if (!frontier.empty())
            frontier.pop_back();
        for (int w : frontier) {
            if (!probe_vertex(w, false))
                break;
        }
    }

    out.dist.reserve(out.order.size());
    for (int v : out.order)
        out.dist.push_back(dist[v]);
    for (const EdgeKey& e : seen)
        if (dist[e.lo] != -1 && dist[e.hi] != -1)
            out.edges.push_back(e);
    return out;
}

} // namespace lsg::detail
