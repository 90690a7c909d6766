#pragma once

// Independent brute-force oracles for the test suites. These deliberately
// avoid the library's implementation paths: girth goes through per-edge
// shortest paths, expansion through plain recursive subset enumeration, and
// the non-expansion oracle enumerates all subgraphs, not just induced ones.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "lsg/graph.hpp"

namespace lsg::testing {

// Girth as min over edges (u,v) of dist(u, v) + 1 in G - (u,v); nullopt for
// forests.
std::optional<int> brute_girth(const Graph& g);

// Exact expansion as a (boundary, size) pair minimizing the ratio, by
// recursive inclusion/exclusion enumeration. n <= 20.
std::pair<std::int64_t, std::int64_t> brute_expansion(const Graph& g);

// Vertices within distance k of v, via full BFS, plus the induced edges.
std::pair<std::vector<int>, std::vector<EdgeKey>> brute_ball(const Graph& g, int v, int k);

// True iff every subgraph H (any vertex subset of size > 2, any subset of
// the induced edges) satisfies phi_H <= f(|V(H)|). Exponential in edges;
// keep inputs small and sparse.
bool brute_non_expanding_all_subgraphs(const Graph& g, const std::function<double(int)>& f);

// Connected random graph on n vertices with at most max_edges edges,
// rejection-sampled with the given rng.
Graph random_connected_graph(int n, int max_edges, std::mt19937_64& rng);

// Random graph (possibly disconnected), at most max_edges edges.
Graph random_graph(int n, int max_edges, std::mt19937_64& rng);

} // namespace lsg::testing
