#include "lsg/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "detail/ball_collector.hpp"
#include "detail/cut_scan.hpp"

namespace lsg {

std::string to_string(const Girth& g) {
    return g.is_finite() ? std::to_string(g.length()) : std::string("infinite");
}

bool BallResult::contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

BallResult ball(const Graph& g, int v, int k) {
    check_vertex(g, v);
    if (k < 0)
        throw DomainError("ball radius must be nonnegative");
    auto collected = detail::collect_ball(
        [&g](int u, int slot) -> std::optional<int> {
            if (slot <= g.degree(u))
                return g.neighbor_at(u, slot);
            return std::nullopt;
        },
        g.vertex_count(), g.degree_bound(), v, k);
    BallResult out;
    out.center = v;
    out.radius = k;
    out.vertices = std::move(collected.order);
    out.distances = std::move(collected.dist);
    out.edges = std::move(collected.edges);
    out.probes = std::move(collected.probes);
    return out;
}

namespace {

// BFS from source recording distance and the discovery parent.
void bfs_tree(const Graph& g, int source, std::vector<int>& dist, std::vector<int>& parent) {
    const int n = g.vertex_count();
    dist.assign(n + 1, -1);
    parent.assign(n + 1, 0);
    std::vector<int> queue;
    queue.reserve(n);
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
}

} // namespace

Girth girth(const Graph& g) {
    auto cycle = shortest_cycle(g);
    if (!cycle)
        return Girth::infinite();
    return Girth::finite(static_cast<int>(cycle->size()));
}

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    const int n = g.vertex_count();
    const auto all_edges = g.edges();
    int best_len = -1;
    std::vector<int> best_cycle;

    std::vector<int> dist, parent;
    for (int root = 1; root <= n; ++root) {
        bfs_tree(g, root, dist, parent);
        for (const EdgeKey& e : all_edges) {
            if (dist[e.lo] == -1 || dist[e.hi] == -1)
                continue;
            if (parent[e.lo] == e.hi || parent[e.hi] == e.lo)
                continue; // BFS tree edge
            const int candidate = dist[e.lo] + dist[e.hi] + 1;
            if (best_len != -1 && candidate >= best_len)
                continue;
            // Walk both endpoints up to their meeting point; the resulting
            // simple cycle has length at most `candidate`.
            std::vector<int> path_a{e.lo}, path_b{e.hi};
            for (int x = e.lo; x != root; x = parent[x])
                path_a.push_back(parent[x]);
            for (int x = e.hi; x != root; x = parent[x])
                path_b.push_back(parent[x]);
            while (path_a.size() >= 2 && path_b.size() >= 2 &&
                   path_a[path_a.size() - 2] == path_b[path_b.size() - 2]) {
                path_a.pop_back();
                path_b.pop_back();
            }
            // path_a and path_b now share exactly their last vertex, so the
            // concatenation below is a simple cycle closed by the (lo, hi)
            // edge.
            std::vector<int> cycle(path_a.begin(), path_a.end());
            for (auto it = path_b.rbegin() + 1; it != path_b.rend(); ++it)
                cycle.push_back(*it);
            const int len = static_cast<int>(cycle.size());
            if (len >= 3 && (best_len == -1 || len < best_len)) {
                best_len = len;
                best_cycle = std::move(cycle);
            }
        }
    }
    if (best_len == -1)
        return std::nullopt;
    return best_cycle;
}

std::vector<EdgeKey> edge_boundary(const Graph& g, const VertexSubset& s) {
    check_subset(g, s);
    if (s.size() == g.vertex_count())
        throw DomainError("edge boundary of the full vertex set is empty by definition; "
                          "pass a proper subset");
    std::vector<EdgeKey> out;
    for (int v : s.members)
        for (int u : g.neighbors(v))
            if (!s.contains(u))
                out.emplace_back(v, u);
    std::sort(out.begin(), out.end());
    return out;
}

ExpansionResult expansion(const Graph& g, int exhaustive_cap) {
    const int n = g.vertex_count();
    if (n < 2)
        throw DomainError("expansion needs at least two vertices");
    if (n > exhaustive_cap)
        throw ExhaustiveOnlyError("expansion is exhaustive-only: n = " + std::to_string(n) +
                                  " exceeds the cap " + std::to_string(exhaustive_cap));
    auto best = detail::scan_min_ratio_cut(g, 1, n / 2);
    ExpansionResult out;
    out.value = Ratio::of(best.boundary, best.size);
    out.cut = detail::subset_from_mask(best.mask);
    return out;
}

std::optional<ExpansionWitness> check_non_expanding(const Graph& g, const BoundFn& f,
                                                    int exhaustive_cap) {
    const int n = g.vertex_count();
    if (n > exhaustive_cap)
        throw ExhaustiveOnlyError("non-expansion check is exhaustive-only: n = " +
                                  std::to_string(n) + " exceeds the cap " +
                                  std::to_string(exhaustive_cap));
    // Group vertex subsets by size, scanned from largest to smallest.
    std::vector<std::vector<std::uint32_t>> by_size(n + 1);
    const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        by_size[std::popcount(mask)].push_back(mask);

    for (int t = n; t > 2; --t) {
        const double bound = f(t);
        for (std::uint32_t mask : by_size[t]) {
            if (!detail::mask_connected(g, mask))
                continue;
            auto best = detail::scan_min_ratio_cut_within(g, mask, 1, t / 2);
            Ratio phi = Ratio::of(best.boundary, best.size);
            if (!ratio_at_most(phi, bound)) {
                ExpansionWitness w;
                w.subgraph_vertices = detail::subset_from_mask(mask);
                w.cut = detail::subset_from_mask(best.mask);
                w.ratio = phi;
                w.bound = bound;
                return w;
            }
        }
    }
    return std::nullopt;
}

int tree_centroid(const Graph& tree, std::span<const double> weights) {
    const int n = tree.vertex_count();
    if (!is_tree(tree))
        throw DomainError("tree centroid requires a connected acyclic graph");
    if (static_cast<int>(weights.size()) != n)
        throw DomainError("expected one weight per vertex");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0)
            throw DomainError("vertex weights must be nonnegative");
        total += w;
    }

    // Weight of the component of T - at that contains seed.
    auto component_weight = [&](int at, int seed) {
        std::vector<int> stack{seed};
        std::vector<char> visited(n + 1, 0);
        visited[at] = 1;
        visited[seed] = 1;
        double sum = weights[seed - 1];
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : tree.neighbors(u)) {
                if (!visited[w]) {
                    visited[w] = 1;
                    sum += weights[w - 1];
                    stack.push_back(w);
                }
            }
        }
        return sum;
    };

    int current = 1;
    while (true) {
        int next = 0;
        std::vector<int> sorted(tree.neighbors(current).begin(), tree.neighbors(current).end());
        std::sort(sorted.begin(), sorted.end());
        for (int u : sorted) {
            if (2.0 * component_weight(current, u) > total) {
                next = u;
                break;
            }
        }
        if (next == 0)
            return current;
        current = next;
    }
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 1);
    return std::find(dist.begin() + 1, dist.end(), -1) == dist.end();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(n + 1, 0);
    std::vector<std::vector<int>> out;
    for (int v = 1; v <= n; ++v) {
        if (label[v] != 0)
            continue;
        std::vector<int> comp{v};
        label[v] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int u : g.neighbors(comp[head]))
                if (label[u] == 0) {
                    label[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

int diameter(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (int v = 1; v <= n; ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = 1; u <= n; ++u) {
            if (dist[u] == -1)
                throw DomainError("diameter is undefined for disconnected graphs");
            best = std::max(best, dist[u]);
        }
    }
    return best;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    check_vertex(g, source);
    const int n = g.vertex_count();
    std::vector<int> dist(n + 1, -1);
    std::vector<int> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u))
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<EdgeKey> bridges(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n + 1, 0), low(n + 1, 0), parent(n + 1, 0);
    std::vector<EdgeKey> out;
    int timer = 0;

    // Iterative lowlink DFS; parallel edges cannot occur, so the parent
    // check is by vertex.
    struct Frame {
        int v;
        std::size_t next;
    };
    for (int root = 1; root <= n; ++root) {
        if (disc[root] != 0)
            continue;
        std::vector<Frame> stack{{root, 0}};
        disc[root] = low[root] = ++timer;
        while (!stack.empty()) {
            auto& fr = stack.back();
            auto nbrs = g.neighbors(fr.v);
            if (fr.next < nbrs.size()) {
                int w = nbrs[fr.next++];
                if (disc[w] == 0) {
                    parent[w] = fr.v;
                    disc[w] = low[w] = ++timer;
                    stack.push_back({w, 0});
                } else if (w != parent[fr.v]) {
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                int v = fr.v;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p])
                        out.emplace_back(p, v);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

} // namespace lsg
