#include "lsg/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "lsg/analysis.hpp"

namespace lsg {

namespace {

Graph from_edge_set(int n, int degree_bound, const std::set<EdgeKey>& edges) {
    return Graph::from_edges(n, degree_bound,
                             std::vector<EdgeKey>(edges.begin(), edges.end()));
}

} // namespace

Graph make_path(int n) {
    if (n < 1)
        throw GenerationError("path needs n >= 1");
    std::vector<EdgeKey> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, n == 1 ? 1 : 2, edges);
}

Graph make_cycle(int n) {
    if (n < 3)
        throw GenerationError("cycle needs n >= 3");
    std::vector<EdgeKey> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, v + 1);
    edges.emplace_back(1, n);
    return Graph::from_edges(n, 2, edges);
}

Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw GenerationError("grid needs positive dimensions");
    auto id = [cols](int r, int c) { return (r - 1) * cols + c; };
    std::vector<EdgeKey> edges;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            if (c < cols)
                edges.emplace_back(id(r, c), id(r, c + 1));
            if (r < rows)
                edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, 4, edges);
}

Graph make_torus(int rows, int cols) {
    if (rows < 3 || cols < 3)
        throw GenerationError("torus needs both dimensions >= 3 to stay simple");
    auto id = [cols](int r, int c) { return (r - 1) * cols + c; };
    std::vector<EdgeKey> edges;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            edges.emplace_back(id(r, c), id(r, c % cols + 1));
            edges.emplace_back(id(r, c), id(r % rows + 1, c));
        }
    std::set<EdgeKey> dedup(edges.begin(), edges.end());
    return from_edge_set(rows * cols, 4, dedup);
}

Graph make_complete(int n) {
    if (n < 2)
        throw GenerationError("complete graph needs n >= 2");
    std::vector<EdgeKey> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, n - 1, edges);
}

Graph make_petersen() {
    std::vector<EdgeKey> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i + 1, (i + 1) % 5 + 1);     // outer cycle
        edges.emplace_back(i + 1, i + 6);               // spoke
        edges.emplace_back(i + 6, (i + 2) % 5 + 6);     // inner pentagram
    }
    std::set<EdgeKey> dedup(edges.begin(), edges.end());
    return from_edge_set(10, 3, dedup);
}

Graph make_heawood() {
    std::vector<EdgeKey> edges;
    for (int i = 0; i < 14; ++i) {
        edges.emplace_back(i + 1, (i + 1) % 14 + 1);
        if (i % 2 == 0)
            edges.emplace_back(i + 1, (i + 5) % 14 + 1);
    }
    std::set<EdgeKey> dedup(edges.begin(), edges.end());
    return from_edge_set(14, 3, dedup);
}

namespace {

using EdgeSet = std::set<EdgeKey>;
using Adj = std::vector<std::vector<int>>;

// Weighted count of the cycles of length < girth_target through (a, b):
// counts the paths from a to b of length <= girth_target - 2 avoiding the
// direct edge. A cycle of length len weighs 8^(girth_target - len), so the
// shortest offenders dominate.
std::uint64_t through_edge(const Adj& adj, int a, int b, int girth_target) {
    const int max_len = girth_target - 1;
    std::uint64_t score = 0;
    std::vector<std::pair<int, int>> frames; // (vertex, next neighbor index)
    frames.emplace_back(a, 0);
    std::vector<char> on_path(adj.size(), 0);
    on_path[a] = 1;
    while (!frames.empty()) {
        auto& [v, idx] = frames.back();
        const int depth = static_cast<int>(frames.size());
        if (idx < static_cast<int>(adj[v].size())) {
            int w = adj[v][idx++];
            if (depth == 1 && w == b)
                continue; // the direct edge itself
            if (w == b) {
                const int cycle_len = depth + 1;
                if (cycle_len <= max_len && cycle_len >= 3) {
                    std::uint64_t weight = 1;
                    for (int i = 0; i < girth_target - cycle_len; ++i)
                        weight *= 8;
                    score += weight;
                }
                continue;
            }
            if (on_path[w] || depth >= max_len - 1)
                continue;
            on_path[w] = 1;
            frames.emplace_back(w, 0);
        } else {
            on_path[v] = 0;
            frames.pop_back();
        }
    }
    return score;
}

void drop_arc(Adj& adj, const EdgeKey& e) {
    auto& la = adj[e.lo];
    auto& lb = adj[e.hi];
    la.erase(std::find(la.begin(), la.end(), e.hi));
    lb.erase(std::find(lb.begin(), lb.end(), e.lo));
}

void add_arc(Adj& adj, const EdgeKey& e) {
    adj[e.lo].push_back(e.hi);
    adj[e.hi].push_back(e.lo);
}

// One pairing-model draw; nullopt when the pairing collapses an edge.
std::optional<EdgeSet> draw_pairing(int n, int degree, std::mt19937_64& rng) {
    std::vector<int> stubs;
    stubs.reserve(n * degree);
    for (int v = 1; v <= n; ++v)
        for (int i = 0; i < degree; ++i)
            stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    EdgeSet edges;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
        if (stubs[i] == stubs[i + 1])
            return std::nullopt;
        if (!edges.insert(EdgeKey(stubs[i], stubs[i + 1])).second)
            return std::nullopt;
    }
    return edges;
}

bool adj_connected(int n, const Adj& adj) {
    std::vector<char> seen(n + 1, 0);
    std::vector<int> queue{1};
    seen[1] = 1;
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : adj[queue[head]])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    return reached == n;
}

} // namespace

Graph make_random_regular(int n, int degree, std::uint64_t seed, int min_girth,
                          const RandomRegularOptions& opts) {
    if (degree < 1 || n <= degree)
        throw GenerationError("random regular graph needs n > degree >= 1");
    if ((static_cast<long long>(n) * degree) % 2 != 0)
        throw GenerationError("random regular graph needs an even degree sum");
    if (min_girth < 3)
        throw GenerationError("min_girth must be at least 3");

    std::mt19937_64 rng(seed);
    int pairing_budget = opts.max_pairing_attempts;

    for (int restart = 0; restart < opts.restarts; ++restart) {
        std::optional<EdgeSet> drawn;
        while (pairing_budget > 0 && !drawn) {
            --pairing_budget;
            drawn = draw_pairing(n, degree, rng);
        }
        if (!drawn)
            break;
        EdgeSet edges = std::move(*drawn);
        Adj adj(n + 1);
        for (const EdgeKey& e : edges)
            add_arc(adj, e);

        std::vector<EdgeKey> edge_vec(edges.begin(), edges.end());
        std::vector<EdgeKey> hot;
        bool stale = true;
        int rounds = opts.max_swap_rounds;
        while (rounds-- > 0) {
            if (stale) {
                hot.clear();
                for (const EdgeKey& e : edge_vec)
                    if (through_edge(adj, e.lo, e.hi, min_girth) > 0)
                        hot.push_back(e);
                stale = false;
            }
            if (hot.empty())
                break; // girth target reached
            const EdgeKey broken = hot[rng() % hot.size()];
            const EdgeKey partner = edge_vec[rng() % edge_vec.size()];
            const std::set<int> endpoints{broken.lo, broken.hi, partner.lo, partner.hi};
            if (endpoints.size() != 4)
                continue;
            const bool flip = (rng() & 1) != 0;
            const EdgeKey n1(broken.lo, flip ? partner.hi : partner.lo);
            const EdgeKey n2(broken.hi, flip ? partner.lo : partner.hi);
            if (edges.count(n1) || edges.count(n2))
                continue;

            const std::uint64_t before = through_edge(adj, broken.lo, broken.hi, min_girth) +
                                         through_edge(adj, partner.lo, partner.hi, min_girth);
            drop_arc(adj, broken);
            drop_arc(adj, partner);
            add_arc(adj, n1);
            add_arc(adj, n2);
            const std::uint64_t after = through_edge(adj, n1.lo, n1.hi, min_girth) +
                                        through_edge(adj, n2.lo, n2.hi, min_girth);
            if (after < before || (after == before && (rng() % 4) == 0)) {
                edges.erase(broken);
                edges.erase(partner);
                edges.insert(n1);
                edges.insert(n2);
                edge_vec.assign(edges.begin(), edges.end());
                stale = true;
            } else {
                drop_arc(adj, n1);
                drop_arc(adj, n2);
                add_arc(adj, broken);
                add_arc(adj, partner);
            }
        }
        if (hot.empty() && !stale && adj_connected(n, adj)) {
            Graph g = from_edge_set(n, degree, edges);
            if (girth(g) >= Girth::finite(min_girth))
                return g;
            throw InternalError("short-cycle score and girth analyzer disagree");
        }
    }
    throw GenerationError("could not reach girth >= " + std::to_string(min_girth) +
                          " for a random " + std::to_string(degree) + "-regular graph on " +
                          std::to_string(n) + " vertices within the attempt budget");
}

ReplacementProduct replacement_product(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) < 3)
            throw DomainError("replacement product needs minimum degree 3, vertex " +
                              std::to_string(v) + " has degree " + std::to_string(g.degree(v)));

    ReplacementProduct out;
    out.map.clouds.resize(n);
    int next_id = 1;
    for (int v = 1; v <= n; ++v) {
        out.map.clouds[v - 1].resize(g.degree(v));
        for (int slot = 1; slot <= g.degree(v); ++slot)
            out.map.clouds[v - 1][slot - 1] = next_id++;
    }
    const int product_n = next_id - 1;

    std::vector<EdgeKey> edges;
    for (int v = 1; v <= n; ++v) {
        const auto& cloud = out.map.clouds[v - 1];
        const int x = static_cast<int>(cloud.size());
        for (int i = 0; i < x; ++i)
            edges.emplace_back(cloud[i], cloud[(i + 1) % x]);
    }
    for (const EdgeKey& e : g.edges()) {
        const int i = *g.slot_of(e.hi, e.lo); // e.lo is the i-th neighbor of e.hi
        const int j = *g.slot_of(e.lo, e.hi); // e.hi is the j-th neighbor of e.lo
        EdgeKey cross(out.map.clouds[e.hi - 1][i - 1], out.map.clouds[e.lo - 1][j - 1]);
        edges.push_back(cross);
        out.map.cross_edge.emplace(e, cross);
    }
    out.graph = Graph::from_edges(product_n, 3, edges);
    return out;
}

Graph subdivide(const Graph& g, EdgeKey e) {
    if (!g.has_edge(e.lo, e.hi))
        throw DomainError("cannot subdivide non-edge " + to_string(e));
    const int n = g.vertex_count();
    const int w = n + 1;
    std::vector<EdgeKey> edges;
    for (const EdgeKey& old : g.edges())
        if (old != e)
            edges.push_back(old);
    edges.emplace_back(e.lo, w);
    edges.emplace_back(e.hi, w);
    return Graph::from_edges(n + 1, std::max(g.degree_bound(), 2), edges);
}

BridgeArtifact bridge_join(const Graph& g, EdgeKey e1, EdgeKey e2) {
    const int n = g.vertex_count();
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) != 3)
            throw DomainError("bridge join needs a 3-regular input");
    if (!is_connected(g))
        throw DomainError("bridge join needs a connected input");
    if (!g.has_edge(e1.lo, e1.hi) || !g.has_edge(e2.lo, e2.hi))
        throw DomainError("bridge join subdivision edges must be edges of the input");

    // Subdivision vertices take ids 1 and 2; copy one becomes 3..n+2 and
    // copy two n+3..2n+2.
    BridgeArtifact out;
    out.bridge = EdgeKey(1, 2);
    out.copy1_map.resize(n + 1);
    out.copy2_map.resize(n + 1);
    for (int v = 1; v <= n; ++v) {
        out.copy1_map[v] = v + 2;
        out.copy2_map[v] = v + n + 2;
    }
    std::vector<EdgeKey> edges;
    auto add_copy = [&](const std::vector<int>& map, EdgeKey skip, int w) {
        for (const EdgeKey& e : g.edges()) {
            if (e == skip)
                continue;
            edges.emplace_back(map[e.lo], map[e.hi]);
        }
        edges.emplace_back(map[skip.lo], w);
        edges.emplace_back(map[skip.hi], w);
    };
    add_copy(out.copy1_map, e1, 1);
    add_copy(out.copy2_map, e2, 2);
    edges.emplace_back(1, 2);
    out.graph = Graph::from_edges(2 * n + 2, 3, edges);
    return out;
}

} // namespace lsg
