#include "lsg/reference.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "detail/cut_scan.hpp"
#include "detail/union_find.hpp"
#include "lsg/analysis.hpp"

namespace lsg {

std::vector<EdgeKey> kruskal_tree(const Graph& g) {
    const int n = g.vertex_count();
    detail::UnionFind uf(n);
    std::vector<EdgeKey> tree;
    tree.reserve(n - 1);
    for (const EdgeKey& e : g.edges())
        if (uf.unite(e.lo, e.hi))
            tree.push_back(e);
    if (static_cast<int>(tree.size()) != n - 1)
        throw DomainError("kruskal_tree requires a connected graph");
    return tree;
}

CutResult balanced_sparse_cut(const Graph& g, int exhaustive_cap) {
    const int n = g.vertex_count();
    if (n < 3)
        throw DomainError("balanced sparse cut needs at least three vertices");
    if (n > exhaustive_cap)
        throw ExhaustiveOnlyError("balanced sparse cut is exhaustive-only: n = " +
                                  std::to_string(n) + " exceeds the cap " +
                                  std::to_string(exhaustive_cap));
    auto best = detail::scan_min_ratio_cut(g, (n + 2) / 3, n / 2);
    CutResult out;
    out.side = detail::subset_from_mask(best.mask);
    out.ratio = Ratio::of(best.boundary, best.size);
    return out;
}

namespace {

// Cheapest prefix cut over a vertex ordering, sizes within the balanced
// window. Boundaries are maintained incrementally.
struct SweepBest {
    bool found = false;
    std::int64_t boundary = 0;
    int size = 0;
    std::vector<int> side;
};

void sweep_order(const Graph& g, const std::vector<int>& ids, const std::vector<int>& order,
                 SweepBest& best) {
    const int t = static_cast<int>(ids.size());
    std::vector<char> inside(g.vertex_count() + 1, 0);
    std::vector<char> member(g.vertex_count() + 1, 0);
    for (int v : ids)
        member[v] = 1;
    const int lo = (t + 2) / 3, hi = t / 2;
    std::int64_t boundary = 0;
    for (int i = 0; i < hi; ++i) {
        const int v = order[i];
        std::int64_t local_deg = 0, in_cut = 0;
        for (int u : g.neighbors(v)) {
            if (!member[u])
                continue;
            ++local_deg;
            if (inside[u])
                ++in_cut;
        }
        boundary += local_deg - 2 * in_cut;
        inside[v] = 1;
        const int size = i + 1;
        if (size < lo)
            continue;
        if (!best.found || boundary * best.size < best.boundary * size) {
            best.found = true;
            best.boundary = boundary;
            best.size = size;
            best.side.assign(order.begin(), order.begin() + size);
        }
    }
}

CutResult sweep_cut(const Graph& g, const std::vector<int>& ids) {
    // Candidate orders: ascending ids and BFS discovery from the smallest id.
    std::vector<int> by_id = ids;
    std::sort(by_id.begin(), by_id.end());

    std::vector<char> member(g.vertex_count() + 1, 0);
    for (int v : ids)
        member[v] = 1;
    std::vector<int> bfs{by_id.front()};
    std::vector<char> seen(g.vertex_count() + 1, 0);
    seen[by_id.front()] = 1;
    for (std::size_t head = 0; head < bfs.size(); ++head)
        for (int u : g.neighbors(bfs[head]))
            if (member[u] && !seen[u]) {
                seen[u] = 1;
                bfs.push_back(u);
            }
    for (int v : by_id)
        if (!seen[v])
            bfs.push_back(v); // disconnected remainder, id order

    SweepBest best;
    sweep_order(g, ids, by_id, best);
    sweep_order(g, ids, bfs, best);
    if (!best.found)
        throw InternalError("sweep cut found no candidate in the balanced window");
    CutResult out;
    out.side = VertexSubset(best.side);
    out.ratio = Ratio::of(best.boundary, best.size);
    return out;
}

struct DecomposeState {
    const Graph& g;
    const DecomposeOptions& opts;
    double C;
    int k_stop;
    std::vector<EdgeKey> removed;
    bool lemma_ratio_ok = true;
};

// Induced subgraph on ids (sorted), with an order-preserving relabeling.
Graph induced(const Graph& g, const std::vector<int>& ids) {
    std::vector<int> pos(g.vertex_count() + 1, 0);
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
        pos[ids[i]] = i + 1;
    std::vector<std::vector<int>> adjacency(ids.size());
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
        for (int u : g.neighbors(ids[i]))
            if (pos[u] != 0)
                adjacency[i].push_back(pos[u]);
    return Graph::from_adjacency(g.degree_bound(), std::move(adjacency));
}

void decompose_node(DecomposeState& st, const std::vector<int>& ids) {
    const int t = static_cast<int>(ids.size());
    if (t <= st.k_stop)
        return;
    if (t == 2) { // below the cut window; separate the pair
        if (st.g.has_edge(ids[0], ids[1]))
            st.removed.emplace_back(ids[0], ids[1]);
        return;
    }

    Graph sub = induced(st.g, ids);
    CutResult cut;
    if (t <= st.opts.exhaustive_cap) {
        cut = balanced_sparse_cut(sub, st.opts.exhaustive_cap);
    } else if (st.opts.exhaustive_only) {
        throw ExhaustiveOnlyError(
            "decompose: node on " + std::to_string(t) + " vertices exceeds the exhaustive cap " +
            std::to_string(st.opts.exhaustive_cap) + " (first vertex " + std::to_string(ids[0]) +
            ")");
    } else {
        std::vector<int> local(t);
        for (int i = 1; i <= t; ++i)
            local[i - 1] = i;
        cut = sweep_cut(sub, local);
    }

    // The analysis wants every cut no worse than 2 f(t/3); track whether
    // that held. Only meaningful where f is defined (t/3 > 4).
    const double x = static_cast<double>(t) / 3.0;
    if (x > 4.0) {
        BudgetFns fns{st.C};
        if (!ratio_at_most(cut.ratio, 2.0 * fns.f(x)))
            st.lemma_ratio_ok = false;
    }

    std::vector<char> in_side(t + 1, 0);
    for (int v : cut.side.members)
        in_side[v] = 1;
    std::vector<int> side_ids, rest_ids;
    for (int i = 1; i <= t; ++i)
        (in_side[i] ? side_ids : rest_ids).push_back(ids[i - 1]);

    for (const EdgeKey& e : edge_boundary(sub, cut.side))
        st.removed.emplace_back(ids[e.lo - 1], ids[e.hi - 1]);

    // Smaller side first; ties go to the side holding the smaller first id.
    bool side_first = side_ids.size() < rest_ids.size() ||
                      (side_ids.size() == rest_ids.size() && side_ids[0] < rest_ids[0]);
    decompose_node(st, side_first ? side_ids : rest_ids);
    decompose_node(st, side_first ? rest_ids : side_ids);
}

} // namespace

Decomposition decompose(const Graph& g, int k_stop, double C, const DecomposeOptions& opts) {
    if (k_stop < 1)
        throw DomainError("k_stop must be at least 1");
    const int n = g.vertex_count();

    DecomposeState st{g, opts, C, k_stop, {}, true};
    std::vector<int> all(n);
    for (int v = 1; v <= n; ++v)
        all[v - 1] = v;
    decompose_node(st, all);

    Decomposition out;
    out.removed = std::move(st.removed);
    out.k_stop = k_stop;
    out.lemma_ratio_ok = st.lemma_ratio_ok;

    // Recompute the components of G_R from scratch.
    std::vector<std::vector<int>> adjacency(n);
    std::set<EdgeKey> dropped(out.removed.begin(), out.removed.end());
    for (int v = 1; v <= n; ++v)
        for (int u : g.neighbors(v))
            if (v < u && !dropped.count(EdgeKey(v, u))) {
                adjacency[v - 1].push_back(u);
                adjacency[u - 1].push_back(v);
            }
    for (auto& list : adjacency)
        std::sort(list.begin(), list.end());
    Graph remaining = Graph::from_adjacency(g.degree_bound(), std::move(adjacency));
    out.components = connected_components(remaining);
    for (const auto& comp : out.components)
        if (static_cast<int>(comp.size()) > k_stop)
            throw InternalError("decomposition left a component of size " +
                                std::to_string(comp.size()) + " above k_stop " +
                                std::to_string(k_stop));

    if (k_stop >= 50 && n >= k_stop) {
        out.beta = beta_budget(n, k_stop, C);
        if (opts.claim_f_non_expanding && out.lemma_ratio_ok) {
            out.beta_checked = true;
            if (static_cast<double>(out.removed.size()) > *out.beta)
                throw InternalError("removed " + std::to_string(out.removed.size()) +
                                    " edges, above the budget beta(n) = " +
                                    std::to_string(*out.beta));
        }
    }
    return out;
}

double beta_budget(std::int64_t n, std::int64_t k, double C) {
    if (k < 50)
        throw DomainError("budget formula needs k >= 50");
    if (3 * n < k)
        throw DomainError("budget formula needs n >= k/3");
    const double lnln_k3 = std::log(std::log(static_cast<double>(k) / 3.0));
    const double lnln_n = std::log(std::log(static_cast<double>(n)));
    if (!(lnln_k3 > 0.0) || !(lnln_n > 0.0))
        throw DomainError("budget formula outside the lnln domain");
    return C * static_cast<double>(n) / lnln_k3 - C * static_cast<double>(n) / lnln_n;
}

double BudgetFns::f(double x) const { return C * f_star(x); }

double BudgetFns::f_star(double x) const {
    if (!(x > 2.0))
        throw DomainError("f is defined for x > 2");
    const double log_x = std::log2(x);
    const double loglog_x = std::log2(log_x);
    if (!(loglog_x > 0.0))
        throw DomainError("f needs log2 log2 x > 0, i.e. x > 2");
    return 1.0 / (log_x * loglog_x * loglog_x);
}

double BudgetFns::h(double x) const {
    if (!(x > std::exp(1.0)))
        throw DomainError("h is defined for x > e");
    return x / std::log(std::log(x));
}

double BudgetFns::beta(double n, double k) const {
    return beta_budget(static_cast<std::int64_t>(std::llround(n)),
                       static_cast<std::int64_t>(std::llround(k)), C);
}

std::string serialize_decomposition(const Decomposition& d) {
    std::ostringstream out;
    out << "removed " << d.removed.size() << '\n';
    for (const EdgeKey& e : d.removed)
        out << e.lo << ' ' << e.hi << '\n';
    out << "components " << d.components.size() << '\n';
    for (const auto& comp : d.components) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i > 0)
                out << ' ';
            out << comp[i];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace lsg
