#include "lsg/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <thread>

#include "detail/ball_collector.hpp"
#include "lsg/analysis.hpp"

namespace lsg {

std::string to_string(Answer a) { return a == Answer::Yes ? "YES" : "NO"; }

namespace {

std::string format_exponent(long double inner) {
    const long double rounded = std::roundl(inner);
    if (std::fabsl(inner - rounded) < 1e-9L)
        return std::to_string(static_cast<long long>(rounded));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6Lg", inner);
    return buf;
}

} // namespace

ComputedK compute_k(double epsilon, double C) {
    if (!(epsilon > 0.0) || !(C > 0.0))
        throw DomainError("compute_k requires positive epsilon and C");
    const long double inner = 2.0L * (static_cast<long double>(C) / epsilon) + 3.0L;
    ComputedK out;
    out.tower_exponent = static_cast<double>(inner);
    out.tower = "2^(2^" + format_exponent(inner) + ")";
    if (inner < 16.0L) { // 2^16 far above any representable exponent
        const long double exponent = std::exp2l(inner);
        if (exponent <= 63.0L)
            out.k = static_cast<std::uint64_t>(std::ceill(std::exp2l(exponent)));
    }
    return out;
}

namespace {

SpannerDecision decide(OracleHandle& h, EdgeKey e, int k, std::uint64_t probe_limit) {
    if (k < 1)
        throw DomainError("spanner radius k must be at least 1");
    const std::uint64_t before = h.probe_count();
    auto ball = detail::collect_ball([&h](int v, int slot) { return h.query(v, slot); },
                                     h.vertex_count(), h.degree_bound(), e.lo, k, probe_limit);
    SpannerDecision out;
    out.edge = e;
    out.probes_used = h.probe_count() - before;

    // Budget law: d^(k+1) bounds every decision. Checked on every call.
    bool budget_fits = true;
    std::uint64_t budget = 0;
    try {
        budget = probe_budget(h.degree_bound(), k);
    } catch (const OverflowError&) {
        budget_fits = false;
    }
    if (budget_fits && out.probes_used > budget)
        throw InternalError("probe budget exceeded: " + std::to_string(out.probes_used) + " > " +
                            std::to_string(budget));

    // NO iff the endpoints are connected inside the ball by edges of rank
    // strictly below r(e); ranks are distinct so this is exactly "e has the
    // largest rank on some cycle of the ball".
    std::map<int, std::vector<int>> adj;
    for (const EdgeKey& be : ball.edges)
        if (be < e) {
            adj[be.lo].push_back(be.hi);
            adj[be.hi].push_back(be.lo);
        }
    std::map<int, int> parent;
    parent[e.lo] = 0;
    std::vector<int> queue{e.lo};
    for (std::size_t head = 0; head < queue.size() && parent.find(e.hi) == parent.end(); ++head) {
        int u = queue[head];
        auto it = adj.find(u);
        if (it == adj.end())
            continue;
        for (int w : it->second)
            if (parent.emplace(w, u).second)
                queue.push_back(w);
    }
    if (auto hit = parent.find(e.hi); hit != parent.end()) {
        out.answer = Answer::No;
        std::vector<int> path;
        for (int x = e.hi; x != 0; x = parent[x])
            path.push_back(x);
        std::reverse(path.begin(), path.end()); // e.lo .. e.hi
        out.certificate = std::move(path);
    } else {
        out.answer = Answer::Yes;
    }
    return out;
}

} // namespace

SpannerDecision edge_in_spanner(OracleHandle& h, EdgeKey e, int k) {
    return decide(h, e, k, std::numeric_limits<std::uint64_t>::max());
}

SpannerDecision edge_in_spanner(const Graph& g, EdgeKey e, int k) {
    if (!g.has_edge(e.lo, e.hi))
        throw DomainError("queried pair " + to_string(e) + " is not an edge of the graph");
    OracleHandle h(g);
    return edge_in_spanner(h, e, k);
}

SpannerDecision edge_in_spanner_limited(OracleHandle& h, EdgeKey e, int k,
                                        std::uint64_t probe_limit) {
    return decide(h, e, k, probe_limit);
}

SpanResult span_all(const Graph& g, int k, int jobs) {
    if (!is_connected(g))
        throw DomainError("span_all requires a connected graph");
    if (jobs < 1)
        throw DomainError("jobs must be at least 1");
    const auto edge_list = g.edges();
    SpanResult out;
    out.decisions.resize(edge_list.size());

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            OracleHandle h(g);
            out.decisions[i] = edge_in_spanner(h, edge_list[i], k);
        }
    };
    if (jobs == 1 || edge_list.size() < 2) {
        run_range(0, edge_list.size());
    } else {
        const std::size_t workers = std::min<std::size_t>(jobs, edge_list.size());
        std::vector<std::thread> pool;
        const std::size_t chunk = (edge_list.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(edge_list.size(), begin + chunk);
            if (begin < end)
                pool.emplace_back(run_range, begin, end);
        }
        for (auto& t : pool)
            t.join();
    }

    std::uint64_t total = 0;
    for (const auto& d : out.decisions) {
        if (d.answer == Answer::Yes)
            out.kept.push_back(d.edge);
        out.stats.max_probes = std::max(out.stats.max_probes, d.probes_used);
        total += d.probes_used;
    }
    out.stats.mean_probes =
        edge_list.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(edge_list.size());
    try {
        out.stats.budget = max_probes_per_edge(g, k);
    } catch (const OverflowError&) {
        out.stats.budget = std::nullopt;
    }
    return out;
}

} // namespace lsg
