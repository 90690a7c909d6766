#include "lsg/graph.hpp"

#include <algorithm>
#include <set>

namespace lsg {

EdgeKey::EdgeKey(int u, int v) {
    if (u == v)
        throw DomainError("edge endpoints must differ, got (" + std::to_string(u) + ", " +
                          std::to_string(v) + ")");
    if (u < 1 || v < 1)
        throw DomainError("edge endpoints must be positive vertex ids");
    lo = std::min(u, v);
    hi = std::max(u, v);
}

bool rank_less(const EdgeKey& a, const EdgeKey& b) { return a < b; }

std::string to_string(const EdgeKey& e) {
    return "(" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")";
}

VertexSubset::VertexSubset(std::vector<int> ids) : members(std::move(ids)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VertexSubset::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

Graph::Graph(int degree_bound, std::vector<std::vector<int>> adjacency, int edge_count)
    : degree_bound_(degree_bound), edge_count_(edge_count), adj_(std::move(adjacency)) {}

Graph Graph::from_adjacency(int degree_bound, std::vector<std::vector<int>> adjacency) {
    const int n = static_cast<int>(adjacency.size());
    if (n < 1)
        throw DomainError("graph needs at least one vertex");
    if (degree_bound < 1)
        throw DomainError("degree bound must be a positive integer");

    long long twice_edges = 0;
    for (int v = 1; v <= n; ++v) {
        const auto& list = adjacency[v - 1];
        if (static_cast<int>(list.size()) > degree_bound)
            throw DomainError("vertex " + std::to_string(v) + " has " +
                              std::to_string(list.size()) + " neighbors, above the bound " +
                              std::to_string(degree_bound));
        std::set<int> seen;
        for (int u : list) {
            if (u < 1 || u > n)
                throw DomainError("vertex " + std::to_string(v) + " lists neighbor " +
                                  std::to_string(u) + " outside 1.." + std::to_string(n));
            if (u == v)
                throw DomainError("vertex " + std::to_string(v) + " lists itself as a neighbor");
            if (!seen.insert(u).second)
                throw DomainError("vertex " + std::to_string(v) + " lists neighbor " +
                                  std::to_string(u) + " twice");
        }
        twice_edges += static_cast<long long>(list.size());
    }
    // Symmetry: u in adjacency(v) iff v in adjacency(u).
    for (int v = 1; v <= n; ++v) {
        for (int u : adjacency[v - 1]) {
            const auto& back = adjacency[u - 1];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw DomainError("edge (" + std::to_string(v) + "," + std::to_string(u) +
                                  ") is not symmetric: " + std::to_string(u) +
                                  " does not list " + std::to_string(v));
        }
    }
    return Graph(degree_bound, std::move(adjacency), static_cast<int>(twice_edges / 2));
}

Graph Graph::from_edges(int n, int degree_bound, const std::vector<EdgeKey>& edges) {
    if (n < 1)
        throw DomainError("graph needs at least one vertex");
    std::vector<std::vector<int>> adjacency(n);
    std::set<EdgeKey> seen;
    for (const EdgeKey& e : edges) {
        if (e.hi > n)
            throw DomainError("edge " + to_string(e) + " endpoint outside 1.." + std::to_string(n));
        if (!seen.insert(e).second)
            throw DomainError("duplicate edge " + to_string(e));
        adjacency[e.lo - 1].push_back(e.hi);
        adjacency[e.hi - 1].push_back(e.lo);
    }
    for (auto& list : adjacency)
        std::sort(list.begin(), list.end());
    return from_adjacency(degree_bound, std::move(adjacency));
}

int Graph::degree(int v) const {
    check_vertex(*this, v);
    return static_cast<int>(adj_[v - 1].size());
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(*this, v);
    return adj_[v - 1];
}

int Graph::neighbor_at(int v, int slot) const {
    check_vertex(*this, v);
    const auto& list = adj_[v - 1];
    if (slot < 1 || slot > static_cast<int>(list.size()))
        throw DomainError("vertex " + std::to_string(v) + " has no neighbor slot " +
                          std::to_string(slot));
    return list[slot - 1];
}

std::optional<int> Graph::slot_of(int v, int neighbor) const {
    check_vertex(*this, v);
    const auto& list = adj_[v - 1];
    for (int i = 0; i < static_cast<int>(list.size()); ++i)
        if (list[i] == neighbor)
            return i + 1;
    return std::nullopt;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v)
        return false;
    const auto& list = adj_[u - 1];
    return std::find(list.begin(), list.end(), v) != list.end();
}

std::vector<EdgeKey> Graph::edges() const {
    std::vector<EdgeKey> out;
    out.reserve(edge_count_);
    for (int v = 1; v <= vertex_count(); ++v)
        for (int u : adj_[v - 1])
            if (v < u)
                out.emplace_back(v, u);
    std::sort(out.begin(), out.end());
    return out;
}

void check_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.vertex_count())
        throw DomainError("vertex id " + std::to_string(v) + " outside 1.." +
                          std::to_string(g.vertex_count()));
}

void check_subset(const Graph& g, const VertexSubset& s) {
    if (s.empty())
        throw DomainError("vertex subset must be nonempty");
    for (int v : s.members)
        check_vertex(g, v);
}

} // namespace lsg
