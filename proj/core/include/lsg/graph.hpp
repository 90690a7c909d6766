#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsg/errors.hpp"

namespace lsg {

// Undirected edge identified by its endpoints, stored as (lo, hi) with lo < hi.
// The defaulted lexicographic ordering on (lo, hi) is exactly the rank order
// the spanner uses as Kruskal weights: ranks are distinct for distinct edges.
struct EdgeKey {
    int lo = 0;
    int hi = 0;

    EdgeKey() = default;
    EdgeKey(int u, int v);

    auto operator<=>(const EdgeKey&) const = default;
};

// True iff a precedes b in the rank order.
bool rank_less(const EdgeKey& a, const EdgeKey& b);

std::string to_string(const EdgeKey& e);

// Set of vertex ids, kept sorted ascending without duplicates.
struct VertexSubset {
    std::vector<int> members;

    VertexSubset() = default;
    explicit VertexSubset(std::vector<int> ids);

    int size() const { return static_cast<int>(members.size()); }
    bool empty() const { return members.empty(); }
    bool contains(int v) const;

    bool operator==(const VertexSubset&) const = default;
};

// Immutable undirected graph on vertex ids 1..n with ordered incidence lists
// and a declared degree bound. Construction validates symmetry, absence of
// self-loops and duplicates, and the degree bound; instances are safe to
// share across threads.
class Graph {
public:
    // adjacency[v-1] is the ordered neighbor list of vertex v.
    static Graph from_adjacency(int degree_bound, std::vector<std::vector<int>> adjacency);
    // Builds ascending-ordered incidence lists from an edge set.
    static Graph from_edges(int n, int degree_bound, const std::vector<EdgeKey>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int degree_bound() const { return degree_bound_; }
    int edge_count() const { return edge_count_; }

    int degree(int v) const;
    std::span<const int> neighbors(int v) const;
    // 1-based slot; requires 1 <= slot <= degree(v).
    int neighbor_at(int v, int slot) const;
    // 1-based position of `neighbor` in v's list, if present.
    std::optional<int> slot_of(int v, int neighbor) const;
    bool has_edge(int u, int v) const;

    // All edges in ascending rank order.
    std::vector<EdgeKey> edges() const;

    bool operator==(const Graph&) const = default;

private:
    Graph(int degree_bound, std::vector<std::vector<int>> adjacency, int edge_count);

    int degree_bound_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Throws DomainError unless 1 <= v <= g.vertex_count().
void check_vertex(const Graph& g, int v);

// Throws DomainError unless the subset is nonempty and within 1..n.
void check_subset(const Graph& g, const VertexSubset& s);

} // namespace lsg
