#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsg/graph.hpp"
#include "lsg/oracle.hpp"
#include "lsg/ratio.hpp"

namespace lsg {

// Length of a shortest cycle. infinite() (forests) compares greater than
// every finite length; there is no sentinel integer.
class Girth {
public:
    static Girth finite(int length) {
        if (length < 3)
            throw DomainError("cycle length must be at least 3");
        Girth g;
        g.length_ = length;
        return g;
    }
    static Girth infinite() { return Girth{}; }

    bool is_finite() const { return length_ != 0; }
    int length() const {
        if (!is_finite())
            throw DomainError("girth is infinite");
        return length_;
    }

    friend bool operator==(const Girth&, const Girth&) = default;
    friend std::strong_ordering operator<=>(const Girth& a, const Girth& b) {
        const long long ka = a.is_finite() ? a.length_ : (1LL << 40);
        const long long kb = b.is_finite() ? b.length_ : (1LL << 40);
        return ka <=> kb;
    }

private:
    int length_ = 0; // 0 encodes infinite
};

std::string to_string(const Girth& g);

// Induced ball C_k(v, G): the subgraph induced by the vertices at distance
// at most k from v, with the deterministic oracle-probe sequence that a
// local algorithm uses to fetch it.
struct BallResult {
    int center = 0;
    int radius = 0;
    std::vector<int> vertices;  // BFS discovery order
    std::vector<int> distances; // parallel to vertices
    std::vector<EdgeKey> edges; // ascending rank order
    std::vector<TranscriptEntry> probes;

    bool contains(int v) const;
};

BallResult ball(const Graph& g, int v, int k);

// Shortest cycle length via per-vertex BFS; result independent of traversal
// order.
Girth girth(const Graph& g);

// One shortest cycle as a vertex sequence (first vertex not repeated), or
// nullopt for forests. Deterministic.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

// Edges with exactly one endpoint in s. Rejects empty and full subsets.
std::vector<EdgeKey> edge_boundary(const Graph& g, const VertexSubset& s);

inline constexpr int kExpansionCap = 24;
inline constexpr int kNonExpansionCap = 16;

struct ExpansionResult {
    Ratio value;
    VertexSubset cut; // a minimizing S; ties: smaller |S|, then lexicographic
};

// Exact edge expansion phi_G = min |boundary(S)|/|S| over 1 <= |S| <= n/2,
// by exhaustive subset enumeration. Refuses graphs above the cap.
ExpansionResult expansion(const Graph& g, int exhaustive_cap = kExpansionCap);

struct ExpansionWitness {
    VertexSubset subgraph_vertices; // the t-vertex induced subgraph H
    VertexSubset cut;               // the S achieving phi_H
    Ratio ratio;                    // exact phi_H
    double bound;                   // f(t)
};

using BoundFn = std::function<double(int)>;

// PASS (nullopt) iff every connected induced subgraph H on t > 2 vertices
// has phi_H <= f(t). Checking induced subgraphs suffices: dropping edges at
// a fixed vertex set can only shrink boundaries, and disconnected subgraphs
// have phi = 0. Subgraphs are scanned in decreasing size; the first
// violation is returned. Exhaustive; refuses graphs above the cap.
std::optional<ExpansionWitness> check_non_expanding(const Graph& g, const BoundFn& f,
                                                    int exhaustive_cap = kNonExpansionCap);

// A vertex whose removal splits the tree into components of weight at most
// w(V)/2 each. Found by the weight-descending walk started at vertex 1,
// moving to the smallest-id qualifying neighbor, so the result is
// reproducible. weights[v-1] is the weight of vertex v.
int tree_centroid(const Graph& tree, std::span<const double> weights);

// Structure helpers shared across modules.
bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g); // sorted members, by first member
int diameter(const Graph& g);                                       // rejects disconnected input
std::vector<int> bfs_distances(const Graph& g, int source);         // -1 for unreachable
std::vector<EdgeKey> bridges(const Graph& g);                       // ascending
bool is_tree(const Graph& g);

} // namespace lsg
