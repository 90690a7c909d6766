#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsg/graph.hpp"
#include "lsg/ratio.hpp"

namespace lsg {

// The unique minimum spanning tree of a connected graph under the rank
// order (union-find over edges sorted by rank). n-1 edges, ascending.
std::vector<EdgeKey> kruskal_tree(const Graph& g);

struct CutResult {
    VertexSubset side; // |side| in [ceil(n/3), floor(n/2)]
    Ratio ratio;       // |boundary(side)| / |side|
};

inline constexpr int kExpansionCapForCuts = 24;

// Exact minimizer of |boundary(S)|/|S| over ceil(n/3) <= |S| <= floor(n/2),
// by exhaustive enumeration (ties: smaller side, then lexicographic).
// Refuses graphs above the cap.
CutResult balanced_sparse_cut(const Graph& g, int exhaustive_cap = kExpansionCapForCuts);

struct DecomposeOptions {
    int exhaustive_cap = kExpansionCapForCuts;
    // Refuse instead of falling back to sweep cuts above the cap.
    bool exhaustive_only = false;
    // Caller asserts the input is f-non-expanding with f(x) = C/(log2 x
    // (log2 log2 x)^2) for the given C, enabling the removed-edge budget
    // assertion when its preconditions hold.
    bool claim_f_non_expanding = false;
};

struct Decomposition {
    std::vector<EdgeKey> removed;             // in recursion order
    std::vector<std::vector<int>> components; // sorted members, by first member
    int k_stop = 0;
    std::optional<double> beta;  // budget beta(n) when its domain applies
    bool beta_checked = false;   // |removed| <= beta was actually asserted
    bool lemma_ratio_ok = false; // every cut met the ratio 2 f(n/3) bound
};

// Removes balanced sparse cuts recursively until every component has at
// most k_stop vertices. Subproblems within the exhaustive cap use the exact
// minimizer; larger ones use the best deterministic sweep cut over the
// id order and a BFS order (or fail when exhaustive_only is set).
// Recursion enters the smaller side first so the removed-edge order is
// reproducible.
Decomposition decompose(const Graph& g, int k_stop, double C, const DecomposeOptions& opts = {});

// beta(n) = C n / lnln(k/3) - C n / lnln(n), the removed-edge budget of the
// decomposition; zero exactly at n = k/3. Requires k >= 50 and n >= k/3.
double beta_budget(std::int64_t n, std::int64_t k, double C);

// The budget functions of the decomposition analysis, bundled with their
// constant.
struct BudgetFns {
    double C = 1.0;

    // f(x) = C / (log2 x * (log2 log2 x)^2); defined for x > 2.
    double f(double x) const;
    // f*(x) = f(x) / C.
    double f_star(double x) const;
    // h(x) = x / lnln(x); defined for x > e.
    double h(double x) const;
    double beta(double n, double k) const;
};

// Text form: "removed m", m lines "u v", "components c", then one line per
// component listing its sorted vertices.
std::string serialize_decomposition(const Decomposition& d);

} // namespace lsg
