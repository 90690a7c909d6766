#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lsg/graph.hpp"

namespace lsg {

// Generators produce canonical deterministic neighbor orderings: every
// family below lists neighbors in ascending id order.
//
// Vertex id schemes:
//   path(n), cycle(n), complete(n): ids 1..n in the natural order.
//   grid(r, c), torus(r, c):        row-major, v = (i-1)c + j.
//   petersen: outer cycle 1..5, spokes i <-> i+5, inner 5+i <-> 5+(i+2 mod 5).
//   heawood:  cycle 1..14 plus chords v <-> v+5 for odd v (0-based even).
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_grid(int rows, int cols);
Graph make_torus(int rows, int cols);
Graph make_complete(int n);
Graph make_petersen();
Graph make_heawood();

struct RandomRegularOptions {
    int max_pairing_attempts = 2000;
    int max_swap_rounds = 60000;
    int restarts = 40;
};

// Connected random d-regular graph via the pairing model, drawn with the
// given seed. When min_girth > 3 the generator additionally applies
// girth-improving 2-edge swaps (accepting moves that do not increase a
// weighted count of short cycles) until the girth is reached or the attempt
// budget runs out. Identical seeds give identical graphs.
Graph make_random_regular(int n, int degree, std::uint64_t seed, int min_girth = 3,
                          const RandomRegularOptions& opts = {});

// Cloud structure of a replacement product: per original vertex the ids of
// its cloud in slot order, and the bijection between original edges and the
// inter-cloud edges of the product.
struct CloudMap {
    std::vector<std::vector<int>> clouds;  // clouds[v-1][i-1] = slot-i cloud vertex of v
    std::map<EdgeKey, EdgeKey> cross_edge; // original edge -> product edge
};

struct ReplacementProduct {
    Graph graph;
    CloudMap map;
};

// Replaces every degree-x vertex by an x-cycle cloud wired by neighbor
// slots: if u is the i-th neighbor of v and v the j-th neighbor of u, the
// i-th cloud vertex of v joins the j-th cloud vertex of u. Cloud ids are
// assigned by increasing original vertex, within a cloud by slot, so ranks
// and spanner outputs are reproducible. Requires minimum degree >= 3 so the
// clouds are genuine cycles. The result is 3-regular on sum(deg) vertices
// with girth(product) = min(girth, min degree).
ReplacementProduct replacement_product(const Graph& g);

// Replaces edge e = (u, v) by the path u - w - v with the new vertex w
// given id n+1; neighbor lists of the result are ascending. Girth does not
// decrease.
Graph subdivide(const Graph& g, EdgeKey e);

struct BridgeArtifact {
    Graph graph;    // 2n+2 vertices, bridge normalized to (1, 2)
    EdgeKey bridge; // always (1, 2)
    // Images of original vertex v in the two copies.
    std::vector<int> copy1_map;
    std::vector<int> copy2_map;
};

// Two copies of a connected 3-regular graph, each with one edge subdivided,
// joined by the bridge between the two subdivision vertices. Ids: the
// subdivision vertices become 1 and 2, copy one occupies 3..n+2 and copy two
// n+3..2n+2, preserving the original order. The output is 3-regular,
// connected, and its girth is not below the input's.
BridgeArtifact bridge_join(const Graph& g, EdgeKey e1, EdgeKey e2);

} // namespace lsg
