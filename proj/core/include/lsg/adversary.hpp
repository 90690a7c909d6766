#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lsg/analysis.hpp"
#include "lsg/graph.hpp"
#include "lsg/oracle.hpp"
#include "lsg/spanner.hpp"

namespace lsg {

// A deterministic per-edge algorithm: sees the graph only through the
// handle, returns the membership answer for the queried edge.
using EdgeAlgorithm = std::function<Answer(OracleHandle&, EdgeKey)>;

struct RecordResult {
    Answer answer = Answer::Yes;
    Transcript transcript;
};

// Runs the algorithm against g on the given edge and records the full
// query-answer transcript. Rerunning yields an identical transcript.
RecordResult record(const EdgeAlgorithm& alg, const Graph& g, EdgeKey edge);

// The forest spanned by the transcript's probe edges plus the input edge,
// deduplicated, with the chain of linking edges that joins its trees into a
// single tree T. Link vertices are the smallest-id leaf of each component,
// which keeps every degree in T at most 3.
struct QueryForest {
    EdgeKey input_edge;
    std::vector<EdgeKey> forest_edges;        // E(F), ascending
    std::vector<std::vector<int>> components; // sorted members, by first member
    std::vector<int> link_vertices;           // one per component
    std::vector<EdgeKey> link_edges;          // the k-1 chain edges

    std::vector<EdgeKey> tree_edges() const;  // E(F) plus the links
};

QueryForest build_linked_tree(const Transcript& t);

// A 3-regular connected target with a designated bridge, prepared once so
// repeated pipeline runs do not recompute the girth.
struct AdversaryTarget {
    Graph graph;
    EdgeKey bridge;
    Girth target_girth;

    static AdversaryTarget create(Graph g, EdgeKey bridge);
};

struct EmbeddingResult {
    std::vector<int> sigma; // sigma[v] for v in 1..n; sigma[0] unused
    // (vertex, slot) -> required neighbor in sigma(G).
    std::map<std::pair<int, int>, int> order_constraints;
    bool bridge_hit = false; // input edge mapped onto the bridge
};

// Grows sigma over the linked tree by BFS from the input edge's smaller
// endpoint (children in id order), sending each child to the smallest-id
// unused neighbor of its parent's image, then completes sigma by matching
// the remaining ids in increasing order. Requires |E(T)| < girth(target);
// a missing unused neighbor under that precondition is a bug and raises
// InternalError with a diagnostic.
EmbeddingResult embed(const QueryForest& forest, const AdversaryTarget& target,
                      const Transcript& transcript);

// The relabeled graph sigma(G): (a, b) is an edge iff (sigma(a), sigma(b))
// is. Neighbor orderings satisfy the order constraints exactly and are
// otherwise ascending; they are not inherited from G.
Graph apply_sigma(const Graph& g, const EmbeddingResult& embedding);

// True iff the algorithm's transcript on sigma_g matches `expected` entry
// for entry and the answers agree.
bool replay_verify(const EdgeAlgorithm& alg, const Graph& sigma_g, EdgeKey edge,
                   Answer expected_answer, const Transcript& expected);

struct PipelineResult {
    Answer answer = Answer::Yes;
    Transcript transcript;
    QueryForest forest;
    EmbeddingResult embedding;
    Graph sigma_graph;
    bool replay_ok = false;
};

// record -> build_linked_tree -> embed -> apply_sigma -> replay_verify.
// For any algorithm within the girth budget the replay is exact, so an
// algorithm that answers NO on `edge` is exhibited answering NO on a bridge
// of an isomorphic input.
PipelineResult run_pipeline(const EdgeAlgorithm& alg, const AdversaryTarget& target, EdgeKey edge);

// Algorithm adapters.
EdgeAlgorithm spanner_algorithm(int k);
EdgeAlgorithm truncated_spanner_algorithm(int k, std::uint64_t max_probes);

} // namespace lsg
