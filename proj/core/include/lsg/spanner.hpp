#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsg/graph.hpp"
#include "lsg/oracle.hpp"

namespace lsg {

enum class Answer { Yes, No };

std::string to_string(Answer a);

// Radius prescribed by the theoretical analysis: k = 2^(2^(2(C/epsilon)+3)).
// The value is astronomically large for most parameters, so the result
// either carries the evaluated k or just the tower description. Non-integral
// towers round the final value up.
struct ComputedK {
    std::optional<std::uint64_t> k;
    double tower_exponent = 0.0; // 2(C/epsilon) + 3
    std::string tower;           // e.g. "2^(2^23)"
};

ComputedK compute_k(double epsilon, double C);

// Per-edge verdict of the Kruskal-based local algorithm. On NO, certificate
// is a path between the edge's endpoints that lies inside the ball and uses
// only edges of strictly lower rank, witnessing the cycle on which the
// queried edge has the largest rank.
struct SpannerDecision {
    EdgeKey edge;
    Answer answer = Answer::Yes;
    std::uint64_t probes_used = 0;
    std::vector<int> certificate;
};

// Decides membership of (x, y) in the spanner by fetching the radius-k ball
// around the smaller-id endpoint and testing whether the endpoints are
// connected inside it by edges of rank below r(x, y). BFS from the smaller
// id makes the answer a function of the unordered edge. Probes stay within
// d^(k+1).
SpannerDecision edge_in_spanner(OracleHandle& h, EdgeKey e, int k);

// Convenience overload that validates that e is an edge of g and runs on a
// fresh handle.
SpannerDecision edge_in_spanner(const Graph& g, EdgeKey e, int k);

// Same decision procedure with a hard probe cap: once probe_limit probes
// have been spent the ball stays partial and the verdict is computed from
// what was collected. Used to restrict the algorithm to a fixed query
// budget.
SpannerDecision edge_in_spanner_limited(OracleHandle& h, EdgeKey e, int k,
                                        std::uint64_t probe_limit);

struct SpanStats {
    std::uint64_t max_probes = 0;
    double mean_probes = 0.0;
    std::optional<std::uint64_t> budget; // d^(k+1); nullopt when unrepresentable
};

struct SpanResult {
    std::vector<EdgeKey> kept; // E' in ascending rank order
    std::vector<SpannerDecision> decisions;
    SpanStats stats;
};

// Runs the per-edge decision over every edge of a connected graph. Each
// decision runs on its own handle, so jobs > 1 evaluates them in parallel
// with identical results.
SpanResult span_all(const Graph& g, int k, int jobs = 1);

} // namespace lsg
