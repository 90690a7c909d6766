#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsg/graph.hpp"

namespace lsg {

// One probe of the incidence-list oracle: "what is the slot-th neighbor of
// vertex?" with the recorded answer, or nullopt when the vertex has fewer
// than `slot` neighbors. NONE answers are recorded too so that replaying a
// transcript against a graph reproduces it exactly, also off the d-regular
// case.
struct TranscriptEntry {
    int vertex = 0;
    int slot = 0;
    std::optional<int> answer;

    bool operator==(const TranscriptEntry&) const = default;
};

struct Transcript {
    EdgeKey input_edge;
    std::vector<TranscriptEntry> entries;

    bool operator==(const Transcript&) const = default;
};

// Text form: header "edge u v", then one line "x i y" per entry with
// y = "-" for NONE.
std::string serialize_transcript(const Transcript& t);

// Query-counted access to a hidden graph. The handle exposes nothing about
// the target beyond n and d; everything else must come through query().
// One handle per logical algorithm run; multiple handles over one graph are
// safe concurrently.
class OracleHandle {
public:
    explicit OracleHandle(const Graph& g) : graph_(&g) {}

    int vertex_count() const { return graph_->vertex_count(); }
    int degree_bound() const { return graph_->degree_bound(); }

    // The slot-th stored neighbor of v, or nullopt when degree(v) < slot.
    // Counts as exactly one probe and appends to the recording sink if one
    // is attached. Out-of-range (v, slot) is a domain error and not a probe.
    std::optional<int> query(int v, int slot);

    std::uint64_t probe_count() const { return probes_; }
    void reset_count() { probes_ = 0; }

    // The sink must outlive the handle; pass nullptr to detach.
    void attach_recorder(Transcript* sink) { sink_ = sink; }

private:
    const Graph* graph_;
    std::uint64_t probes_ = 0;
    Transcript* sink_ = nullptr;
};

// Certified probe budget d^(k+1) for one per-edge spanner decision.
// Throws OverflowError when the value does not fit in 64 bits; budgets that
// large are never actually run.
std::uint64_t max_probes_per_edge(const Graph& g, int k);
std::uint64_t probe_budget(int degree_bound, int k);

} // namespace lsg
