#include "lsg/oracle.hpp"

#include <limits>
#include <sstream>

namespace lsg {

std::string serialize_transcript(const Transcript& t) {
    std::ostringstream out;
    out << "edge " << t.input_edge.lo << ' ' << t.input_edge.hi << '\n';
    for (const auto& e : t.entries) {
        out << e.vertex << ' ' << e.slot << ' ';
        if (e.answer)
            out << *e.answer;
        else
            out << '-';
        out << '\n';
    }
    return out.str();
}

std::optional<int> OracleHandle::query(int v, int slot) {
    check_vertex(*graph_, v);
    if (slot < 1 || slot > graph_->degree_bound())
        throw DomainError("probe slot " + std::to_string(slot) + " outside 1.." +
                          std::to_string(graph_->degree_bound()));
    std::optional<int> answer;
    if (slot <= graph_->degree(v))
        answer = graph_->neighbor_at(v, slot);
    ++probes_;
    if (sink_ != nullptr)
        sink_->entries.push_back(TranscriptEntry{v, slot, answer});
    return answer;
}

std::uint64_t probe_budget(int degree_bound, int k) {
    if (k < 0)
        throw DomainError("ball radius must be nonnegative");
    const auto d = static_cast<std::uint64_t>(degree_bound);
    std::uint64_t result = 1;
    for (int i = 0; i <= k; ++i) {
        if (d != 0 && result > std::numeric_limits<std::uint64_t>::max() / d)
            throw OverflowError("query budget " + std::to_string(degree_bound) + "^" +
                                std::to_string(k + 1) + " unrepresentable in 64 bits");
        result *= d;
    }
    return result;
}

std::uint64_t max_probes_per_edge(const Graph& g, int k) {
    return probe_budget(g.degree_bound(), k);
}

} // namespace lsg
