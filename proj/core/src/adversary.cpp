#include "lsg/adversary.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "detail/union_find.hpp"

namespace lsg {

RecordResult record(const EdgeAlgorithm& alg, const Graph& g, EdgeKey edge) {
    if (!g.has_edge(edge.lo, edge.hi))
        throw DomainError("recorded edge " + to_string(edge) + " is not an edge of the graph");
    RecordResult out;
    out.transcript.input_edge = edge;
    OracleHandle h(g);
    h.attach_recorder(&out.transcript);
    out.answer = alg(h, edge);
    return out;
}

std::vector<EdgeKey> QueryForest::tree_edges() const {
    std::vector<EdgeKey> out = forest_edges;
    out.insert(out.end(), link_edges.begin(), link_edges.end());
    return out;
}

QueryForest build_linked_tree(const Transcript& t) {
    std::set<EdgeKey> edge_set;
    edge_set.insert(t.input_edge);
    for (const auto& entry : t.entries)
        if (entry.answer) // NONE answers contribute no edge
            edge_set.insert(EdgeKey(entry.vertex, *entry.answer));

    QueryForest out;
    out.input_edge = t.input_edge;
    out.forest_edges.assign(edge_set.begin(), edge_set.end());

    std::set<int> vertex_set;
    std::map<int, int> degree;
    for (const EdgeKey& e : out.forest_edges) {
        vertex_set.insert(e.lo);
        vertex_set.insert(e.hi);
        ++degree[e.lo];
        ++degree[e.hi];
    }
    const std::vector<int> vertices(vertex_set.begin(), vertex_set.end());
    std::map<int, int> index;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        index[vertices[i]] = i + 1;

    detail::UnionFind uf(static_cast<int>(vertices.size()));
    for (const EdgeKey& e : out.forest_edges)
        if (!uf.unite(index[e.lo], index[e.hi]))
            throw DomainError("transcript edges contain a cycle; the replay argument requires "
                              "a forest");

    std::map<int, std::vector<int>> groups; // root -> members
    for (int v : vertices)
        groups[uf.find(index[v])].push_back(v);
    std::vector<std::vector<int>> components;
    for (auto& [root, members] : groups)
        components.push_back(std::move(members)); // members ascend already
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    out.components = std::move(components);

    for (const auto& comp : out.components) {
        int leaf = 0;
        for (int v : comp)
            if (degree[v] <= 1) {
                leaf = v;
                break;
            }
        if (leaf == 0)
            throw InternalError("forest component without a leaf");
        out.link_vertices.push_back(leaf);
    }
    for (std::size_t i = 0; i + 1 < out.link_vertices.size(); ++i)
        out.link_edges.emplace_back(out.link_vertices[i], out.link_vertices[i + 1]);
    return out;
}

AdversaryTarget AdversaryTarget::create(Graph g, EdgeKey bridge) {
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) != 3)
            throw DomainError("adversary target must be 3-regular, vertex " + std::to_string(v) +
                              " has degree " + std::to_string(g.degree(v)));
    if (!g.has_edge(bridge.lo, bridge.hi))
        throw DomainError("designated bridge " + to_string(bridge) + " is not an edge");
    auto cut_edges = bridges(g);
    if (std::find(cut_edges.begin(), cut_edges.end(), bridge) == cut_edges.end())
        throw DomainError("designated edge " + to_string(bridge) + " is not a bridge");
    if (!is_connected(g))
        throw DomainError("adversary target must be connected");
    AdversaryTarget out{std::move(g), bridge, Girth::infinite()};
    out.target_girth = girth(out.graph);
    return out;
}

EmbeddingResult embed(const QueryForest& forest, const AdversaryTarget& target,
                      const Transcript& transcript) {
    const Graph& g = target.graph;
    const int n = g.vertex_count();
    const EdgeKey edge = forest.input_edge;

    const auto tree = forest.tree_edges();
    if (target.target_girth.is_finite() &&
        static_cast<int>(tree.size()) >= target.target_girth.length())
        throw DomainError("linked tree has " + std::to_string(tree.size()) +
                          " edges; the embedding argument needs fewer than the girth " +
                          std::to_string(target.target_girth.length()));
    for (const auto& entry : transcript.entries) {
        if (entry.slot > 3)
            throw DomainError("probe slot " + std::to_string(entry.slot) +
                              " is out of model on a 3-regular target");
        if (!entry.answer)
            throw InternalError("NONE answer recorded on a 3-regular target");
    }

    std::map<int, std::vector<int>> tree_adj;
    for (const EdgeKey& e : tree) {
        tree_adj[e.lo].push_back(e.hi);
        tree_adj[e.hi].push_back(e.lo);
    }
    for (auto& [v, list] : tree_adj) {
        std::sort(list.begin(), list.end());
        if (static_cast<int>(list.size()) > 3)
            throw InternalError("linked tree degree above 3 at vertex " + std::to_string(v));
    }

    EmbeddingResult out;
    out.sigma.assign(n + 1, 0);
    std::vector<char> used(n + 1, 0);
    auto assign = [&](int v, int image) {
        out.sigma[v] = image;
        used[image] = 1;
    };
    assign(edge.lo, target.bridge.lo);
    assign(edge.hi, target.bridge.hi);

    std::vector<int> queue{edge.lo};
    std::set<int> visited{edge.lo};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int y : tree_adj[x]) {
            if (visited.count(y))
                continue;
            visited.insert(y);
            if (out.sigma[y] == 0) {
                int image = 0;
                std::vector<int> sorted(g.neighbors(out.sigma[x]).begin(),
                                        g.neighbors(out.sigma[x]).end());
                std::sort(sorted.begin(), sorted.end());
                for (int candidate : sorted)
                    if (!used[candidate]) {
                        image = candidate;
                        break;
                    }
                if (image == 0) {
                    std::ostringstream diag;
                    diag << "embedding failed: no unused neighbor of sigma(" << x
                         << ") = " << out.sigma[x] << "; tree edges:";
                    for (const EdgeKey& e : tree)
                        diag << ' ' << to_string(e);
                    diag << "; partial sigma:";
                    for (int v = 1; v <= n; ++v)
                        if (out.sigma[v] != 0)
                            diag << ' ' << v << "->" << out.sigma[v];
                    throw InternalError(diag.str());
                }
                assign(y, image);
            } else if (!g.has_edge(out.sigma[x], out.sigma[y])) {
                throw InternalError("pre-assigned images of tree edge (" + std::to_string(x) +
                                    "," + std::to_string(y) + ") are not adjacent in the target");
            }
            queue.push_back(y);
        }
    }

    // Complete sigma: remaining ids in increasing order on both sides.
    std::vector<int> free_images;
    for (int v = 1; v <= n; ++v)
        if (!used[v])
            free_images.push_back(v);
    std::size_t next = 0;
    for (int v = 1; v <= n; ++v)
        if (out.sigma[v] == 0)
            out.sigma[v] = free_images[next++];
    if (next != free_images.size())
        throw InternalError("sigma is not a bijection");

    // Neighbor-order constraints: transcript probes replay verbatim, and the
    // input edge keeps its mutual slots from the run graph.
    auto add_constraint = [&](int vertex, int slot, int neighbor) {
        auto [it, inserted] = out.order_constraints.emplace(std::make_pair(vertex, slot), neighbor);
        if (!inserted && it->second != neighbor)
            throw InternalError("conflicting order constraint at (" + std::to_string(vertex) +
                                ", " + std::to_string(slot) + ")");
    };
    for (const auto& entry : transcript.entries)
        add_constraint(entry.vertex, entry.slot, *entry.answer);
    add_constraint(edge.lo, *g.slot_of(edge.lo, edge.hi), edge.hi);
    add_constraint(edge.hi, *g.slot_of(edge.hi, edge.lo), edge.lo);

    out.bridge_hit = out.sigma[edge.lo] == target.bridge.lo && out.sigma[edge.hi] == target.bridge.hi;
    return out;
}

Graph apply_sigma(const Graph& g, const EmbeddingResult& embedding) {
    const int n = g.vertex_count();
    if (static_cast<int>(embedding.sigma.size()) != n + 1)
        throw DomainError("sigma size does not match the graph");
    std::vector<int> inverse(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        const int image = embedding.sigma[v];
        if (image < 1 || image > n || inverse[image] != 0)
            throw DomainError("sigma is not a permutation of 1..n");
        inverse[image] = v;
    }

    std::vector<std::vector<int>> adjacency(n);
    for (int a = 1; a <= n; ++a) {
        std::vector<int> nbrs;
        for (int w : g.neighbors(embedding.sigma[a]))
            nbrs.push_back(inverse[w]);
        std::sort(nbrs.begin(), nbrs.end());
        const int deg = static_cast<int>(nbrs.size());
        std::vector<int> list(deg, 0);
        std::vector<char> placed(deg, 0);
        for (const auto& [key, neighbor] : embedding.order_constraints) {
            if (key.first != a)
                continue;
            const int slot = key.second;
            if (slot < 1 || slot > deg)
                throw InternalError("order constraint slot " + std::to_string(slot) +
                                    " outside the degree of vertex " + std::to_string(a));
            if (!std::binary_search(nbrs.begin(), nbrs.end(), neighbor))
                throw InternalError("order constraint asks for a non-neighbor at vertex " +
                                    std::to_string(a));
            if (list[slot - 1] != 0 && list[slot - 1] != neighbor)
                throw InternalError("conflicting slot assignment at vertex " + std::to_string(a));
            list[slot - 1] = neighbor;
        }
        for (int i = 0; i < deg; ++i)
            for (int j = 0; j < deg; ++j)
                if (list[j] == nbrs[i])
                    placed[i] = 1;
        std::size_t fill = 0;
        for (int i = 0; i < deg; ++i) {
            if (placed[i])
                continue;
            while (list[fill] != 0)
                ++fill;
            list[fill] = nbrs[i];
        }
        adjacency[a - 1] = std::move(list);
    }
    return Graph::from_adjacency(g.degree_bound(), std::move(adjacency));
}

bool replay_verify(const EdgeAlgorithm& alg, const Graph& sigma_g, EdgeKey edge,
                   Answer expected_answer, const Transcript& expected) {
    Transcript actual;
    actual.input_edge = edge;
    OracleHandle h(sigma_g);
    h.attach_recorder(&actual);
    const Answer answer = alg(h, edge);
    return answer == expected_answer && actual.entries == expected.entries;
}

PipelineResult run_pipeline(const EdgeAlgorithm& alg, const AdversaryTarget& target,
                            EdgeKey edge) {
    auto rec = record(alg, target.graph, edge);
    auto forest = build_linked_tree(rec.transcript);
    auto embedding = embed(forest, target, rec.transcript);
    Graph sigma_graph = apply_sigma(target.graph, embedding);
    const bool ok = replay_verify(alg, sigma_graph, edge, rec.answer, rec.transcript);
    return PipelineResult{rec.answer,          std::move(rec.transcript), std::move(forest),
                          std::move(embedding), std::move(sigma_graph),    ok};
}

EdgeAlgorithm spanner_algorithm(int k) {
    return [k](OracleHandle& h, EdgeKey e) { return edge_in_spanner(h, e, k).answer; };
}

EdgeAlgorithm truncated_spanner_algorithm(int k, std::uint64_t max_probes) {
    return [k, max_probes](OracleHandle& h, EdgeKey e) {
        return edge_in_spanner_limited(h, e, k, max_probes).answer;
    };
}

} // namespace lsg
