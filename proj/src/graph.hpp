#ifndef LICOL_GRAPH_HPP
#define LICOL_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace licol {

/// Simple undirected graph with vertices numbered 1..n. Immutable after
/// construction, so instances can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    // Rejects endpoints outside 1..n, self-loops and duplicate edges.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;

    // Neighbor lists are sorted ascending; iteration order is deterministic
    // and downstream witness determinism relies on it.
    const std::vector<int>& neighbors(int v) const;

    // Canonical edge list: u < v within a pair, pairs sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_; // size n_+1, slot 0 unused
};

enum class GraphFamily { Path, Cycle, Complete, CompleteBipartite, Star, Edgeless };

// Accepts "path", "cycle", "complete", "complete_bipartite", "star", "edgeless".
GraphFamily family_from_name(const std::string& name);

// Deterministic generators. `b` is used only by CompleteBipartite (part A is
// 1..a, part B is a+1..a+b). Star(m) is the center 1 plus m leaves.
Graph generate(GraphFamily family, int a, int b = 0);

// Returns the graph with one new degree-1 vertex attached to v, plus the id
// of the new vertex (always the old n+1). Existing edges are unchanged.
std::pair<Graph, int> add_pendant(const Graph& g, int v);

// Text format: a header "p edge <n> <m>" followed by m lines "e <u> <v>";
// lines starting with "c" are comments. Serialization is canonical (u < v,
// edges sorted), and parse(serialize(g)) == g.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

} // namespace licol

#endif // LICOL_GRAPH_HPP
