#include "graph.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace licol {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0)
        throw invalid_argument_error("vertex count must be non-negative");

    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw invalid_argument_error("edge endpoint out of range 1.." + std::to_string(n) +
                                         ": (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw invalid_argument_error("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw invalid_argument_error("duplicate edge (" + std::to_string(dup->first) + "," +
                                     std::to_string(dup->second) + ")");

    g.adjacency_.assign(n + 1, {});
    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > n_)
        throw invalid_argument_error("vertex " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(n_));
    return adjacency_[v];
}

GraphFamily family_from_name(const std::string& name) {
    if (name == "path") return GraphFamily::Path;
    if (name == "cycle") return GraphFamily::Cycle;
    if (name == "complete") return GraphFamily::Complete;
    if (name == "complete_bipartite") return GraphFamily::CompleteBipartite;
    if (name == "star") return GraphFamily::Star;
    if (name == "edgeless") return GraphFamily::Edgeless;
    throw invalid_argument_error("unknown graph family: " + name);
}

Graph generate(GraphFamily family, int a, int b) {
    if (a <= 0)
        throw invalid_argument_error("family size must be positive");

    std::vector<std::pair<int, int>> edges;
    switch (family) {
    case GraphFamily::Path:
        for (int v = 1; v < a; ++v)
            edges.emplace_back(v, v + 1);
        return Graph::from_edge_list(a, edges);
    case GraphFamily::Cycle:
        if (a < 3)
            throw invalid_argument_error("cycle needs at least 3 vertices");
        for (int v = 1; v < a; ++v)
            edges.emplace_back(v, v + 1);
        edges.emplace_back(1, a);
        return Graph::from_edge_list(a, edges);
    case GraphFamily::Complete:
        for (int u = 1; u <= a; ++u)
            for (int v = u + 1; v <= a; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edge_list(a, edges);
    case GraphFamily::CompleteBipartite:
        if (b <= 0)
            throw invalid_argument_error("complete_bipartite needs two positive part sizes");
        for (int u = 1; u <= a; ++u)
            for (int v = a + 1; v <= a + b; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edge_list(a + b, edges);
    case GraphFamily::Star:
        for (int leaf = 2; leaf <= a + 1; ++leaf)
            edges.emplace_back(1, leaf);
        return Graph::from_edge_list(a + 1, edges);
    case GraphFamily::Edgeless:
        return Graph::from_edge_list(a, {});
    }
    throw invalid_argument_error("unknown graph family");
}

std::pair<Graph, int> add_pendant(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (v < 1 || v > n)
        throw invalid_argument_error("pendant anchor " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(n));
    auto edges = g.edges();
    edges.emplace_back(v, n + 1);
    return {Graph::from_edge_list(n + 1, edges), n + 1};
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    long declared_edges = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue; // blank line
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (have_header)
                throw parse_error("line " + std::to_string(lineno) + ": duplicate header");
            std::string kind;
            long m = 0;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": malformed header, expected \"p edge <n> <m>\"");
            declared_edges = m;
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header)
                throw parse_error("line " + std::to_string(lineno) + ": edge before header");
            int u = 0, v = 0;
            if (!(ls >> u >> v))
                throw parse_error("line " + std::to_string(lineno) + ": malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("line " + std::to_string(lineno) + ": endpoint out of range 1.." +
                                  std::to_string(n));
            edges.emplace_back(u, v);
            continue;
        }
        throw parse_error("line " + std::to_string(lineno) + ": unknown line type \"" + tag + "\"");
    }

    if (!have_header)
        throw parse_error("missing header \"p edge <n> <m>\"");
    if (static_cast<long>(edges.size()) != declared_edges)
        throw parse_error("header declares " + std::to_string(declared_edges) + " edges but " +
                          std::to_string(edges.size()) + " were listed");
    try {
        return Graph::from_edge_list(n, edges);
    } catch (const invalid_argument_error& e) {
        throw parse_error(e.what());
    }
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

} // namespace licol
