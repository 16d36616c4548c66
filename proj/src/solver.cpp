#include "solver.hpp"

#include "errors.hpp"

namespace licol {

namespace {

struct Search {
    const Graph& g;
    const ListAssignment& lists;
    SolveMode mode;
    std::vector<int> colors;
    SolveStats stats;

    Search(const Graph& graph, const ListAssignment& L, SolveMode m)
        : g(graph), lists(L), mode(m), colors(graph.vertex_count() + 1, 0) {}

    bool leaf_is_proper() const {
        for (auto [u, v] : g.edges())
            if (colors[u] == colors[v])
                return false;
        return true;
    }

    bool clashes(int v, int color) const {
        for (int u : g.neighbors(v)) {
            if (u >= v)
                break; // neighbors are sorted; later vertices are uncolored
            if (colors[u] == color)
                return true;
        }
        return false;
    }

    bool run(int v) {
        if (v > g.vertex_count()) {
            ++stats.leaves;
            // In pruned mode every reached leaf is proper by construction.
            return mode == SolveMode::Pruned || leaf_is_proper();
        }
        for (int color : lists.lists[v]) {
            if (mode == SolveMode::Pruned && clashes(v, color))
                continue;
            colors[v] = color;
            ++stats.nodes;
            if (run(v + 1))
                return true;
        }
        colors[v] = 0;
        return false;
    }
};

} // namespace

SolveResult exists_list_coloring(const Graph& g, const ListAssignment& L, SolveMode mode) {
    if (L.vertex_count() != g.vertex_count())
        throw invalid_argument_error("list assignment covers " + std::to_string(L.vertex_count()) +
                                     " vertices, graph has " + std::to_string(g.vertex_count()));
    Search search(g, L, mode);
    SolveResult result;
    result.satisfiable = search.run(1);
    result.stats = search.stats;
    if (result.satisfiable)
        result.witness = Coloring{std::move(search.colors)};
    return result;
}

SolveResult k_coloring(const Graph& g, int k, SolveMode mode) {
    if (k < 1)
        throw invalid_argument_error("k must be >= 1");
    std::vector<std::vector<int>> lists(g.vertex_count() + 1);
    std::vector<int> palette(k);
    for (int color = 1; color <= k; ++color)
        palette[color - 1] = color;
    for (int v = 1; v <= g.vertex_count(); ++v)
        lists[v] = palette;
    return exists_list_coloring(g, ListAssignment{std::move(lists)}, mode);
}

int chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0)
        return 0;
    for (int k = 1;; ++k)
        if (k_coloring(g, k).satisfiable)
            return k; // k = n always succeeds, so this terminates
}

SolveResult gamma_mu_coloring(const Graph& g, const IntervalAssignment& I, SolveMode mode) {
    if (I.vertex_count() != g.vertex_count())
        throw invalid_argument_error("interval assignment covers " +
                                     std::to_string(I.vertex_count()) + " vertices, graph has " +
                                     std::to_string(g.vertex_count()));
    return exists_list_coloring(g, interval_to_list(I), mode);
}

SolveResult mu_coloring(const Graph& g, const MuAssignment& M, SolveMode mode) {
    if (M.vertex_count() != g.vertex_count())
        throw invalid_argument_error("mu assignment covers " + std::to_string(M.vertex_count()) +
                                     " vertices, graph has " + std::to_string(g.vertex_count()));
    return exists_list_coloring(g, mu_to_list(M), mode);
}

SolveResult precoloring_extension(const Graph& g, const Precoloring& p, SolveMode mode) {
    PrecoloringReduction reduction = precoloring_to_list(g, p);
    SolveResult residual = exists_list_coloring(reduction.graph, reduction.lists, mode);

    SolveResult result;
    result.satisfiable = residual.satisfiable;
    result.stats = residual.stats;
    if (residual.satisfiable) {
        std::vector<int> colors(g.vertex_count() + 1, 0);
        for (auto [v, color] : p.fixed)
            colors[v] = color;
        for (int w = 1; w <= reduction.graph.vertex_count(); ++w)
            colors[reduction.kept[w]] = residual.witness->colors[w];
        result.witness = Coloring{std::move(colors)};
    }
    return result;
}

} // namespace licol
