#include "reduction.hpp"

#include <algorithm>

#include "errors.hpp"

namespace licol {

int PendantReduction::pendant_count(int v) const {
    int count = 0;
    for (const auto& [key, id] : pendant_map)
        if (key.first == v)
            ++count;
    return count;
}

PendantReduction pendant_reduction(const Graph& g, const ListAssignment& L) {
    const int n = g.vertex_count();
    if (L.vertex_count() != n)
        throw invalid_argument_error("list assignment covers " + std::to_string(L.vertex_count()) +
                                     " vertices, graph has " + std::to_string(n));

    PendantReduction out;
    for (int v = 1; v <= n; ++v)
        for (int color : L.lists[v])
            out.c_max = std::max(out.c_max, color);

    if (n >= 1 && out.c_max == 0) {
        out.graph = g;
        out.unsatisfiable = true;
        return out;
    }

    auto edges = g.edges();
    int next = n;
    for (int v = 1; v <= n; ++v) {
        const auto& list = L.lists[v];
        for (int color = 1; color <= out.c_max; ++color) {
            if (std::binary_search(list.begin(), list.end(), color))
                continue;
            ++next;
            edges.emplace_back(v, next);
            out.pendant_map[{v, color}] = next;
        }
    }
    out.graph = Graph::from_edge_list(next, edges);

    std::vector<int> gamma(next + 1, 0), mu(next + 1, 0);
    for (int v = 1; v <= n; ++v) {
        gamma[v] = 1;
        mu[v] = out.c_max;
    }
    for (const auto& [key, id] : out.pendant_map) {
        gamma[id] = key.second;
        mu[id] = key.second;
    }
    out.interval = IntervalAssignment{std::move(gamma), std::move(mu)};
    return out;
}

Coloring restrict_witness(const PendantReduction& r, const Coloring& c) {
    if (r.unsatisfiable)
        throw invalid_argument_error("reduction is marked unsatisfiable; no coloring can be valid");
    if (c.vertex_count() != r.graph.vertex_count())
        throw invalid_argument_error("coloring does not cover the reduced graph");
    if (!is_proper_coloring(r.graph, c))
        throw invalid_argument_error("coloring is not proper on the reduced graph");
    for (int v = 1; v <= r.graph.vertex_count(); ++v)
        if (c.colors[v] < r.interval.gamma[v] || c.colors[v] > r.interval.mu[v])
            throw invalid_argument_error("coloring leaves the interval at vertex " +
                                         std::to_string(v));

    const int original_n = r.graph.vertex_count() - static_cast<int>(r.pendant_map.size());
    std::vector<int> colors(c.colors.begin(), c.colors.begin() + original_n + 1);
    return Coloring{std::move(colors)};
}

SolveResult solve_reduced(const PendantReduction& r, SolveMode mode) {
    if (r.unsatisfiable) {
        SolveResult result;
        result.satisfiable = false;
        return result;
    }
    return gamma_mu_coloring(r.graph, r.interval, mode);
}

LiftResult modular_lift(const Graph& g, const Coloring& c, const KIntervalAssignment& I) {
    const int n = g.vertex_count();
    const int k = I.k;
    if (k < 1)
        throw invalid_argument_error("interval length k must be >= 1");
    if (c.vertex_count() != n || I.vertex_count() != n)
        throw invalid_argument_error("coloring and window assignment must cover V(g)");
    for (int v = 1; v <= n; ++v) {
        if (c.colors[v] < 1 || c.colors[v] > k)
            throw invalid_argument_error("color " + std::to_string(c.colors[v]) + " at vertex " +
                                         std::to_string(v) + " outside 1.." + std::to_string(k));
        if (I.gamma[v] < 1)
            throw invalid_argument_error("window start at vertex " + std::to_string(v) +
                                         " must be >= 1");
    }
    if (!is_proper_coloring(g, c))
        throw invalid_argument_error("input coloring is not proper");

    LiftResult out;
    std::vector<int> lifted(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        // Among any k consecutive integers each residue class mod k occurs
        // exactly once; scan the window and keep the matching element.
        int matches = 0;
        int inspected = 0;
        for (int x = I.gamma[v]; x <= I.gamma[v] + k - 1; ++x) {
            ++inspected;
            if (((x - c.colors[v]) % k + k) % k == 0) {
                lifted[v] = x;
                ++matches;
            }
        }
        if (matches != 1)
            throw error("residue class matched " + std::to_string(matches) +
                        " window elements at vertex " + std::to_string(v) + "; expected exactly 1");
        out.candidates_inspected += inspected;
        out.max_candidates_per_vertex = std::max(out.max_candidates_per_vertex, inspected);
    }
    out.coloring = Coloring{std::move(lifted)};
    return out;
}

} // namespace licol
