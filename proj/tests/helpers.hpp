#ifndef LICOL_TEST_HELPERS_HPP
#define LICOL_TEST_HELPERS_HPP

// Test-only utilities: exhaustive small-graph enumeration and brute-force
// oracles that stay independent of the solver implementations they check
// (plain odometer loops plus direct edge scans, no backtracking).

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "assignment.hpp"
#include "graph.hpp"

namespace licol_test {

inline std::vector<std::pair<int, int>> all_vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            pairs.emplace_back(u, v);
    return pairs;
}

// Calls fn once per labeled graph on vertices 1..n (all 2^C(n,2) edge subsets).
template <typename Fn>
void for_all_graphs(int n, Fn&& fn) {
    const auto pairs = all_vertex_pairs(n);
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(pairs[i]);
        fn(licol::Graph::from_edge_list(n, edges));
    }
}

// First color tuple (vertex-major, ascending within each list) that is proper,
// found by walking the full product space with an odometer.
inline std::optional<licol::Coloring> brute_force_list_coloring(const licol::Graph& g,
                                                                const licol::ListAssignment& L) {
    const int n = g.vertex_count();
    for (int v = 1; v <= n; ++v)
        if (L.lists[v].empty())
            return std::nullopt;

    std::vector<std::size_t> pick(n + 1, 0);
    while (true) {
        licol::Coloring candidate;
        candidate.colors.assign(n + 1, 0);
        for (int v = 1; v <= n; ++v)
            candidate.colors[v] = L.lists[v][pick[v]];
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (candidate.colors[u] == candidate.colors[v]) {
                proper = false;
                break;
            }
        if (proper)
            return candidate;

        int v = n;
        while (v >= 1) {
            if (++pick[v] < L.lists[v].size())
                break;
            pick[v] = 0;
            --v;
        }
        if (v < 1)
            return std::nullopt;
    }
}

// Tries all 2^n two-colorings directly.
inline bool brute_force_two_colorable(const licol::Graph& g) {
    const int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (((mask >> (u - 1)) & 1) == ((mask >> (v - 1)) & 1)) {
                proper = false;
                break;
            }
        if (proper)
            return true;
    }
    return n == 0;
}

// Enumerates every extension of the fixed partial coloring with colors 1..k.
inline bool brute_force_precoloring_extension(const licol::Graph& g,
                                              const licol::Precoloring& p) {
    const int n = g.vertex_count();
    std::vector<int> free_vertices;
    for (int v = 1; v <= n; ++v)
        if (!p.fixed.contains(v))
            free_vertices.push_back(v);

    std::vector<int> colors(n + 1, 0);
    for (auto [v, color] : p.fixed)
        colors[v] = color;

    std::vector<int> pick(free_vertices.size(), 1);
    while (true) {
        for (std::size_t i = 0; i < free_vertices.size(); ++i)
            colors[free_vertices[i]] = pick[i];
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (colors[u] == colors[v]) {
                proper = false;
                break;
            }
        if (proper)
            return true;

        int i = static_cast<int>(free_vertices.size()) - 1;
        while (i >= 0) {
            if (++pick[i] <= p.k)
                break;
            pick[i] = 1;
            --i;
        }
        if (i < 0)
            return false;
    }
}

// Seeded helpers; raw modulo keeps the streams identical across platforms.
inline int rand_between(std::mt19937& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

inline licol::Graph random_graph(std::mt19937& rng, int n, int percent_edge) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : all_vertex_pairs(n))
        if (rand_between(rng, 1, 100) <= percent_edge)
            edges.emplace_back(u, v);
    return licol::Graph::from_edge_list(n, edges);
}

inline licol::Graph random_bipartite_graph(std::mt19937& rng, int n, int percent_edge) {
    const int a = rand_between(rng, 1, n - 1);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= n; ++v)
            if (rand_between(rng, 1, 100) <= percent_edge)
                edges.emplace_back(u, v);
    return licol::Graph::from_edge_list(n, edges);
}

// Balanced bipartition with the class membership hidden behind a random
// vertex relabeling, so vertex order carries no structural hint.
inline licol::Graph random_labeled_bipartite_graph(std::mt19937& rng, int n, int percent_edge) {
    const int a = n / 2;
    std::vector<int> label(n + 1);
    for (int v = 1; v <= n; ++v)
        label[v] = v;
    for (int v = n; v >= 2; --v)
        std::swap(label[v], label[1 + static_cast<int>(rng() % static_cast<unsigned>(v))]);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= n; ++v)
            if (rand_between(rng, 1, 100) <= percent_edge)
                edges.emplace_back(label[u], label[v]);
    return licol::Graph::from_edge_list(n, edges);
}

} // namespace licol_test

#endif // LICOL_TEST_HELPERS_HPP
