#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "helpers.hpp"
#include "reduction.hpp"

using namespace licol;
using namespace licol_test;

namespace {

ListAssignment lists_of(std::vector<std::vector<int>> lists_by_vertex) {
    std::vector<std::vector<int>> lists(lists_by_vertex.size() + 1);
    for (std::size_t i = 0; i < lists_by_vertex.size(); ++i)
        lists[i + 1] = lists_by_vertex[i];
    return make_list_assignment(std::move(lists));
}

Coloring coloring_of(std::vector<int> colors_by_vertex) {
    std::vector<int> colors(colors_by_vertex.size() + 1);
    for (std::size_t i = 0; i < colors_by_vertex.size(); ++i)
        colors[i + 1] = colors_by_vertex[i];
    return make_coloring(std::move(colors));
}

// All 8^n list assignments over subsets of {1,2,3}, including empty lists.
template <typename Fn>
void for_all_small_list_assignments(int n, Fn&& fn) {
    std::vector<int> subset(n + 1, 0);
    while (true) {
        std::vector<std::vector<int>> lists(n + 1);
        for (int v = 1; v <= n; ++v)
            for (int color = 1; color <= 3; ++color)
                if (subset[v] >> (color - 1) & 1)
                    lists[v].push_back(color);
        fn(ListAssignment{std::move(lists)});

        int v = n;
        while (v >= 1) {
            if (++subset[v] < 8)
                break;
            subset[v] = 0;
            --v;
        }
        if (v < 1)
            return;
    }
}

} // namespace

TEST_CASE("pendant_reduction blocks exactly the missing colors") {
    Graph k1 = generate(GraphFamily::Edgeless, 1);
    PendantReduction r = pendant_reduction(k1, lists_of({{2}}));
    CHECK(r.c_max == 2);
    CHECK(!r.unsatisfiable);
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.pendant_map.size() == 1);
    CHECK(r.pendant_map.at({1, 1}) == 2);
    CHECK(r.interval.gamma[1] == 1);
    CHECK(r.interval.mu[1] == 2);
    CHECK(r.interval.gamma[2] == 1);
    CHECK(r.interval.mu[2] == 1);

    // Complete lists need no blockers at all.
    Graph p2 = generate(GraphFamily::Path, 2);
    PendantReduction full = pendant_reduction(p2, lists_of({{1, 2}, {1, 2}}));
    CHECK(full.graph == p2);
    CHECK(full.pendant_map.empty());
    CHECK(full.interval.gamma[1] == 1);
    CHECK(full.interval.mu[2] == 2);
}

TEST_CASE("pendant_reduction with every list empty is explicitly unsatisfiable") {
    Graph p2 = generate(GraphFamily::Path, 2);
    PendantReduction r = pendant_reduction(p2, lists_of({{}, {}}));
    CHECK(r.unsatisfiable);
    CHECK(r.c_max == 0);
    CHECK(r.graph == p2);
    CHECK(!solve_reduced(r).satisfiable);
    CHECK_THROWS_AS(restrict_witness(r, coloring_of({1, 2})), invalid_argument_error);

    // The empty graph has no vertices to starve, so it stays satisfiable.
    PendantReduction empty = pendant_reduction(Graph::from_edge_list(0, {}), ListAssignment{{{}}});
    CHECK(!empty.unsatisfiable);
    CHECK(solve_reduced(empty).satisfiable);
}

TEST_CASE("pendant counts follow the missing-color formula") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rand_between(rng, 1, 6);
        Graph g = random_graph(rng, n, 40);
        std::vector<std::vector<int>> raw(n + 1);
        for (int v = 1; v <= n; ++v)
            for (int color = 1; color <= 4; ++color)
                if (rng() % 2)
                    raw[v].push_back(color);
        ListAssignment lists = make_list_assignment(raw);
        PendantReduction r = pendant_reduction(g, lists);
        if (r.unsatisfiable)
            continue;
        std::size_t total = 0;
        for (int v = 1; v <= n; ++v) {
            int missing = 0;
            for (int color = 1; color <= r.c_max; ++color)
                if (!std::binary_search(lists.lists[v].begin(), lists.lists[v].end(), color))
                    ++missing;
            CHECK(r.pendant_count(v) == missing);
            total += missing;
        }
        CHECK(r.pendant_map.size() == total);
        CHECK(r.graph.vertex_count() == n + static_cast<int>(total));
        CHECK(r.graph.edge_count() == g.edge_count() + static_cast<int>(total));
    }
}

TEST_CASE("pendant reduction preserves the answer and the witnesses restrict") {
    // Exhaustive over all graphs with n <= 3 and all lists over {1,2,3};
    // n = 4 exhaustively is covered by the acceptance suite, n = 5 sampled
    // below.
    for (int n = 1; n <= 3; ++n)
        for_all_graphs(n, [&](const Graph& g) {
            for_all_small_list_assignments(n, [&](const ListAssignment& lists) {
                const auto direct = brute_force_list_coloring(g, lists);
                PendantReduction r = pendant_reduction(g, lists);
                SolveResult reduced = solve_reduced(r);
                CHECK(direct.has_value() == reduced.satisfiable);
                if (reduced.satisfiable) {
                    Coloring restricted = restrict_witness(r, *reduced.witness);
                    CHECK(is_proper_coloring(g, restricted));
                    CHECK(respects_lists(restricted, lists));
                }
                if (direct) {
                    // Forward direction: a list coloring extends to the
                    // reduced graph (blockers pinned) and restricts back to
                    // itself.
                    Coloring extended;
                    extended.colors = direct->colors;
                    extended.colors.resize(r.graph.vertex_count() + 1, 0);
                    for (const auto& [key, pendant] : r.pendant_map)
                        extended.colors[pendant] = key.second;
                    CHECK(is_proper_coloring(r.graph, extended));
                    CHECK(restrict_witness(r, extended) == *direct);
                }
            });
        });

    std::mt19937 rng(1111);
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = random_graph(rng, 5, 45);
        std::vector<std::vector<int>> raw(6);
        for (int v = 1; v <= 5; ++v)
            for (int color = 1; color <= 3; ++color)
                if (rng() % 2)
                    raw[v].push_back(color);
        ListAssignment lists = make_list_assignment(raw);
        PendantReduction r = pendant_reduction(g, lists);
        SolveResult reduced = solve_reduced(r);
        CHECK(brute_force_list_coloring(g, lists).has_value() == reduced.satisfiable);
        if (reduced.satisfiable) {
            Coloring restricted = restrict_witness(r, *reduced.witness);
            CHECK(is_proper_coloring(g, restricted));
            CHECK(respects_lists(restricted, lists));
        }
    }
}

TEST_CASE("blocker colors are forced in any valid reduced coloring") {
    Graph p2 = generate(GraphFamily::Path, 2);
    PendantReduction r = pendant_reduction(p2, lists_of({{2}, {1, 2}}));
    SolveResult reduced = solve_reduced(r);
    REQUIRE(reduced.satisfiable);
    for (const auto& [key, pendant] : r.pendant_map)
        CHECK(reduced.witness->colors[pendant] == key.second);
}

TEST_CASE("pendant reduction keeps bipartite graphs bipartite") {
    std::mt19937 rng(2222);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = rand_between(rng, 2, 8);
        Graph g = random_bipartite_graph(rng, n, 50);
        std::vector<std::vector<int>> raw(n + 1);
        for (int v = 1; v <= n; ++v)
            for (int color = 1; color <= 3; ++color)
                if (rng() % 2)
                    raw[v].push_back(color);
        PendantReduction r = pendant_reduction(g, make_list_assignment(raw));
        CHECK(brute_force_two_colorable(r.graph));
    }
}

TEST_CASE("restrict_witness validates its input") {
    Graph p2 = generate(GraphFamily::Path, 2);
    PendantReduction r = pendant_reduction(p2, lists_of({{2}, {1, 2}}));
    // r.graph is P2 plus one blocker [1,1] on vertex 1.
    CHECK_THROWS_AS(restrict_witness(r, coloring_of({2, 1})), invalid_argument_error);
    CHECK_THROWS_AS(restrict_witness(r, coloring_of({2, 2, 1})), invalid_argument_error);
    CHECK_THROWS_AS(restrict_witness(r, coloring_of({2, 1, 2})), invalid_argument_error);
    Coloring valid = coloring_of({2, 1, 1});
    CHECK(restrict_witness(r, valid) == coloring_of({2, 1}));
}

TEST_CASE("modular_lift reproduces the worked window example") {
    Graph c4 = generate(GraphFamily::Cycle, 4);
    KIntervalAssignment windows;
    windows.k = 2;
    windows.gamma = {0, 10, 20, 30, 40};
    LiftResult lift = modular_lift(c4, coloring_of({1, 2, 1, 2}), windows);
    CHECK(std::vector<int>(lift.coloring.colors.begin() + 1, lift.coloring.colors.end()) ==
          std::vector<int>{11, 20, 31, 40});
    CHECK(lift.candidates_inspected <= 2 * 4);
    CHECK(lift.max_candidates_per_vertex <= 2);
}

TEST_CASE("modular_lift is the identity on uniform [1,k] windows") {
    std::mt19937 rng(3030);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rand_between(rng, 1, 6);
        Graph g = random_graph(rng, n, 40);
        const int chi = chromatic_number(g);
        SolveResult base = k_coloring(g, chi);
        REQUIRE(base.satisfiable);
        KIntervalAssignment windows;
        windows.k = chi;
        windows.gamma.assign(n + 1, 1);
        windows.gamma[0] = 0;
        LiftResult lift = modular_lift(g, *base.witness, windows);
        CHECK(lift.coloring == *base.witness);
    }
}

TEST_CASE("each residue appears exactly once in any k consecutive integers") {
    for (int k = 1; k <= 6; ++k)
        for (int start = 1; start <= 50; ++start)
            for (int residue = 0; residue < k; ++residue) {
                int hits = 0;
                for (int x = start; x < start + k; ++x)
                    if (x % k == residue)
                        ++hits;
                CHECK(hits == 1);
            }
}

TEST_CASE("modular_lift output is proper, in-window and cheap") {
    std::mt19937 rng(4040);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = rand_between(rng, 1, 6);
        Graph g = random_graph(rng, n, 45);
        const int k = rand_between(rng, 1, 3);
        SolveResult base = k_coloring(g, k);
        if (!base.satisfiable)
            continue;
        KIntervalAssignment windows;
        windows.k = k;
        windows.gamma.assign(n + 1, 0);
        for (int v = 1; v <= n; ++v)
            windows.gamma[v] = rand_between(rng, 1, 10);

        LiftResult lift = modular_lift(g, *base.witness, windows);
        CHECK(is_proper_coloring(g, lift.coloring));
        CHECK(respects_lists(lift.coloring, interval_to_list(windows.to_interval())));
        CHECK(lift.candidates_inspected <= static_cast<std::uint64_t>(k) * n);
        CHECK(lift.max_candidates_per_vertex <= k);
        // Residues survive the lift, so adjacent vertices stay distinct.
        for (auto [u, v] : g.edges())
            CHECK(lift.coloring.colors[u] % k != lift.coloring.colors[v] % k);
    }
}

TEST_CASE("modular_lift rejects bad input") {
    Graph c4 = generate(GraphFamily::Cycle, 4);
    KIntervalAssignment windows;
    windows.k = 2;
    windows.gamma = {0, 10, 20, 30, 40};
    // Improper base coloring.
    CHECK_THROWS_AS(modular_lift(c4, coloring_of({1, 1, 1, 2}), windows),
                    invalid_argument_error);
    // Color outside 1..k.
    CHECK_THROWS_AS(modular_lift(c4, coloring_of({1, 2, 1, 3}), windows),
                    invalid_argument_error);
    // Window assignment not covering the graph.
    KIntervalAssignment short_windows;
    short_windows.k = 2;
    short_windows.gamma = {0, 10, 20};
    CHECK_THROWS_AS(modular_lift(c4, coloring_of({1, 2, 1, 2}), short_windows),
                    invalid_argument_error);
    CHECK_THROWS_AS(modular_lift(c4, coloring_of({1, 2, 1, 2}), KIntervalAssignment{}),
                    invalid_argument_error);
}
