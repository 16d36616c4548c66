#ifndef LICOL_REDUCTION_HPP
#define LICOL_REDUCTION_HPP

#include <cstdint>
#include <map>
#include <utility>

#include "assignment.hpp"
#include "graph.hpp"
#include "solver.hpp"

namespace licol {

// Result of converting a list instance (g, L) into an interval instance.
//
// Every original vertex keeps its id and receives the interval [1, c_max],
// where c_max is the largest color appearing anywhere in the lists (a single
// global maximum, not a per-vertex one). For each vertex v and each color
// i in {1..c_max} missing from L(v), a degree-1 blocker vertex pinned to the
// singleton interval [i, i] is attached to v; blockers are numbered after the
// original vertices, grouped by vertex and ascending blocked color.
//
// When every list is empty (and the graph is non-empty) there is no valid
// c_max, so the result carries an explicit `unsatisfiable` marker instead of
// an ill-formed interval and `graph` is the input graph unchanged.
struct PendantReduction {
    Graph graph;
    IntervalAssignment interval;
    std::map<std::pair<int, int>, int> pendant_map; // (vertex, blocked color) -> blocker id
    int c_max = 0;
    bool unsatisfiable = false;

    int pendant_count(int v) const;
};

PendantReduction pendant_reduction(const Graph& g, const ListAssignment& L);

// Restriction of a coloring of the reduced graph to the original vertices.
// Requires c to be proper on the reduced graph and inside its intervals;
// the restriction is then guaranteed to respect the original lists.
Coloring restrict_witness(const PendantReduction& r, const Coloring& c);

// Solves the interval instance carried by a reduction, honoring the
// degenerate all-empty-lists marker.
SolveResult solve_reduced(const PendantReduction& r, SolveMode mode = SolveMode::Pruned);

struct LiftResult {
    Coloring coloring;
    std::uint64_t candidates_inspected = 0; // total, at most k per vertex
    int max_candidates_per_vertex = 0;
};

// Rewrites a proper coloring with colors 1..k into one that lives inside the
// given length-k windows: each vertex gets the unique window element congruent
// to its original color mod k (so residue 0 stands for color k). Adjacent
// vertices keep distinct residues, hence distinct colors. Runs in O(k n).
//
// Throws when c is not proper, uses a color outside 1..k, or the windows do
// not all have length k.
LiftResult modular_lift(const Graph& g, const Coloring& c, const KIntervalAssignment& I);

} // namespace licol

#endif // LICOL_REDUCTION_HPP
