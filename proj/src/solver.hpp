#ifndef LICOL_SOLVER_HPP
#define LICOL_SOLVER_HPP

#include <cstdint>
#include <optional>

#include "assignment.hpp"
#include "graph.hpp"

namespace licol {

// Two interchangeable search strategies over the same depth-first tree.
//
// Literal assigns colors vertex by vertex in ascending index order and tests
// properness only once every vertex is colored, so an unsatisfiable instance
// visits every leaf of the product space. Pruned walks the identical tree but
// rejects a color as soon as it clashes with an already-colored neighbor.
// Both return the same satisfiable bit and, when satisfiable, the same
// witness: the lexicographically first solution under (vertex order,
// ascending color within each list).
//
// The destructive list/flag bookkeeping sometimes seen in recursive
// pseudocode for this search is replaced here by an explicit vertex index
// and return values; node/leaf counts refer to this functional form.
enum class SolveMode { Literal, Pruned };

struct SolveStats {
    std::uint64_t nodes = 0;  // color assignments performed
    std::uint64_t leaves = 0; // complete candidate colorings reached

    void operator+=(const SolveStats& other) {
        nodes += other.nodes;
        leaves += other.leaves;
    }
};

struct SolveResult {
    bool satisfiable = false;
    std::optional<Coloring> witness; // present iff satisfiable
    SolveStats stats;
};

// Is there a proper coloring with c(v) in L(v) for every v? Throws when L
// does not cover V(g).
SolveResult exists_list_coloring(const Graph& g, const ListAssignment& L,
                                 SolveMode mode = SolveMode::Pruned);

// Classical k-coloring as the uniform-list special case L(v) = {1..k}.
SolveResult k_coloring(const Graph& g, int k, SolveMode mode = SolveMode::Pruned);

// Smallest k admitting a proper k-coloring. Edgeless graphs (including a
// single vertex) give 1; the empty graph gives 0.
int chromatic_number(const Graph& g);

SolveResult gamma_mu_coloring(const Graph& g, const IntervalAssignment& I,
                              SolveMode mode = SolveMode::Pruned);

SolveResult mu_coloring(const Graph& g, const MuAssignment& M,
                        SolveMode mode = SolveMode::Pruned);

// Extends the fixed partial coloring to all of g with colors 1..k. The
// witness is total on V(g) and agrees with the fixed part.
SolveResult precoloring_extension(const Graph& g, const Precoloring& p,
                                  SolveMode mode = SolveMode::Pruned);

} // namespace licol

#endif // LICOL_SOLVER_HPP
