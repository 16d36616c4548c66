#ifndef LICOL_ASSIGNMENT_HPP
#define LICOL_ASSIGNMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

namespace licol {

// All per-vertex containers below are indexed 1..n with slot 0 unused, the
// same convention as Graph. Colors are unbounded positive integers; no global
// palette is imposed.

/// Total coloring: one color >= 1 per vertex.
struct Coloring {
    std::vector<int> colors; // size n+1

    int vertex_count() const { return static_cast<int>(colors.size()) - 1; }
    bool operator==(const Coloring&) const = default;
};

/// Per-vertex finite color sets. Lists are kept sorted ascending and
/// duplicate-free; an empty list is legal and makes the instance
/// unsatisfiable at that vertex.
struct ListAssignment {
    std::vector<std::vector<int>> lists; // size n+1

    int vertex_count() const { return static_cast<int>(lists.size()) - 1; }
    bool operator==(const ListAssignment&) const = default;
};

/// Per-vertex color bounds gamma(v) <= f(v) <= mu(v).
struct IntervalAssignment {
    std::vector<int> gamma; // size n+1
    std::vector<int> mu;    // size n+1

    int vertex_count() const { return static_cast<int>(gamma.size()) - 1; }
    bool operator==(const IntervalAssignment&) const = default;
};

/// Interval assignment where every window has the same length k, stored as
/// start positions: the list at v is {gamma(v), ..., gamma(v)+k-1}.
struct KIntervalAssignment {
    std::vector<int> gamma; // size n+1
    int k = 0;

    int vertex_count() const { return static_cast<int>(gamma.size()) - 1; }
    IntervalAssignment to_interval() const;
    bool operator==(const KIntervalAssignment&) const = default;
};

/// Per-vertex upper bounds: admissible colors at v are 1..mu(v).
struct MuAssignment {
    std::vector<int> mu; // size n+1

    int vertex_count() const { return static_cast<int>(mu.size()) - 1; }
    bool operator==(const MuAssignment&) const = default;
};

/// A fixed partial coloring on some subset W plus a total color budget k.
/// The fixed colors must lie in 1..k and be proper on the subgraph induced
/// by W.
struct Precoloring {
    std::map<int, int> fixed; // vertex -> color
    int k = 0;

    bool operator==(const Precoloring&) const = default;
};

// Normalizes (sorts, dedupes) and validates raw list data.
ListAssignment make_list_assignment(std::vector<std::vector<int>> lists_1_indexed);
IntervalAssignment make_interval_assignment(std::vector<int> gamma, std::vector<int> mu);
MuAssignment make_mu_assignment(std::vector<int> mu);
Coloring make_coloring(std::vector<int> colors_1_indexed);

// True iff no edge of g has equal endpoint colors. Throws when c is not
// total on V(g).
bool is_proper_coloring(const Graph& g, const Coloring& c);

// True iff c(v) is in L(v) for every vertex. Throws on domain mismatch.
bool respects_lists(const Coloring& c, const ListAssignment& L);

// L(v) = {gamma(v), ..., mu(v)}.
ListAssignment interval_to_list(const IntervalAssignment& I);

// L(v) = {1, ..., mu(v)}.
ListAssignment mu_to_list(const MuAssignment& M);

struct PrecoloringReduction {
    Graph graph;          // g minus the precolored vertices, renumbered 1..n-|W|
    ListAssignment lists; // {1..k} minus the colors of precolored neighbors
    std::vector<int> kept; // kept[new_id] = original id, size (n-|W|)+1
};

// Removes the precolored vertices and gives each remaining vertex the budget
// colors not already used by a precolored neighbor. Throws when the
// precoloring is invalid for g (out-of-range ids, colors outside 1..k, or a
// conflict inside W).
PrecoloringReduction precoloring_to_list(const Graph& g, const Precoloring& p);

// ---------------------------------------------------------------------------
// Assignment documents (JSON files with a "kind" discriminator).

enum class AssignmentKind { List, Interval, Mu, Precoloring };

std::string kind_name(AssignmentKind kind);

struct Assignment {
    AssignmentKind kind = AssignmentKind::List;
    ListAssignment lists;       // kind == List
    IntervalAssignment interval; // kind == Interval
    MuAssignment mu;            // kind == Mu
    Precoloring pre;            // kind == Precoloring
};

Assignment parse_assignment(const std::string& text);
std::string serialize_assignment(const Assignment& a);

Assignment assignment_of(ListAssignment L);
Assignment assignment_of(IntervalAssignment I);
Assignment assignment_of(MuAssignment M);
Assignment assignment_of(Precoloring P);

// Coloring documents: {"kind":"coloring","colors":{"1":...,...}}.
Coloring parse_coloring(const std::string& text);
std::string serialize_coloring(const Coloring& c);

} // namespace licol

#endif // LICOL_ASSIGNMENT_HPP
