#ifndef LICOL_CHOOSABILITY_HPP
#define LICOL_CHOOSABILITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "assignment.hpp"
#include "graph.hpp"
#include "solver.hpp"

namespace licol {

using bigint = boost::multiprecision::cpp_int;

// Which family of length-k window assignments is quantified over.
//
// Windowed is the default: window starts range over 1..n-k+1 so every window
// lies inside {1..n}; it requires k <= n. Normalized instead enumerates
// canonical representatives of all integer window placements up to
// translation and gap compression: starts lie in 1..1+(n-1)k, the minimum
// start is 1, and consecutive sorted starts differ by at most k (two windows
// further apart than k are disjoint anyway, so wider gaps add no new overlap
// pattern). Verdicts under the two modes are reported separately and never
// merged.
enum class UniverseMode { Windowed, Normalized };

/// The windowed universe: all length-k windows inside {1..n}.
struct IntervalUniverse {
    int n = 0;
    int k = 0;
    std::vector<int> starts; // 1..n-k+1
};

// Requires 1 <= k <= n.
IntervalUniverse interval_universe(int n, int k);

// (n-k+1)^n, exact.
bigint interval_assignment_count(int n, int k);

// C(pool,k)^n, exact.
bigint subset_assignment_count(int n, int k, int pool);

// Index-addressable enumeration of window assignments in lexicographic order
// of the start tuple (vertex 1 is the most significant position). Slots can
// be materialized independently, so index ranges split cleanly across
// workers. In Normalized mode some slots are non-canonical and materialize
// to nullopt.
class IntervalAssignmentSpace {
public:
    IntervalAssignmentSpace(int n, int k, UniverseMode mode);

    bigint slot_count() const;
    std::optional<KIntervalAssignment> at(std::uint64_t slot) const;
    UniverseMode mode() const { return mode_; }

private:
    int n_;
    int k_;
    int radix_; // distinct start positions per vertex
    UniverseMode mode_;
};

struct ChoosableOptions {
    UniverseMode universe = UniverseMode::Windowed;
    SolveMode solver = SolveMode::Pruned;
    std::uint64_t budget = 100000000; // refuse larger enumerations unless forced
    bool force = false;
    int workers = 1;
};

// Outcome of a universally quantified run. `assignments_checked` is the
// number of assignments solved on a choosable run, and the number of
// enumeration slots examined through the counterexample otherwise; both are
// deterministic for any worker count. Solver totals are deterministic on
// choosable runs and with a single worker.
struct ChoosabilityVerdict {
    bool choosable = false;
    std::optional<KIntervalAssignment> counterexample; // first failing assignment
    std::uint64_t counterexample_slot = 0;
    std::uint64_t assignments_checked = 0;
    SolveStats solver_totals;
};

// Does every enumerated length-k window assignment admit a proper coloring?
// The counterexample, when present, is the lexicographically least failing
// assignment by start tuple. Throws budget_error when the enumeration
// exceeds the budget and `force` is not set.
ChoosabilityVerdict is_k_gamma_mu_choosable(const Graph& g, int k,
                                            const ChoosableOptions& opt = {});

struct ChoosabilityNumberOptions : ChoosableOptions {
    // Start the search at k = 2 instead of k = 1 (the k = 1 start lets
    // edgeless graphs answer 1; singleton windows never conflict without
    // edges).
    bool start_at_two = false;
};

// Smallest k for which the graph is window-choosable. Requires n >= 1.
int gamma_mu_choosability_number(const Graph& g, const ChoosabilityNumberOptions& opt = {});

// Classical choosability over a finite palette: every assignment of
// k-subsets of {1..pool} is enumerated, vertex-major, subsets in
// colexicographic order.
struct ListChoosabilityVerdict {
    bool choosable = false;
    std::optional<ListAssignment> counterexample;
    std::uint64_t counterexample_slot = 0;
    std::uint64_t assignments_checked = 0;
    SolveStats solver_totals;
};

ListChoosabilityVerdict is_k_choosable(const Graph& g, int k, int pool,
                                       const ChoosableOptions& opt = {});

// Singleton-selection phrasing of the same property: a graph admits a choice
// of one-element subsets phi(v) of each list, disjoint across edges, exactly
// when it admits a plain list coloring. The two formulations are equivalent,
// so this delegates.
ListChoosabilityVerdict is_k1_choosable(const Graph& g, int k, int pool,
                                        const ChoosableOptions& opt = {});

// Realizes a coloring as the singleton subsets it selects.
std::vector<std::vector<int>> singleton_selection(const Coloring& c);

} // namespace licol

#endif // LICOL_CHOOSABILITY_HPP
