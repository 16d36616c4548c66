#include "choosability.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "errors.hpp"

namespace licol {

namespace {

bigint ipow(bigint base, int exp) {
    bigint out = 1;
    for (int i = 0; i < exp; ++i)
        out *= base;
    return out;
}

bigint binomial(int n, int r) {
    if (r < 0 || r > n)
        return 0;
    bigint out = 1;
    for (int i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

// Applies the budget and returns the slot count as a plain integer.
std::uint64_t admit_enumeration(const bigint& total, const ChoosableOptions& opt) {
    if (!opt.force && total > bigint(opt.budget))
        throw budget_error("enumeration of " + total.str() + " assignments exceeds the budget of " +
                           std::to_string(opt.budget) + "; rerun with force to proceed");
    if (total > bigint(std::numeric_limits<std::uint64_t>::max() / 2))
        throw budget_error("enumeration of " + total.str() + " assignments is too large to index");
    return static_cast<std::uint64_t>(total);
}

enum class SlotOutcome { Skipped, Satisfiable, Failing };

struct DriveResult {
    std::optional<std::uint64_t> failing_slot;
    std::uint64_t solved = 0;
    SolveStats totals;
};

// Scans slots [0, total) in order, calling slot(idx, stats) for each, and
// stops at the first Failing outcome. With several workers the range is
// processed in fixed blocks: each block is split evenly, every worker scans
// its subrange (stopping early only within that subrange), and the minimum
// failing slot wins. A failing block is then re-scanned sequentially up to
// the winner so the reported counts never depend on scheduling.
template <typename SlotFn>
DriveResult drive_enumeration(std::uint64_t total, int workers, const SlotFn& slot) {
    DriveResult out;

    auto scan = [&slot](std::uint64_t lo, std::uint64_t hi, DriveResult& acc) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            SlotOutcome outcome = slot(idx, acc.totals);
            if (outcome == SlotOutcome::Skipped)
                continue;
            ++acc.solved;
            if (outcome == SlotOutcome::Failing) {
                acc.failing_slot = idx;
                return;
            }
        }
    };

    if (workers <= 1) {
        scan(0, total, out);
        return out;
    }

    const std::uint64_t block = std::max<std::uint64_t>(1024, static_cast<std::uint64_t>(workers) * 512);
    for (std::uint64_t begin = 0; begin < total; begin += block) {
        const std::uint64_t end = std::min(total, begin + block);
        std::vector<DriveResult> partial(workers);
        std::vector<std::thread> threads;
        const std::uint64_t span = end - begin;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t lo = begin + span * w / workers;
            const std::uint64_t hi = begin + span * (w + 1) / workers;
            threads.emplace_back([&, lo, hi, w] { scan(lo, hi, partial[w]); });
        }
        for (auto& t : threads)
            t.join();

        std::optional<std::uint64_t> block_min;
        for (const auto& p : partial)
            if (p.failing_slot && (!block_min || *p.failing_slot < *block_min))
                block_min = p.failing_slot;

        if (block_min) {
            // Recompute this block's contribution deterministically.
            DriveResult rescan;
            scan(begin, *block_min + 1, rescan);
            out.totals += rescan.totals;
            out.solved += rescan.solved;
            out.failing_slot = rescan.failing_slot;
            return out;
        }
        for (const auto& p : partial) {
            out.totals += p.totals;
            out.solved += p.solved;
        }
    }
    return out;
}

} // namespace

IntervalUniverse interval_universe(int n, int k) {
    if (k < 1)
        throw invalid_argument_error("window length k must be >= 1");
    if (k > n)
        throw invalid_argument_error("window length k = " + std::to_string(k) +
                                     " exceeds n = " + std::to_string(n));
    IntervalUniverse u;
    u.n = n;
    u.k = k;
    u.starts.resize(n - k + 1);
    for (int i = 0; i < n - k + 1; ++i)
        u.starts[i] = i + 1;
    return u;
}

bigint interval_assignment_count(int n, int k) {
    if (k < 1 || k > n)
        throw invalid_argument_error("need 1 <= k <= n");
    return ipow(n - k + 1, n);
}

bigint subset_assignment_count(int n, int k, int pool) {
    if (k < 1 || pool < k)
        throw invalid_argument_error("need 1 <= k <= pool");
    return ipow(binomial(pool, k), n);
}

IntervalAssignmentSpace::IntervalAssignmentSpace(int n, int k, UniverseMode mode)
    : n_(n), k_(k), mode_(mode) {
    if (k < 1)
        throw invalid_argument_error("window length k must be >= 1");
    if (mode == UniverseMode::Windowed) {
        if (k > n)
            throw invalid_argument_error("window length k = " + std::to_string(k) +
                                         " exceeds n = " + std::to_string(n) +
                                         " in the windowed universe");
        radix_ = n - k + 1;
    } else {
        radix_ = n >= 1 ? 1 + (n - 1) * k : 1;
    }
}

bigint IntervalAssignmentSpace::slot_count() const {
    return ipow(radix_, n_);
}

std::optional<KIntervalAssignment> IntervalAssignmentSpace::at(std::uint64_t slot) const {
    KIntervalAssignment a;
    a.k = k_;
    a.gamma.assign(n_ + 1, 0);
    for (int v = n_; v >= 1; --v) {
        a.gamma[v] = 1 + static_cast<int>(slot % radix_);
        slot /= radix_;
    }
    if (mode_ == UniverseMode::Normalized && n_ >= 1) {
        std::vector<int> sorted(a.gamma.begin() + 1, a.gamma.end());
        std::sort(sorted.begin(), sorted.end());
        if (sorted.front() != 1)
            return std::nullopt;
        for (size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] - sorted[i - 1] > k_)
                return std::nullopt;
    }
    return a;
}

ChoosabilityVerdict is_k_gamma_mu_choosable(const Graph& g, int k, const ChoosableOptions& opt) {
    const int n = g.vertex_count();
    IntervalAssignmentSpace space(n, k, opt.universe);
    const std::uint64_t total = admit_enumeration(space.slot_count(), opt);

    auto slot_fn = [&](std::uint64_t slot, SolveStats& totals) {
        auto assignment = space.at(slot);
        if (!assignment)
            return SlotOutcome::Skipped;
        SolveResult res = gamma_mu_coloring(g, assignment->to_interval(), opt.solver);
        totals += res.stats;
        return res.satisfiable ? SlotOutcome::Satisfiable : SlotOutcome::Failing;
    };

    DriveResult drive = drive_enumeration(total, opt.workers, slot_fn);

    ChoosabilityVerdict verdict;
    verdict.solver_totals = drive.totals;
    if (drive.failing_slot) {
        verdict.choosable = false;
        verdict.counterexample_slot = *drive.failing_slot;
        verdict.counterexample = space.at(*drive.failing_slot);
        verdict.assignments_checked = *drive.failing_slot + 1;
    } else {
        verdict.choosable = true;
        verdict.assignments_checked = drive.solved;
    }
    return verdict;
}

int gamma_mu_choosability_number(const Graph& g, const ChoosabilityNumberOptions& opt) {
    if (g.vertex_count() < 1)
        throw invalid_argument_error("choosability number needs at least one vertex");
    for (int k = opt.start_at_two ? 2 : 1;; ++k) {
        // A k = n run has a single uniform assignment, which any graph
        // satisfies, so the loop terminates before k can exceed n.
        if (is_k_gamma_mu_choosable(g, k, opt).choosable)
            return k;
    }
}

namespace {

// All k-subsets of {1..pool} in colexicographic order.
std::vector<std::vector<int>> colex_subsets(int k, int pool) {
    std::vector<std::vector<int>> out;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i)
        s[i] = i + 1;
    while (true) {
        out.push_back(s);
        int i = 0;
        while (i < k) {
            const int ceiling = (i + 1 < k) ? s[i + 1] : pool + 1;
            if (s[i] + 1 < ceiling)
                break;
            ++i;
        }
        if (i == k)
            break;
        ++s[i];
        for (int j = 0; j < i; ++j)
            s[j] = j + 1;
    }
    return out;
}

} // namespace

ListChoosabilityVerdict is_k_choosable(const Graph& g, int k, int pool,
                                       const ChoosableOptions& opt) {
    const int n = g.vertex_count();
    if (k < 1)
        throw invalid_argument_error("list size k must be >= 1");
    if (pool < k)
        throw invalid_argument_error("palette of " + std::to_string(pool) +
                                     " colors cannot fill lists of size " + std::to_string(k));
    const bigint subsets = binomial(pool, k);
    if (subsets > 2000000)
        throw invalid_argument_error("palette yields " + subsets.str() +
                                     " distinct lists; too many to materialize");
    const std::uint64_t total = admit_enumeration(ipow(subsets, n), opt);

    const auto subset_list = colex_subsets(k, pool);
    const std::uint64_t radix = subset_list.size();

    auto assignment_at = [&](std::uint64_t slot) {
        std::vector<std::vector<int>> lists(n + 1);
        for (int v = n; v >= 1; --v) {
            lists[v] = subset_list[slot % radix];
            slot /= radix;
        }
        return ListAssignment{std::move(lists)};
    };

    auto slot_fn = [&](std::uint64_t slot, SolveStats& totals) {
        SolveResult res = exists_list_coloring(g, assignment_at(slot), opt.solver);
        totals += res.stats;
        return res.satisfiable ? SlotOutcome::Satisfiable : SlotOutcome::Failing;
    };

    DriveResult drive = drive_enumeration(total, opt.workers, slot_fn);

    ListChoosabilityVerdict verdict;
    verdict.solver_totals = drive.totals;
    if (drive.failing_slot) {
        verdict.choosable = false;
        verdict.counterexample_slot = *drive.failing_slot;
        verdict.counterexample = assignment_at(*drive.failing_slot);
        verdict.assignments_checked = *drive.failing_slot + 1;
    } else {
        verdict.choosable = true;
        verdict.assignments_checked = drive.solved;
    }
    return verdict;
}

ListChoosabilityVerdict is_k1_choosable(const Graph& g, int k, int pool,
                                        const ChoosableOptions& opt) {
    return is_k_choosable(g, k, pool, opt);
}

std::vector<std::vector<int>> singleton_selection(const Coloring& c) {
    std::vector<std::vector<int>> phi(c.vertex_count() + 1);
    for (int v = 1; v <= c.vertex_count(); ++v)
        phi[v] = {c.colors[v]};
    return phi;
}

} // namespace licol
