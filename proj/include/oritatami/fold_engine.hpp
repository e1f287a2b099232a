#pragma once

#include "oritatami/conformation.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oritatami {

struct OritatamiSystem
{
    RuleSet rules;
    int arity = 1;
    int delay = 1;
    Conformation seed;
    std::vector<BeadType> transcript;

    // Checks arity >= 1, delay >= 1, and that the seed is R-valid with
    // arity at most `arity`. Throws InvalidInput.
    void validate() const;
};

// Placement of one new bead together with the bonds it forms. Partners are
// 0-based path indices, ascending.
struct StabilizationChoice
{
    Point point;
    std::vector<std::size_t> partners;

    bool operator==(const StabilizationChoice&) const = default;
};

// Canonical order: direction of `point` from `last` (E, NE, ..., SE), then
// partner lists lexicographically.
bool canonical_less(Point last, const StabilizationChoice& a, const StabilizationChoice& b);

// Every one-bead elongation of `c` by `bead`: each free neighbour of the
// last point paired with each subset of the eligible bonds that keeps the
// arity within `arity_cap`. Canonically ordered.
std::vector<StabilizationChoice> elongations(const Conformation& c, const BeadType& bead,
                                             const RuleSet& rules, int arity_cap);

struct Minimizers
{
    std::vector<StabilizationChoice> choices;   // canonically ordered
    int score = 0;                              // best lookahead energy; 0 if empty
};

// The argmin set for stabilizing transcript[stabilized], where `current`
// is the seed elongated by the first `stabilized` transcript beads. Each
// candidate is scored by the lowest energy reachable with up to delay - 1
// further nascent beads, truncated at the end of the transcript.
Minimizers minimizers(const OritatamiSystem& sys, const Conformation& current, std::size_t stabilized);

// As minimizers(), but throws DeadEnd when no placement exists.
std::vector<StabilizationChoice> stabilize_next(const OritatamiSystem& sys, const Conformation& current,
                                                std::size_t stabilized);

enum class FoldMode { enumerate, sample, first };

struct FoldOptions
{
    FoldMode mode = FoldMode::first;
    std::uint64_t rng_seed = 0;
    std::size_t branch_budget = 10000;
};

struct FoldOutcome
{
    Conformation conformation;
    bool completed = false;          // false: stopped at a dead end
    std::size_t stabilized = 0;      // transcript beads placed
    bool deterministic = true;       // every step on this branch had at most one minimizer

    bool operator==(const FoldOutcome&) const = default;
};

// Folds the transcript on the seed. Enumerate mode returns every distinct
// terminal conformation and throws BranchBudgetExceeded past the budget;
// the other modes return exactly one outcome.
std::vector<FoldOutcome> fold_all(const OritatamiSystem& sys, const FoldOptions& options = {});

// True iff no stabilization step has two or more minimizers.
bool is_deterministic_run(const OritatamiSystem& sys);

// True iff some period p with 2p <= |w| satisfies w[i] == w[i + p].
bool transcript_is_cyclic(const std::vector<BeadType>& transcript);

} // namespace oritatami
