#include "oritatami/fold_engine.hpp"

#include "oritatami/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <unordered_map>

namespace oritatami {

void OritatamiSystem::validate() const
{
    if (arity < 1)
        throw InvalidInput("arity must be at least 1");
    if (delay < 1)
        throw InvalidInput("delay must be at least 1");
    if (seed.empty())
        throw InvalidInput("seed must contain at least one bead");
    seed.validate(rules, arity);
}

bool canonical_less(Point last, const StabilizationChoice& a, const StabilizationChoice& b)
{
    const auto da = direction_between(last, a.point);
    const auto db = direction_between(last, b.point);
    const int ia = da ? index_of(*da) : 6;
    const int ib = db ? index_of(*db) : 6;
    if (ia != ib)
        return ia < ib;
    return a.partners < b.partners;
}

namespace {

// Mutable copy of a conformation with occupancy and degree bookkeeping,
// supporting push/pop for depth-first lookahead.
class Workspace
{
public:
    Workspace(const Conformation& c, const RuleSet& rules, int arity)
            : rules_{ rules }, arity_{ arity }
    {
        path_ = c.path();
        beads_.reserve(c.size());
        for (const auto& b : c.beads())
            beads_.push_back(&b);
        degree_.assign(c.size(), 0);
        for (const auto& b : c.bonds()) {
            ++degree_[b.first];
            ++degree_[b.second];
        }
        bond_count_ = static_cast<int>(c.bonds().size());
        occupied_.reserve(c.size() * 2 + 16);
        for (std::size_t i = 0; i < path_.size(); ++i)
            occupied_.emplace(path_[i], i);
    }

    [[nodiscard]] int bond_count() const { return bond_count_; }
    [[nodiscard]] Point last() const { return path_.back(); }
    [[nodiscard]] bool is_free(Point p) const { return occupied_.find(p) == occupied_.end(); }

    // Partners a bead of type `bead` placed at `p` may bond with: not the
    // current last bead, adjacent, licensed by the rules, and below the cap.
    [[nodiscard]] std::vector<std::size_t> eligible(Point p, const BeadType& bead) const
    {
        std::vector<std::size_t> out;
        const std::size_t last_index = path_.size() - 1;
        for (auto q : neighbors(p)) {
            auto it = occupied_.find(q);
            if (it == occupied_.end() || it->second == last_index)
                continue;
            const std::size_t i = it->second;
            if (degree_[i] < arity_ && rules_.allows(*beads_[i], bead))
                out.push_back(i);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void push(Point p, const BeadType& bead, const std::vector<std::size_t>& partners)
    {
        occupied_.emplace(p, path_.size());
        path_.push_back(p);
        beads_.push_back(&bead);
        degree_.push_back(static_cast<int>(partners.size()));
        for (auto q : partners)
            ++degree_[q];
        bond_count_ += static_cast<int>(partners.size());
    }

    void pop(const std::vector<std::size_t>& partners)
    {
        for (auto q : partners)
            --degree_[q];
        bond_count_ -= static_cast<int>(partners.size());
        occupied_.erase(path_.back());
        path_.pop_back();
        beads_.pop_back();
        degree_.pop_back();
    }

    [[nodiscard]] int arity() const { return arity_; }

private:
    const RuleSet& rules_;
    int arity_;
    GridPath path_;
    std::vector<const BeadType*> beads_;
    std::vector<int> degree_;
    std::unordered_map<Point, std::size_t, PointHash> occupied_;
    int bond_count_ = 0;
};

// Subsets of `eligible` with at most `cap` members, each as an ascending list.
std::vector<std::vector<std::size_t>> bond_subsets(const std::vector<std::size_t>& eligible, int cap)
{
    std::vector<std::vector<std::size_t>> out;
    const unsigned count = static_cast<unsigned>(eligible.size());
    for (unsigned mask = 0; mask < (1u << count); ++mask) {
        if (std::popcount(mask) > cap)
            continue;
        std::vector<std::size_t> subset;
        for (unsigned b = 0; b < count; ++b)
            if (mask & (1u << b))
                subset.push_back(eligible[b]);
        out.push_back(std::move(subset));
    }
    return out;
}

// Lowest energy over all elongations of the workspace by
// transcript[next .. next + depth - 1], including every shorter prefix.
int lookahead_energy(Workspace& ws, const std::vector<BeadType>& transcript, std::size_t next, int depth)
{
    int best = -ws.bond_count();
    if (depth == 0 || next >= transcript.size())
        return best;
    const BeadType& bead = transcript[next];
    for (auto p : neighbors(ws.last())) {
        if (!ws.is_free(p))
            continue;
        const auto eligible = ws.eligible(p, bead);
        if (depth == 1) {
            // At the last level the best subset is simply the largest one.
            const int gain = std::min(ws.arity(), static_cast<int>(eligible.size()));
            best = std::min(best, -(ws.bond_count() + gain));
            continue;
        }
        for (const auto& subset : bond_subsets(eligible, ws.arity())) {
            ws.push(p, bead, subset);
            best = std::min(best, lookahead_energy(ws, transcript, next + 1, depth - 1));
            ws.pop(subset);
        }
    }
    return best;
}

} // namespace

std::vector<StabilizationChoice> elongations(const Conformation& c, const BeadType& bead,
                                             const RuleSet& rules, int arity_cap)
{
    std::vector<StabilizationChoice> out;
    if (c.empty())
        return out;
    Workspace ws(c, rules, arity_cap);
    for (auto p : neighbors(ws.last())) {
        if (!ws.is_free(p))
            continue;
        for (auto& subset : bond_subsets(ws.eligible(p, bead), arity_cap))
            out.push_back({ p, std::move(subset) });
    }
    const Point last = ws.last();
    std::sort(out.begin(), out.end(),
              [last](const auto& a, const auto& b) { return canonical_less(last, a, b); });
    return out;
}

Minimizers minimizers(const OritatamiSystem& sys, const Conformation& current, std::size_t stabilized)
{
    Minimizers result;
    if (stabilized >= sys.transcript.size() || current.empty())
        return result;
    Workspace ws(current, sys.rules, sys.arity);
    const BeadType& bead = sys.transcript[stabilized];
    int best = std::numeric_limits<int>::max();
    for (auto p : neighbors(ws.last())) {
        if (!ws.is_free(p))
            continue;
        for (auto& subset : bond_subsets(ws.eligible(p, bead), sys.arity)) {
            ws.push(p, bead, subset);
            const int score = lookahead_energy(ws, sys.transcript, stabilized + 1, sys.delay - 1);
            ws.pop(subset);
            if (score < best) {
                best = score;
                result.choices.clear();
            }
            if (score == best)
                result.choices.push_back({ p, std::move(subset) });
        }
    }
    if (!result.choices.empty())
        result.score = best;
    const Point last = current.path().back();
    std::sort(result.choices.begin(), result.choices.end(),
              [last](const auto& a, const auto& b) { return canonical_less(last, a, b); });
    return result;
}

std::vector<StabilizationChoice> stabilize_next(const OritatamiSystem& sys, const Conformation& current,
                                                std::size_t stabilized)
{
    auto result = minimizers(sys, current, stabilized);
    if (result.choices.empty())
        throw DeadEnd("no placement for transcript bead " + std::to_string(stabilized + 1));
    return std::move(result.choices);
}

namespace {

Conformation apply(const Conformation& c, const BeadType& bead, const StabilizationChoice& choice)
{
    Conformation next = c;
    next.append(choice.point, bead, choice.partners);
    return next;
}

void enumerate_branches(const OritatamiSystem& sys, const Conformation& current, std::size_t stabilized,
                        bool deterministic, std::size_t budget, std::vector<FoldOutcome>& out)
{
    if (stabilized == sys.transcript.size()) {
        if (out.size() >= budget)
            throw BranchBudgetExceeded("more than " + std::to_string(budget) + " terminal branches");
        out.push_back({ current, true, stabilized, deterministic });
        return;
    }
    auto mins = minimizers(sys, current, stabilized);
    if (mins.choices.empty()) {
        if (out.size() >= budget)
            throw BranchBudgetExceeded("more than " + std::to_string(budget) + " terminal branches");
        out.push_back({ current, false, stabilized, deterministic });
        return;
    }
    const bool still_deterministic = deterministic && mins.choices.size() == 1;
    for (const auto& choice : mins.choices)
        enumerate_branches(sys, apply(current, sys.transcript[stabilized], choice), stabilized + 1,
                           still_deterministic, budget, out);
}

} // namespace

std::vector<FoldOutcome> fold_all(const OritatamiSystem& sys, const FoldOptions& options)
{
    sys.validate();
    std::vector<FoldOutcome> out;
    if (options.mode == FoldMode::enumerate) {
        enumerate_branches(sys, sys.seed, 0, true, options.branch_budget, out);
        return out;
    }

    std::mt19937_64 rng(options.rng_seed);
    FoldOutcome outcome{ sys.seed, false, 0, true };
    while (outcome.stabilized < sys.transcript.size()) {
        auto mins = minimizers(sys, outcome.conformation, outcome.stabilized);
        if (mins.choices.empty())
            break;
        if (mins.choices.size() > 1)
            outcome.deterministic = false;
        std::size_t pick = 0;
        if (options.mode == FoldMode::sample) {
            std::uniform_int_distribution<std::size_t> dist(0, mins.choices.size() - 1);
            pick = dist(rng);
        }
        const auto& choice = mins.choices[pick];
        outcome.conformation.append(choice.point, sys.transcript[outcome.stabilized], choice.partners);
        ++outcome.stabilized;
    }
    outcome.completed = outcome.stabilized == sys.transcript.size();
    out.push_back(std::move(outcome));
    return out;
}

bool is_deterministic_run(const OritatamiSystem& sys)
{
    // Until the first step with two minimizers there is only one branch, so
    // following it is enough.
    FoldOptions options;
    options.mode = FoldMode::first;
    return fold_all(sys, options).front().deterministic;
}

bool transcript_is_cyclic(const std::vector<BeadType>& transcript)
{
    const std::size_t n = transcript.size();
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        bool periodic = true;
        for (std::size_t i = 0; i + p < n && periodic; ++i)
            periodic = transcript[i] == transcript[i + p];
        if (periodic)
            return true;
    }
    return false;
}

} // namespace oritatami
