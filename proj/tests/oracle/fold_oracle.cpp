#include "fold_oracle.hpp"

#include <algorithm>
#include <limits>

namespace oracle {

namespace {

using oritatami::BeadType;
using oritatami::Point;

constexpr int dx[6] = { 1, 0, -1, -1, 0, 1 };
constexpr int dy[6] = { 0, 1, 1, 0, -1, -1 };

bool touching(Point a, Point b)
{
    for (int d = 0; d < 6; ++d)
        if (a.x + dx[d] == b.x && a.y + dy[d] == b.y)
            return true;
    return false;
}

struct Chain
{
    std::vector<Point> points;
    std::vector<BeadType> beads;
    std::vector<int> degree;
    int bonds = 0;
};

struct Search
{
    const oritatami::OritatamiSystem& sys;

    bool allowed(const BeadType& a, const BeadType& b) const
    {
        for (const auto& [p, q] : sys.rules.pairs())
            if ((p == a && q == b) || (p == b && q == a))
                return true;
        return false;
    }

    bool occupied(const Chain& c, Point p) const
    {
        return std::find(c.points.begin(), c.points.end(), p) != c.points.end();
    }

    // Every (point, partner subset) for appending `bead`.
    std::vector<Choice> moves(const Chain& c, const BeadType& bead) const
    {
        std::vector<Choice> out;
        const Point last = c.points.back();
        const std::size_t j = c.points.size();
        for (int d = 0; d < 6; ++d) {
            const Point p{ last.x + dx[d], last.y + dy[d] };
            if (occupied(c, p))
                continue;
            std::vector<std::size_t> candidates;
            for (std::size_t i = 0; i + 2 <= j; ++i)
                if (touching(c.points[i], p) && allowed(c.beads[i], bead) && c.degree[i] < sys.arity)
                    candidates.push_back(i);
            const std::size_t subsets = std::size_t{ 1 } << candidates.size();
            for (std::size_t mask = 0; mask < subsets; ++mask) {
                std::vector<std::size_t> partners;
                for (std::size_t k = 0; k < candidates.size(); ++k)
                    if (mask >> k & 1U)
                        partners.push_back(candidates[k]);
                if (static_cast<int>(partners.size()) <= sys.arity)
                    out.emplace_back(p, std::move(partners));
            }
        }
        return out;
    }

    Chain extend(const Chain& c, const BeadType& bead, const Choice& move) const
    {
        Chain next = c;
        next.points.push_back(move.first);
        next.beads.push_back(bead);
        next.degree.push_back(static_cast<int>(move.second.size()));
        for (auto i : move.second)
            ++next.degree[i];
        next.bonds += static_cast<int>(move.second.size());
        return next;
    }

    // Lowest energy over this chain and every elongation by the next
    // `remaining` transcript beads starting at `index`.
    int best(const Chain& c, std::size_t index, int remaining) const
    {
        int value = -c.bonds;
        if (remaining == 0 || index >= sys.transcript.size())
            return value;
        for (const auto& m : moves(c, sys.transcript[index]))
            value = std::min(value, best(extend(c, sys.transcript[index], m), index + 1, remaining - 1));
        return value;
    }
};

} // namespace

Result stabilize(const oritatami::OritatamiSystem& sys, const oritatami::Conformation& current, std::size_t stabilized)
{
    Search search{ sys };
    Chain c;
    c.points = current.path();
    c.beads = current.beads();
    c.degree.assign(current.size(), 0);
    for (const auto& b : current.bonds()) {
        ++c.degree[b.first];
        ++c.degree[b.second];
        ++c.bonds;
    }

    Result result;
    int best_score = std::numeric_limits<int>::max();
    const BeadType& bead = sys.transcript[stabilized];
    for (const auto& m : search.moves(c, bead)) {
        const int score = search.best(search.extend(c, bead, m), stabilized + 1, sys.delay - 1);
        if (score < best_score) {
            best_score = score;
            result.choices.clear();
        }
        if (score == best_score)
            result.choices.insert(m);
    }
    result.score = result.choices.empty() ? 0 : best_score;
    return result;
}

} // namespace oracle
