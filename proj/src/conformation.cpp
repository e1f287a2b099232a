#include "oritatami/conformation.hpp"

#include "oritatami/error.hpp"

#include <algorithm>

namespace oritatami {

RuleSet::RuleSet(std::initializer_list<std::pair<BeadType, BeadType>> pairs)
{
    for (const auto& [a, b] : pairs)
        add(a, b);
}

void RuleSet::add(const BeadType& a, const BeadType& b)
{
    pairs_.insert(std::minmax(a, b));
}

bool RuleSet::remove(const BeadType& a, const BeadType& b)
{
    return pairs_.erase(std::minmax(a, b)) > 0;
}

bool RuleSet::allows(const BeadType& a, const BeadType& b) const
{
    if (pairs_.empty())
        return false;
    return pairs_.count(std::minmax(a, b)) > 0;
}

Bond make_bond(std::size_t i, std::size_t j)
{
    return i < j ? Bond{ i, j } : Bond{ j, i };
}

Conformation::Conformation(GridPath path, std::vector<BeadType> beads, std::set<Bond> bonds)
        : path_{ std::move(path) }, beads_{ std::move(beads) }, bonds_{ std::move(bonds) }
{
    if (path_.size() != beads_.size())
        throw InvalidInput("conformation has " + std::to_string(path_.size()) + " points but "
                           + std::to_string(beads_.size()) + " beads");
}

void Conformation::append(Point p, BeadType bead, const std::vector<std::size_t>& partners)
{
    path_.push_back(p);
    beads_.push_back(std::move(bead));
    const std::size_t last = path_.size() - 1;
    for (auto q : partners)
        bonds_.insert(make_bond(q, last));
}

void Conformation::add_bond(std::size_t i, std::size_t j)
{
    bonds_.insert(make_bond(i, j));
}

std::vector<std::size_t> Conformation::partners_of(std::size_t i) const
{
    std::vector<std::size_t> out;
    for (const auto& b : bonds_) {
        if (b.first == i)
            out.push_back(b.second);
        else if (b.second == i)
            out.push_back(b.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string describe(const Bond& b)
{
    return "{" + std::to_string(b.first + 1) + "," + std::to_string(b.second + 1) + "}";
}

std::string first_defect(const Conformation& c)
{
    if (!path_is_valid(c.path()))
        return "path is not a self-avoiding walk on the grid";
    for (const auto& b : c.bonds()) {
        if (b.second >= c.size())
            return "bond " + describe(b) + " refers past the end of the path";
        if (b.first + 2 > b.second)
            return "bond " + describe(b) + " joins beads that are consecutive or equal";
        if (!adjacent(c.path()[b.first], c.path()[b.second]))
            return "bond " + describe(b) + " joins beads that are not at unit distance";
    }
    return {};
}

} // namespace

bool Conformation::is_well_formed() const
{
    return first_defect(*this).empty();
}

bool Conformation::is_r_valid(const RuleSet& rules) const
{
    return std::all_of(bonds_.begin(), bonds_.end(), [&](const Bond& b) {
        return rules.allows(beads_[b.first], beads_[b.second]);
    });
}

void Conformation::validate(const RuleSet& rules, int arity_cap) const
{
    if (auto defect = first_defect(*this); !defect.empty())
        throw InvalidInput(defect);
    for (const auto& b : bonds_)
        if (!rules.allows(beads_[b.first], beads_[b.second]))
            throw InvalidInput("bond " + describe(b) + " between " + beads_[b.first] + " and "
                               + beads_[b.second] + " is not in the rule set");
    if (int a = arity_of(*this); a > arity_cap)
        throw InvalidInput("conformation has arity " + std::to_string(a) + " above the cap "
                           + std::to_string(arity_cap));
}

int energy(const Conformation& c)
{
    return -static_cast<int>(c.bonds().size());
}

int arity_of(const Conformation& c)
{
    std::vector<int> count(c.size(), 0);
    for (const auto& b : c.bonds()) {
        if (b.first < count.size())
            ++count[b.first];
        if (b.second < count.size())
            ++count[b.second];
    }
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

Conformation translated(const Conformation& c, Point delta)
{
    GridPath path = c.path();
    for (auto& p : path)
        p = p + delta;
    return Conformation(std::move(path), c.beads(), c.bonds());
}

Conformation mirrored(const Conformation& c)
{
    GridPath path = c.path();
    for (auto& p : path)
        p = mirror_vertically(p);
    return Conformation(std::move(path), c.beads(), c.bonds());
}

} // namespace oritatami
