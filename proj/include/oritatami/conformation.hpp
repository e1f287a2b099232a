#pragma once

#include "oritatami/tri_grid.hpp"

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oritatami {

using BeadType = std::string;

// Symmetric relation on bead types. Pairs are stored normalized so that
// allows(a, b) == allows(b, a) holds by construction.
class RuleSet
{
public:
    RuleSet() = default;
    RuleSet(std::initializer_list<std::pair<BeadType, BeadType>> pairs);

    void add(const BeadType& a, const BeadType& b);
    bool remove(const BeadType& a, const BeadType& b);
    [[nodiscard]] bool allows(const BeadType& a, const BeadType& b) const;
    [[nodiscard]] std::size_t size() const { return pairs_.size(); }
    [[nodiscard]] bool empty() const { return pairs_.empty(); }
    [[nodiscard]] const std::set<std::pair<BeadType, BeadType>>& pairs() const { return pairs_; }

private:
    std::set<std::pair<BeadType, BeadType>> pairs_;
};

// An h-interaction between the beads at 0-based path indices first < second.
struct Bond
{
    std::size_t first = 0;
    std::size_t second = 0;

    auto operator<=>(const Bond&) const = default;
};

Bond make_bond(std::size_t i, std::size_t j);

// A directed path, the bead types placed along it, and the bond set.
// Indices are 0-based in memory; files and traces use 1-based indices.
class Conformation
{
public:
    Conformation() = default;
    Conformation(GridPath path, std::vector<BeadType> beads, std::set<Bond> bonds = {});

    [[nodiscard]] std::size_t size() const { return path_.size(); }
    [[nodiscard]] bool empty() const { return path_.empty(); }
    [[nodiscard]] const GridPath& path() const { return path_; }
    [[nodiscard]] const std::vector<BeadType>& beads() const { return beads_; }
    [[nodiscard]] const std::set<Bond>& bonds() const { return bonds_; }

    void append(Point p, BeadType bead, const std::vector<std::size_t>& partners = {});
    void add_bond(std::size_t i, std::size_t j);

    // Partners of bead i, ascending.
    [[nodiscard]] std::vector<std::size_t> partners_of(std::size_t i) const;

    // Throws InvalidInput naming the first violated invariant: path validity,
    // bond geometry (i + 2 <= j and unit distance), R-validity, arity.
    void validate(const RuleSet& rules, int arity_cap) const;

    // Path validity and bond geometry only.
    [[nodiscard]] bool is_well_formed() const;
    [[nodiscard]] bool is_r_valid(const RuleSet& rules) const;

    bool operator==(const Conformation&) const = default;

private:
    GridPath path_;
    std::vector<BeadType> beads_;
    std::set<Bond> bonds_;
};

// -(number of bonds)
int energy(const Conformation& c);

// Largest number of bonds incident to a single bead; 0 without bonds.
int arity_of(const Conformation& c);

// The same conformation with every point shifted by `delta`.
Conformation translated(const Conformation& c, Point delta);

// The same conformation reflected by mirror_vertically.
Conformation mirrored(const Conformation& c);

} // namespace oritatami
