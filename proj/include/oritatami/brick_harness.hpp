#pragma once

#include "oritatami/conformation.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

// Folds bead-level submodule fragments inside declared environments,
// classifies each result as a brick and checks that the environments the
// bricks lead to form a closed automaton.
namespace oritatami::harness {

enum class Height { T, B };

char height_char(Height h);
std::optional<Height> parse_height(const std::string& token);

struct Environment
{
    std::string name;
    Conformation surrounding;            // already stabilized beads
    Height entry = Height::T;
    std::string input;                   // 0, 1, N, Y or empty
    std::string submodule;
};

// A brick the submodule is expected to produce.
struct BrickSpec
{
    Height entry = Height::T;
    std::optional<std::string> input;    // nullopt matches any input
    Height exit = Height::T;
    std::vector<BeadType> exposed;
};

struct Submodule
{
    std::string name;
    RuleSet rules;
    int delay = 1;
    int arity = 1;
    std::vector<BeadType> fragment;
    std::vector<BrickSpec> bricks;
};

struct Brick
{
    std::string name;                    // <submodule>_-<h><y>
    std::string submodule;
    Height entry = Height::T;
    std::string input;
    Conformation folded;                 // surrounding plus fragment
    std::size_t fragment_begin = 0;
    Height exit = Height::T;
    std::vector<BeadType> exposed;

    // Fragment path moved so that its first bead sits at the origin.
    [[nodiscard]] GridPath shape() const;
};

// Equal exit height, exposed beads and fragment shape up to translation.
bool same_brick(const Brick& a, const Brick& b);

std::string brick_name(const std::string& submodule, Height entry, const std::string& input);

// The fragment occupies a height-3 band fixed by its first bead: that bead
// sits on the top row for entry T and on the bottom row for entry B. The
// exit height is the row of the last bead, and the exposed beads are the
// fragment beads on the bottom row, by decreasing x.
//
// Throws InvalidInput if the surrounding conformation is not R-valid,
// NondeterministicBrick if any step has several minimizers, and
// UnexpectedFold if the fold dead-ends, leaves its band, ends mid-band or
// matches no declared brick.
Brick fold_in_environment(const Submodule& sub, const Environment& env);

struct Edge
{
    std::string from;
    Height label = Height::T;
    std::string to;
    std::string brick;

    bool operator==(const Edge&) const = default;
};

struct Failure
{
    std::string environment;
    std::string message;
};

struct BrickAutomaton
{
    std::vector<std::string> environments;   // in discovery order
    std::vector<Edge> edges;
    std::vector<Brick> bricks;               // one per folded environment
    std::vector<Failure> failures;

    [[nodiscard]] bool closed() const { return failures.empty(); }
};

struct Definitions
{
    std::vector<Submodule> submodules;
    std::vector<Environment> environments;

    [[nodiscard]] const Submodule& submodule(const std::string& name) const;
    [[nodiscard]] const Environment& environment(const std::string& name) const;
};

// The declared environment, with entry equal to the brick's exit, whose
// surrounding conformation matches the tail of the folded conformation up to
// translation (points, beads and the bonds inside the tail). The longest
// match wins, then declaration order. Throws ClosureViolation if none does.
const Environment& successor(const Definitions& defs, const Brick& brick);

// Breadth-first from `start`. Unclassified folds are recorded as failures
// and not expanded; an undeclared successor throws ClosureViolation.
BrickAutomaton explore_closure(const Definitions& defs, const std::vector<std::string>& start);

// Submodule stanzas:
//   submodule <name>
//     delay <int> / arity <int> / rule <a> <b> / transcript <bead>...
//     repeat <count> <bead>...
//     brick <T|B> <input|*> exit <T|B> expose <bead>...
//   end
std::vector<Submodule> parse_submodules(std::istream& in);

// Environment stanzas:
//   environment <name>
//     submodule <name> / entry <T|B> / input <0|1|N|Y>
//     seed <x> <y> <bead> / seedbond <i> <j>
//   end
std::vector<Environment> parse_environments(std::istream& in);

Definitions load_definitions(const std::string& defs_path, const std::string& catalog_path);

// `envA -T-> envB` lines, then a dot listing.
void write_automaton(std::ostream& out, const BrickAutomaton& automaton);

} // namespace oritatami::harness
