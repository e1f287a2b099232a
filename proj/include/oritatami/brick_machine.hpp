#pragma once

#include "oritatami/nfa.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

// Brick-level execution of the NFA architecture. One period reads one
// letter and runs four modules, each a parallelogram of zigzags whose
// interface is a row of n (x, z) slot pairs: x carries whether transition
// f_k is still a candidate, z carries one bit of the current state.
namespace oritatami::brick {

enum class Flag : std::uint8_t { N, Y, Marked };   // Marked is Y'
enum class Bit : std::uint8_t { Zero, One, Dropped };

struct BrickRow
{
    std::vector<Flag> x;
    std::vector<Bit> z;

    bool operator==(const BrickRow&) const = default;

    [[nodiscard]] std::size_t width() const { return x.size(); }

    // All x = N and all z in {0,1}.
    [[nodiscard]] bool is_period_boundary() const;
    [[nodiscard]] std::string z_bits() const;          // throws if a z is dropped
};

// Period-boundary row for a state code.
BrickRow boundary_row(const std::string& state_code);

// `x=[N,Y',N,Y] z=[0,0,0,0]`, with a dropped bit shown as '-'.
std::string to_string(const BrickRow& row);
std::ostream& operator<<(std::ostream& out, const BrickRow& row);

// Number of zigzags a completed period folds: 2n + 2m + 2 + 2n.
std::size_t zigzags_per_period(std::size_t n, std::size_t m);

// Module 1: x_k = Y iff the origin of f_k has the code held in z.
BrickRow module1(const BrickRow& row, const Encoding& code, const AugmentedNfa& nfa);

// Module 2: keeps x_k = Y only where f_k reads `letter`; z bits are dropped.
BrickRow module2(const BrickRow& row, const Encoding& code, const AugmentedNfa& nfa, const Letter& letter);

struct ChoiceOutcome
{
    bool halted = false;
    BrickRow marked;                     // after the first zig (smallest Y as Y')
    BrickRow row;                        // after the module; meaningless if halted
    std::optional<std::size_t> chosen;   // 0-based slot
};

// Module 3, every branch: HALT if no Y, else one outcome per valid slot.
std::vector<ChoiceOutcome> module3_enumerate(const BrickRow& row);

// Module 3 with a fair coin at every unmarked Y the zag meets.
ChoiceOutcome module3_sample(const BrickRow& row, std::mt19937_64& rng);

// Module 4: writes the target code of the chosen transition into z and
// resets every x to N. Throws NoChoiceMarked unless exactly one x is Y.
BrickRow module4(const BrickRow& row, const Encoding& code, const AugmentedNfa& nfa);

struct PeriodTrace
{
    Letter letter;
    std::vector<BrickRow> rows;          // after each module that completed
    std::optional<BrickRow> marked;      // Module 3 first zig
    std::optional<std::size_t> chosen;   // nullopt means HALT
    std::size_t zigzags = 0;
    std::size_t cells = 0;
};

struct RunOutcome
{
    bool accepted = false;
    std::vector<State> states;           // q0, q1, ... as reached
    std::vector<PeriodTrace> periods;
    std::optional<std::size_t> halt_period;   // 1-based
};

enum class RunMode { enumerate, sample };

struct RunOptions
{
    RunMode mode = RunMode::enumerate;
    std::uint64_t rng_seed = 0;
    std::size_t branch_budget = 100000;
};

struct RunResult
{
    std::vector<RunOutcome> branches;
    std::size_t steps = 0;

    [[nodiscard]] bool accepted() const;
    [[nodiscard]] std::size_t surviving() const;
};

// Runs every period of w$ from the boundary row of q0. Enumerate mode
// returns one outcome per distinct sequence of Module 3 choices.
RunResult run_word(const AugmentedNfa& nfa, const Encoding& code, const Word& word, const RunOptions& options = {});

// (t + 1) periods x (4n + 2m + 2) zigzags x 2n cells.
std::uint64_t step_count(const AugmentedNfa& nfa, const Encoding& code, std::size_t word_length);
std::uint64_t step_count(std::size_t n, std::size_t m, std::size_t word_length);

void write_report(std::ostream& out, const RunResult& result, const Word& word);

} // namespace oritatami::brick
