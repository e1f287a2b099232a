#include "oritatami/brick_machine.hpp"

#include "oritatami/error.hpp"

#include <algorithm>
#include <map>

namespace oritatami::brick {

namespace {

// Height at which a brick starts or ends inside its height-3 zig or zag.
enum class Height { top, bottom };

Bit to_bit(char c)
{
    return c == '1' ? Bit::One : Bit::Zero;
}

char to_char(Bit b)
{
    switch (b) {
    case Bit::Zero: return '0';
    case Bit::One: return '1';
    case Bit::Dropped: break;
    }
    return '-';
}

// Zigzags folded by a module, for the period trace.
struct Tally
{
    std::size_t zigzags = 0;
};

void require_width(const BrickRow& row, const AugmentedNfa& nfa)
{
    if (row.x.size() != nfa.slot_count() || row.z.size() != nfa.slot_count())
        throw WidthMismatch("row has " + std::to_string(row.x.size()) + " slots, the machine has "
                            + std::to_string(nfa.slot_count()));
}

BrickRow run_module1(const BrickRow& row, const Encoding& code, const AugmentedNfa& nfa, Tally& tally)
{
    require_width(row, nfa);
    if (!row.is_period_boundary())
        throw InvalidInput("Module 1 expects a period-boundary row, got " + to_string(row));
    const std::size_t n = nfa.slot_count();
    BrickRow out = row;
    for (std::size_t k = 0; k < n; ++k) {
        const std::string& origin = code.code_of_state(nfa.transitions[k].origin);
        // Zig A' A_{o_k[1]} ... A' A_{o_k[n]}, starting at the bottom. An A
        // brick leaves the bottom on the first mismatching bit and a zig
        // that has reached the top stays there.
        Height h = Height::bottom;
        for (std::size_t j = 0; j < n; ++j)
            if (h == Height::bottom && to_bit(origin[j]) != row.z[j])
                h = Height::top;
        // The turner hands the height to the zag; B' sits under x_k and the
        // B bricks around it copy what they read.
        out.x[k] = h == Height::bottom ? Flag::Y : Flag::N;
        // The following formatting zigzag propagates every slot.
        tally.zigzags += 2;
    }
    return out;
}

BrickRow run_module2(const BrickRow& row, const Encoding& code, const AugmentedNfa& nfa, const Letter& letter,
                     Tally& tally)
{
    require_width(row, nfa);
    const std::string& bits = code.code_of_letter(letter);
    const std::size_t n = nfa.slot_count();
    BrickRow out = row;
    std::fill(out.z.begin(), out.z.end(), Bit::Dropped);
    for (std::size_t l = 0; l < bits.size(); ++l) {
        // The turner starts the zig at the top for a 0 bit, bottom for 1.
        const Height h = bits[l] == '0' ? Height::top : Height::bottom;
        for (std::size_t k = 0; k < n; ++k) {
            const std::string& read = code.code_of_letter(nfa.transitions[k].letter);
            // C_0 copies at the top and writes N at the bottom; C_1 the reverse.
            const bool copies = (read[l] == '0') == (h == Height::top);
            if (!copies)
                out.x[k] = Flag::N;
        }
        tally.zigzags += 2;
    }
    return out;
}

ChoiceOutcome mark_smallest(const BrickRow& row)
{
    // First zig: D bricks, starting at the bottom. D_-Yb marks Y' and
    // climbs to the top; at the top D copies.
    ChoiceOutcome outcome;
    outcome.marked = row;
    Height h = Height::bottom;
    for (auto& flag : outcome.marked.x) {
        if (h == Height::bottom && flag == Flag::Y) {
            flag = Flag::Marked;
            h = Height::top;
        } else if (flag == Flag::Marked) {
            throw InvalidInput("Module 3 input already carries a marked slot");
        }
    }
    // A zig ending at the bottom traps the turner.
    outcome.halted = h == Height::bottom;
    return outcome;
}

// Second zigzag of Module 3: spacers replace every other P_zig, so the z
// slots take the default brick and read 0.
void reset_state_bits(BrickRow& row)
{
    std::fill(row.z.begin(), row.z.end(), Bit::Zero);
}

// The zag of E bricks is transcribed right to left from the bottom. At the
// bottom an unmarked Y branches (YbY chosen, ends top; YbN skipped, stays
// bottom), a Y' is forced; at the top every E outputs N.
void enumerate_zag(const BrickRow& marked, std::size_t k, BrickRow& current, std::vector<ChoiceOutcome>& out)
{
    // Slots k-1, k-2, ..., 0 remain to be folded; everything to the right
    // of k-1 emitted N at the bottom.
    for (std::size_t s = k; s-- > 0;) {
        const Flag flag = marked.x[s];
        if (flag == Flag::N) {
            current.x[s] = Flag::N;
            continue;
        }
        auto choose = [&](BrickRow row) {
            row.x[s] = Flag::Y;
            for (std::size_t r = 0; r < s; ++r)
                row.x[r] = Flag::N;
            reset_state_bits(row);
            ChoiceOutcome o;
            o.marked = marked;
            o.row = std::move(row);
            o.chosen = s;
            out.push_back(std::move(o));
        };
        if (flag == Flag::Marked) {
            choose(current);
            return;
        }
        choose(current);
        current.x[s] = Flag::N;
    }
}

BrickRow run_module4(const BrickRow& row, const Encoding& code, const AugmentedNfa& nfa, Tally& tally)
{
    require_width(row, nfa);
    const auto chosen_count = std::count(row.x.begin(), row.x.end(), Flag::Y);
    const auto marked_count = std::count(row.x.begin(), row.x.end(), Flag::Marked);
    if (chosen_count != 1 || marked_count != 0)
        throw NoChoiceMarked("Module 4 expects exactly one Y, got " + to_string(row));
    if (std::any_of(row.z.begin(), row.z.end(), [](Bit b) { return b != Bit::Zero; }))
        throw InvalidInput("Module 4 expects every z to be 0, got " + to_string(row));

    const std::size_t n = nfa.slot_count();
    BrickRow out = row;
    for (std::size_t k = 0; k < n; ++k) {
        // Zig (A'A')^{k-1} A_1 A' (A'A')^{n-k}: the sole A_1 reads x_k and
        // stays at the bottom iff it reads Y.
        const Height h = row.x[k] == Flag::Y ? Height::bottom : Height::top;
        const std::string& target = code.code_of_state(nfa.transitions[k].target);
        // Zag, right to left: G_{t_k[j]} under each z_j copies at the top
        // and writes its own bit at the bottom; the extra G_0 under x_k
        // writes N either way.
        if (h == Height::bottom)
            for (std::size_t j = 0; j < n; ++j)
                out.z[j] = to_bit(target[j]);
        out.x[k] = Flag::N;
        tally.zigzags += 2;
    }
    return out;
}

} // namespace

bool BrickRow::is_period_boundary() const
{
    return x.size() == z.size() && std::all_of(x.begin(), x.end(), [](Flag f) { return f == Flag::N; })
           && std::none_of(z.begin(), z.end(), [](Bit b) { return b == Bit::Dropped; });
}

std::string BrickRow::z_bits() const
{
    std::string out;
    for (auto b : z) {
        if (b == Bit::Dropped)
            throw InvalidInput("row carries dropped state bits: " + to_string(*this));
        out += to_char(b);
    }
    return out;
}

BrickRow boundary_row(const std::string& state_code)
{
    BrickRow row;
    row.x.assign(state_code.size(), Flag::N);
    for (char c : state_code)
        row.z.push_back(to_bit(c));
    return row;
}

std::string to_string(const BrickRow& row)
{
    std::string out = "x=[";
    for (std::size_t i = 0; i < row.x.size(); ++i) {
        if (i)
            out += ',';
        switch (row.x[i]) {
        case Flag::N: out += 'N'; break;
        case Flag::Y: out += 'Y'; break;
        case Flag::Marked: out += "Y'"; break;
        }
    }
    out += "] z=[";
    for (std::size_t i = 0; i < row.z.size(); ++i) {
        if (i)
            out += ',';
        out += to_char(row.z[i]);
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& out, const BrickRow& row)
{
    return out << to_string(row);
}

std::size_t zigzags_per_period(std::size_t n, std::size_t m)
{
    return 2 * n + 2 * m + 2 + 2 * n;
}

BrickRow module1(const BrickRow& row, const Encoding& code, const AugmentedNfa& nfa)
{
    Tally tally;
    return run_module1(row, code, nfa, tally);
}

BrickRow module2(const BrickRow& row, const Encoding& code, const AugmentedNfa& nfa, const Letter& letter)
{
    Tally tally;
    return run_module2(row, code, nfa, letter, tally);
}

std::vector<ChoiceOutcome> module3_enumerate(const BrickRow& row)
{
    ChoiceOutcome marked = mark_smallest(row);
    if (marked.halted)
        return { marked };
    std::vector<ChoiceOutcome> out;
    BrickRow current = marked.marked;
    enumerate_zag(marked.marked, current.x.size(), current, out);
    return out;
}

ChoiceOutcome module3_sample(const BrickRow& row, std::mt19937_64& rng)
{
    ChoiceOutcome outcome = mark_smallest(row);
    if (outcome.halted)
        return outcome;
    std::bernoulli_distribution coin(0.5);
    BrickRow current = outcome.marked;
    bool decided = false;
    for (std::size_t s = current.x.size(); s-- > 0;) {
        const Flag flag = outcome.marked.x[s];
        if (decided || flag == Flag::N) {
            current.x[s] = Flag::N;
            continue;
        }
        if (flag == Flag::Marked || coin(rng)) {
            current.x[s] = Flag::Y;
            outcome.chosen = s;
            decided = true;
        } else {
            current.x[s] = Flag::N;
        }
    }
    reset_state_bits(current);
    outcome.row = std::move(current);
    return outcome;
}

BrickRow module4(const BrickRow& row, const Encoding& code, const AugmentedNfa& nfa)
{
    Tally tally;
    return run_module4(row, code, nfa, tally);
}

bool RunResult::accepted() const
{
    return surviving() > 0;
}

std::size_t RunResult::surviving() const
{
    return static_cast<std::size_t>(
            std::count_if(branches.begin(), branches.end(), [](const RunOutcome& o) { return o.accepted; }));
}

namespace {

struct Runner
{
    const AugmentedNfa& nfa;
    const Encoding& code;
    const Word& letters;     // w followed by $
    const RunOptions& options;
    std::mt19937_64 rng;
    std::vector<RunOutcome> done;

    // Runs Modules 1 and 2 of the period and returns the row for Module 3.
    BrickRow filter(const BrickRow& row, PeriodTrace& trace)
    {
        Tally tally;
        BrickRow after1 = run_module1(row, code, nfa, tally);
        trace.rows.push_back(after1);
        BrickRow after2 = run_module2(after1, code, nfa, trace.letter, tally);
        trace.rows.push_back(after2);
        trace.zigzags = tally.zigzags;
        return after2;
    }

    void finish_choice(RunOutcome branch, PeriodTrace trace, const ChoiceOutcome& choice, std::size_t period)
    {
        trace.marked = choice.marked;
        const std::size_t n = nfa.slot_count();
        if (choice.halted) {
            trace.cells = trace.zigzags * 2 * n;
            branch.periods.push_back(std::move(trace));
            branch.halt_period = period + 1;
            branch.accepted = false;
            emit(std::move(branch));
            return;
        }
        trace.chosen = choice.chosen;
        trace.rows.push_back(choice.row);
        Tally tally;
        BrickRow after4 = run_module4(choice.row, code, nfa, tally);
        trace.rows.push_back(after4);
        trace.zigzags += 2 + tally.zigzags;
        trace.cells = trace.zigzags * 2 * n;
        branch.periods.push_back(std::move(trace));
        const auto next_state = code.state_for(after4.z_bits());
        branch.states.push_back(next_state ? *next_state : after4.z_bits());
        advance(std::move(branch), after4, period + 1);
    }

    void advance(RunOutcome branch, const BrickRow& row, std::size_t period)
    {
        if (period == letters.size()) {
            branch.accepted = true;
            emit(std::move(branch));
            return;
        }
        PeriodTrace trace;
        trace.letter = letters[period];
        const BrickRow filtered = filter(row, trace);
        if (options.mode == RunMode::sample) {
            finish_choice(std::move(branch), std::move(trace), module3_sample(filtered, rng), period);
            return;
        }
        for (const auto& choice : module3_enumerate(filtered))
            finish_choice(branch, trace, choice, period);
    }

    void emit(RunOutcome branch)
    {
        if (done.size() >= options.branch_budget)
            throw BranchBudgetExceeded("more than " + std::to_string(options.branch_budget) + " run branches");
        done.push_back(std::move(branch));
    }
};

} // namespace

RunResult run_word(const AugmentedNfa& nfa, const Encoding& code, const Word& word, const RunOptions& options)
{
    Word letters = word;
    letters.emplace_back(dollar);
    for (const auto& letter : letters)
        (void)code.code_of_letter(letter);   // throws LetterNotEncoded up front

    Runner runner{ nfa, code, letters, options, std::mt19937_64(options.rng_seed), {} };
    RunOutcome start;
    start.states.push_back(nfa.initial);
    runner.advance(std::move(start), boundary_row(code.code_of_state(nfa.initial)), 0);

    RunResult result;
    result.branches = std::move(runner.done);
    result.steps = step_count(nfa, code, word.size());
    return result;
}

std::uint64_t step_count(std::size_t n, std::size_t m, std::size_t word_length)
{
    return static_cast<std::uint64_t>(word_length + 1) * zigzags_per_period(n, m) * (2 * n);
}

std::uint64_t step_count(const AugmentedNfa& nfa, const Encoding& code, std::size_t word_length)
{
    return step_count(nfa.slot_count(), code.letter_bits, word_length);
}

void write_report(std::ostream& out, const RunResult& result, const Word& word)
{
    const char* module_names[] = { "module1", "module2", "module3", "module4" };
    const std::size_t periods = word.size() + 1;

    // Branch prefixes alive in each period: distinct choice sequences.
    for (std::size_t p = 0; p < periods; ++p) {
        std::map<std::vector<long>, bool> prefixes;
        for (const auto& branch : result.branches) {
            if (branch.periods.size() <= p)
                continue;
            std::vector<long> key;
            for (std::size_t q = 0; q <= p; ++q) {
                const auto& c = branch.periods[q].chosen;
                key.push_back(c ? static_cast<long>(*c) : -1);
            }
            prefixes[key] = !branch.periods[p].chosen.has_value();
        }
        const auto halted = std::count_if(prefixes.begin(), prefixes.end(), [](const auto& kv) { return kv.second; });
        out << "period " << p + 1 << ": " << prefixes.size() << " branches, " << halted << " halted\n";
    }

    for (std::size_t b = 0; b < result.branches.size(); ++b) {
        const auto& branch = result.branches[b];
        out << "branch " << b + 1 << ":";
        for (const auto& q : branch.states)
            out << ' ' << q;
        out << (branch.accepted ? " (survives)" : " (halts)") << '\n';
        for (std::size_t p = 0; p < branch.periods.size(); ++p) {
            const auto& trace = branch.periods[p];
            out << "  period " << p + 1 << " letter " << trace.letter << '\n';
            for (std::size_t m = 0; m < trace.rows.size(); ++m) {
                if (m == 2 && trace.marked)
                    out << "    module3 marked " << *trace.marked << '\n';
                out << "    " << module_names[m] << ' ' << trace.rows[m];
                if (m == 2 && trace.chosen)
                    out << " chosen f" << *trace.chosen + 1;
                out << '\n';
            }
            if (!trace.chosen) {
                if (trace.marked)
                    out << "    module3 marked " << *trace.marked << '\n';
                out << "    module3 HALT\n";
            }
        }
    }
    if (result.accepted()) {
        out << "ACCEPT\n";
    } else {
        std::size_t last_halt = 0;
        for (const auto& branch : result.branches)
            if (branch.halt_period)
                last_halt = std::max(last_halt, *branch.halt_period);
        out << "REJECT (all branches halted; last halt in period " << last_halt << ")\n";
    }
    out << "branches " << result.branches.size() << " surviving " << result.surviving() << '\n';
    out << "steps " << result.steps << '\n';
}

} // namespace oritatami::brick
