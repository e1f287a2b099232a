#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oritatami {

using State = std::string;
using Letter = std::string;
using Word = std::vector<Letter>;

// f_k = (origin, letter, target)
struct Transition
{
    State origin;
    Letter letter;
    State target;

    auto operator<=>(const Transition&) const = default;
};

struct Nfa
{
    std::vector<State> states;
    std::vector<Letter> alphabet;
    State initial;
    std::vector<State> accepting;
    std::vector<Transition> transitions;     // order is the f-index order

    // Throws InvalidInput on unknown states/letters, duplicates, or use of
    // the reserved letter "$".
    void validate() const;
};

inline constexpr const char* dollar = "$";

// A_$: one extra accepting sink state, the letter "$", and a $-transition
// into the sink from every accepting state.
struct AugmentedNfa
{
    std::vector<State> states;           // original states, then the sink
    std::vector<Letter> alphabet;        // original letters, then "$"
    State initial;
    State sink;
    std::vector<Transition> transitions;

    [[nodiscard]] std::size_t slot_count() const { return transitions.size(); }
};

// Position of each transition of A_$ in the augmented order: either an
// original transition (by 0-based index) or the $-transition leaving an
// accepting state.
struct SlotRef
{
    std::optional<std::size_t> original;
    State dollar_from;
};

// Builds A_$. Original transitions keep their positions and $-transitions
// are appended in accepting-state order unless `order` lists every slot
// explicitly. Throws InvalidInput if the NFA is already augmented, the sink
// name collides, or the result has no transitions.
AugmentedNfa augment(const Nfa& a, const std::string& sink_name = "qAcc",
                     const std::optional<std::vector<SlotRef>>& order = std::nullopt);

struct Encoding
{
    std::map<State, std::string> state_code;
    std::map<Letter, std::string> letter_code;
    std::size_t state_bits = 0;      // n, the number of transitions
    std::size_t letter_bits = 0;     // m

    [[nodiscard]] const std::string& code_of_state(const State& q) const;
    [[nodiscard]] const std::string& code_of_letter(const Letter& a) const;   // throws LetterNotEncoded
    [[nodiscard]] std::optional<State> state_for(const std::string& bits) const;
    [[nodiscard]] std::optional<Letter> letter_for(const std::string& bits) const;
};

struct CodeOverrides
{
    std::map<State, std::string> states;
    std::map<Letter, std::string> letters;
};

// Width-n state codes and width-m letter codes, m = ceil(log2(|Sigma|+1))
// unless overrides fix a wider m. Codes not overridden count upward in
// declaration order, skipping values already taken. Throws EncodingClash.
Encoding assign_codes(const AugmentedNfa& a, const CodeOverrides& overrides = {});

std::size_t bits_needed(std::size_t symbols);

// Breadth-first state-set propagation. The augmented overload reads the
// word as given, so callers append the $ themselves.
bool oracle_accepts(const Nfa& a, const Word& word);
bool oracle_accepts(const AugmentedNfa& a, const Word& word);

// Everything an NFA file declares.
struct NfaDocument
{
    Nfa nfa;
    std::string sink = "qAcc";
    std::optional<std::vector<SlotRef>> order;
    CodeOverrides overrides;
};

// states:, alphabet:, initial:, accept:, trans: <o> <a> <t>, statecode:,
// lettercode:, plus sink: <name> and order: <slot>... where a slot is f<k>
// (k-th trans line) or $<state>. Throws ParseError.
NfaDocument parse_nfa(std::istream& in);
NfaDocument load_nfa(const std::string& path);

// Splits a word given on the command line. Separators (space or comma) are
// honoured; otherwise letters are matched greedily, longest first.
Word split_word(const std::string& text, const std::vector<Letter>& alphabet);

std::string join_word(const Word& word, const std::string& separator = " ");

} // namespace oritatami
