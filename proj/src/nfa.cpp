#include "oritatami/nfa.hpp"

#include "oritatami/error.hpp"
#include "oritatami/system_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>

namespace oritatami {

namespace {

template <typename T>
bool contains(const std::vector<T>& v, const T& x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

template <typename T>
void require_unique(const std::vector<T>& v, const std::string& what)
{
    std::set<T> seen;
    for (const auto& x : v)
        if (!seen.insert(x).second)
            throw InvalidInput("duplicate " + what + " '" + x + "'");
}

std::string to_binary(std::size_t value, std::size_t width)
{
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i)
        if (value & (std::size_t{ 1 } << i))
            out[width - 1 - i] = '1';
    return out;
}

bool is_binary(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

} // namespace

void Nfa::validate() const
{
    require_unique(states, "state");
    require_unique(alphabet, "letter");
    if (contains(alphabet, Letter{ dollar }))
        throw InvalidInput("the letter '$' is reserved for the end marker");
    if (!contains(states, initial))
        throw InvalidInput("initial state '" + initial + "' is not declared");
    for (const auto& q : accepting)
        if (!contains(states, q))
            throw InvalidInput("accepting state '" + q + "' is not declared");
    require_unique(accepting, "accepting state");
    std::set<Transition> seen;
    for (const auto& t : transitions) {
        if (!contains(states, t.origin) || !contains(states, t.target))
            throw InvalidInput("transition uses an undeclared state: " + t.origin + " -> " + t.target);
        if (!contains(alphabet, t.letter))
            throw InvalidInput("transition reads the undeclared letter '" + t.letter + "'");
        if (!seen.insert(t).second)
            throw InvalidInput("duplicate transition " + t.origin + " " + t.letter + " " + t.target);
    }
}

AugmentedNfa augment(const Nfa& a, const std::string& sink_name, const std::optional<std::vector<SlotRef>>& order)
{
    a.validate();
    if (contains(a.states, sink_name))
        throw InvalidInput("sink name '" + sink_name + "' collides with a declared state");

    AugmentedNfa out;
    out.states = a.states;
    out.states.push_back(sink_name);
    out.alphabet = a.alphabet;
    out.alphabet.emplace_back(dollar);
    out.initial = a.initial;
    out.sink = sink_name;

    const auto dollar_transition = [&](const State& q) { return Transition{ q, dollar, sink_name }; };

    if (!order) {
        out.transitions = a.transitions;
        for (const auto& q : a.accepting)
            out.transitions.push_back(dollar_transition(q));
    } else {
        std::set<std::size_t> used_original;
        std::set<State> used_dollar;
        for (const auto& slot : *order) {
            if (slot.original) {
                if (*slot.original >= a.transitions.size() || !used_original.insert(*slot.original).second)
                    throw InvalidInput("order refers to transition f" + std::to_string(*slot.original + 1)
                                       + " twice or out of range");
                out.transitions.push_back(a.transitions[*slot.original]);
            } else {
                if (!contains(a.accepting, slot.dollar_from) || !used_dollar.insert(slot.dollar_from).second)
                    throw InvalidInput("order lists $" + slot.dollar_from
                                       + " twice or for a non-accepting state");
                out.transitions.push_back(dollar_transition(slot.dollar_from));
            }
        }
        if (used_original.size() != a.transitions.size() || used_dollar.size() != a.accepting.size())
            throw InvalidInput("order must list every transition and every $-transition exactly once");
    }
    if (out.transitions.empty())
        throw InvalidInput("the augmented automaton has no transitions; at least one slot is required");
    return out;
}

std::size_t bits_needed(std::size_t symbols)
{
    std::size_t bits = 0;
    while ((std::size_t{ 1 } << bits) < symbols)
        ++bits;
    return std::max<std::size_t>(bits, 1);
}

const std::string& Encoding::code_of_state(const State& q) const
{
    auto it = state_code.find(q);
    if (it == state_code.end())
        throw InvalidInput("state '" + q + "' has no code");
    return it->second;
}

const std::string& Encoding::code_of_letter(const Letter& a) const
{
    auto it = letter_code.find(a);
    if (it == letter_code.end())
        throw LetterNotEncoded("letter '" + a + "' has no code");
    return it->second;
}

std::optional<State> Encoding::state_for(const std::string& bits) const
{
    for (const auto& [q, code] : state_code)
        if (code == bits)
            return q;
    return std::nullopt;
}

std::optional<Letter> Encoding::letter_for(const std::string& bits) const
{
    for (const auto& [a, code] : letter_code)
        if (code == bits)
            return a;
    return std::nullopt;
}

namespace {

// Fills `codes` for every symbol: overrides verbatim, the rest counting
// upward from zero over unused values.
std::map<std::string, std::string> make_codes(const std::vector<std::string>& symbols,
                                              const std::map<std::string, std::string>& overrides,
                                              std::size_t width, const std::string& kind)
{
    std::map<std::string, std::string> codes;
    std::set<std::string> taken;
    for (const auto& [symbol, code] : overrides) {
        if (!contains(symbols, symbol))
            throw EncodingClash(kind + " override names unknown " + kind + " '" + symbol + "'");
        if (!is_binary(code) || code.size() != width)
            throw EncodingClash(kind + " code '" + code + "' for '" + symbol + "' must be " + std::to_string(width)
                                + " binary digits");
        if (!taken.insert(code).second)
            throw EncodingClash(kind + " code '" + code + "' is assigned twice");
        codes[symbol] = code;
    }
    const std::size_t capacity = width >= 63 ? SIZE_MAX : (std::size_t{ 1 } << width);
    if (symbols.size() > capacity)
        throw EncodingClash(std::to_string(width) + "-bit codes cannot distinguish " + std::to_string(symbols.size())
                            + " " + kind + "s");
    std::size_t counter = 0;
    for (const auto& symbol : symbols) {
        if (codes.count(symbol))
            continue;
        std::string code;
        do
            code = to_binary(counter++, width);
        while (taken.count(code));
        taken.insert(code);
        codes[symbol] = code;
    }
    return codes;
}

} // namespace

Encoding assign_codes(const AugmentedNfa& a, const CodeOverrides& overrides)
{
    Encoding enc;
    enc.state_bits = a.slot_count();
    enc.letter_bits = bits_needed(a.alphabet.size());
    if (!overrides.letters.empty()) {
        const std::size_t width = overrides.letters.begin()->second.size();
        for (const auto& [letter, code] : overrides.letters)
            if (code.size() != width)
                throw EncodingClash("letter codes must all have the same width");
        if (width < enc.letter_bits)
            throw EncodingClash("letter codes of width " + std::to_string(width) + " cannot distinguish "
                                + std::to_string(a.alphabet.size()) + " letters");
        enc.letter_bits = width;
    }
    enc.state_code = make_codes(a.states, overrides.states, enc.state_bits, "state");
    enc.letter_code = make_codes(a.alphabet, overrides.letters, enc.letter_bits, "letter");
    return enc;
}

namespace {

bool run_oracle(const State& initial, const std::vector<State>& accepting, const std::vector<Transition>& transitions,
                const Word& word)
{
    std::set<State> current{ initial };
    for (const auto& letter : word) {
        std::set<State> next;
        for (const auto& t : transitions)
            if (t.letter == letter && current.count(t.origin))
                next.insert(t.target);
        current = std::move(next);
        if (current.empty())
            return false;
    }
    return std::any_of(accepting.begin(), accepting.end(), [&](const State& q) { return current.count(q) > 0; });
}

} // namespace

bool oracle_accepts(const Nfa& a, const Word& word)
{
    return run_oracle(a.initial, a.accepting, a.transitions, word);
}

bool oracle_accepts(const AugmentedNfa& a, const Word& word)
{
    return run_oracle(a.initial, { a.sink }, a.transitions, word);
}

NfaDocument parse_nfa(std::istream& in)
{
    NfaDocument doc;
    bool have_initial = false;
    std::optional<std::vector<std::string>> order_tokens;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize_line(line);
        if (tokens.empty())
            continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        std::string key = tokens.front();
        if (key.empty() || key.back() != ':')
            throw ParseError(where + "expected 'keyword:' but got '" + key + "'");
        key.pop_back();
        const std::vector<std::string> args(tokens.begin() + 1, tokens.end());
        const auto expect = [&](std::size_t count, const char* usage) {
            if (args.size() != count)
                throw ParseError(where + "usage: " + usage);
        };
        if (key == "states") {
            doc.nfa.states.insert(doc.nfa.states.end(), args.begin(), args.end());
        } else if (key == "alphabet") {
            doc.nfa.alphabet.insert(doc.nfa.alphabet.end(), args.begin(), args.end());
        } else if (key == "initial") {
            expect(1, "initial: <state>");
            doc.nfa.initial = args[0];
            have_initial = true;
        } else if (key == "accept") {
            doc.nfa.accepting.insert(doc.nfa.accepting.end(), args.begin(), args.end());
        } else if (key == "trans") {
            expect(3, "trans: <origin> <letter> <target>");
            doc.nfa.transitions.push_back({ args[0], args[1], args[2] });
        } else if (key == "statecode") {
            expect(2, "statecode: <state> <bits>");
            doc.overrides.states[args[0]] = args[1];
        } else if (key == "lettercode") {
            expect(2, "lettercode: <letter> <bits>");
            doc.overrides.letters[args[0]] = args[1];
        } else if (key == "sink") {
            expect(1, "sink: <name>");
            doc.sink = args[0];
        } else if (key == "order") {
            order_tokens = args;
        } else {
            throw ParseError(where + "unknown keyword '" + key + ":'");
        }
    }
    if (!have_initial)
        throw ParseError("NFA file has no 'initial:' line");
    if (order_tokens) {
        std::vector<SlotRef> order;
        for (const auto& token : *order_tokens) {
            if (token.size() >= 2 && token[0] == '$') {
                order.push_back({ std::nullopt, token.substr(1) });
            } else if (token.size() >= 2 && token[0] == 'f') {
                const int k = parse_int(token.substr(1), "order slot");
                if (k < 1)
                    throw ParseError("order slots are 1-based: '" + token + "'");
                order.push_back({ static_cast<std::size_t>(k - 1), {} });
            } else {
                throw ParseError("order slot must be f<k> or $<state>, got '" + token + "'");
            }
        }
        doc.order = std::move(order);
    }
    try {
        doc.nfa.validate();
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("invalid NFA: ") + e.what());
    }
    if (doc.order) {
        try {
            (void)augment(doc.nfa, doc.sink, doc.order);
        } catch (const InvalidInput& e) {
            throw ParseError(std::string("invalid order: ") + e.what());
        }
    }
    return doc;
}

NfaDocument load_nfa(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open NFA file '" + path + "'");
    return parse_nfa(in);
}

Word split_word(const std::string& text, const std::vector<Letter>& alphabet)
{
    Word out;
    if (text.find_first_of(" ,") != std::string::npos) {
        std::string current;
        for (char c : text + ",") {
            if (c == ' ' || c == ',') {
                if (!current.empty())
                    out.push_back(current);
                current.clear();
            } else {
                current += c;
            }
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t best = 0;
            for (const auto& letter : alphabet)
                if (letter.size() > best && text.compare(pos, letter.size(), letter) == 0)
                    best = letter.size();
            if (best == 0)
                throw ParseError("cannot split '" + text + "' into letters at position " + std::to_string(pos));
            out.push_back(text.substr(pos, best));
            pos += best;
        }
    }
    for (const auto& letter : out)
        if (!contains(alphabet, letter))
            throw ParseError("'" + letter + "' is not a letter of the alphabet");
    return out;
}

std::string join_word(const Word& word, const std::string& separator)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i)
        out += (i ? separator : "") + word[i];
    return out;
}

} // namespace oritatami
