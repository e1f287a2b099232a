#include "oritatami/seed_codec.hpp"

#include "oritatami/error.hpp"
#include "oritatami/system_io.hpp"

#include <algorithm>
#include <set>

namespace oritatami::seed {

namespace {

std::vector<BeadType> words(std::initializer_list<int> ids)
{
    std::vector<BeadType> out;
    for (int id : ids)
        out.push_back(std::to_string(id));
    return out;
}

const std::vector<BeadType>& row_spacer()
{
    static const auto spacer = words({ 630, 625, 630, 625, 630, 625 });
    return spacer;
}

void append(std::vector<BeadType>& out, const std::vector<BeadType>& word)
{
    out.insert(out.end(), word.begin(), word.end());
}

bool matches_at(const std::vector<BeadType>& beads, std::size_t pos, const std::vector<BeadType>& word)
{
    return pos + word.size() <= beads.size() && std::equal(word.begin(), word.end(), beads.begin() + pos);
}

BeadWord uniform(std::vector<BeadType> beads, Direction d)
{
    BeadWord out;
    out.directions.assign(beads.empty() ? 0 : beads.size() - 1, d);
    out.beads = std::move(beads);
    return out;
}

void require_uniform(const BeadWord& word, Direction d, const char* what)
{
    if (word.directions.size() + 1 != word.beads.size() && !word.beads.empty())
        throw ParseError(std::string(what) + ": direction count does not match bead count");
    if (std::any_of(word.directions.begin(), word.directions.end(), [d](Direction e) { return e != d; }))
        throw ParseError(std::string(what) + " must run " + std::string(direction_name(d)) + " throughout");
}

constexpr std::size_t word_size = 6;
constexpr std::size_t row_slot_size = 4 * word_size;

} // namespace

const std::vector<BeadType>& z0()
{
    static const auto w = words({ 96, 91, 90, 85, 84, 79 });
    return w;
}

const std::vector<BeadType>& z1()
{
    static const auto w = words({ 96, 95, 94, 93, 92, 79 });
    return w;
}

const std::vector<BeadType>& y0()
{
    static const auto w = words({ 501, 502, 503, 504, 507, 508 });
    return w;
}

const std::vector<BeadType>& y1()
{
    static const auto w = words({ 501, 502, 503, 504, 505, 506 });
    return w;
}

bool in_vocabulary(const BeadType& bead)
{
    static const std::set<BeadType> vocabulary = [] {
        std::set<BeadType> v;
        for (int id : { 79, 84, 85, 90, 91, 92, 93, 94, 95, 96, 623, 624, 625, 630 })
            v.insert(std::to_string(id));
        for (int id = 501; id <= 508; ++id)
            v.insert(std::to_string(id));
        return v;
    }();
    return vocabulary.count(bead) > 0;
}

BeadWord encode_state_row(const std::string& q_code, const std::vector<brick::Flag>& flags)
{
    if (q_code.size() != flags.size())
        throw WidthMismatch("state code has " + std::to_string(q_code.size()) + " bits but "
                            + std::to_string(flags.size()) + " transition flags were given");
    std::vector<BeadType> beads;
    beads.reserve(q_code.size() * row_slot_size + 2);
    for (std::size_t k = 0; k < q_code.size(); ++k) {
        if (flags[k] == brick::Flag::Marked)
            throw InvalidInput("the state row format carries only N and Y flags");
        if (q_code[k] != '0' && q_code[k] != '1')
            throw InvalidInput("state code '" + q_code + "' is not binary");
        append(beads, flags[k] == brick::Flag::Y ? z1() : z0());
        append(beads, row_spacer());
        append(beads, q_code[k] == '1' ? z1() : z0());
        append(beads, row_spacer());
    }
    beads.emplace_back("624");
    beads.emplace_back("623");
    return uniform(std::move(beads), Direction::E);
}

StateRow decode_state_row(const BeadWord& word)
{
    require_uniform(word, Direction::E, "state row");
    const auto& beads = word.beads;
    if (beads.size() < 2 || (beads.size() - 2) % row_slot_size != 0)
        throw ParseError("state row has " + std::to_string(beads.size()) + " beads, not 24n + 2");
    const std::size_t n = (beads.size() - 2) / row_slot_size;
    StateRow out;
    const auto read_bit = [&](std::size_t pos) {
        if (matches_at(beads, pos, z0()))
            return '0';
        if (matches_at(beads, pos, z1()))
            return '1';
        throw ParseError("state row: no z_0/z_1 word at bead " + std::to_string(pos + 1));
    };
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t base = k * row_slot_size;
        out.flags.push_back(read_bit(base) == '1' ? brick::Flag::Y : brick::Flag::N);
        out.q_code += read_bit(base + 2 * word_size);
        for (std::size_t spacer : { base + word_size, base + 3 * word_size })
            if (!matches_at(beads, spacer, row_spacer()))
                throw ParseError("state row: expected (630 625)^3 at bead " + std::to_string(spacer + 1));
    }
    if (beads[beads.size() - 2] != "624" || beads.back() != "623")
        throw ParseError("state row must end with 624 623");
    return out;
}

std::size_t column_beads_per_letter(std::size_t slots, std::size_t letter_bits)
{
    return word_size * (2 * slots - 1 + 2 * letter_bits + 2 + 2 * slots);
}

BeadWord encode_input_column(const Word& letters, const Encoding& code, std::size_t slots)
{
    if (slots == 0)
        throw WidthMismatch("the input column needs at least one transition slot");
    std::vector<BeadType> beads;
    for (const auto& letter : letters) {
        const std::string& bits = code.code_of_letter(letter);
        for (std::size_t i = 0; i < 2 * slots - 1; ++i)
            append(beads, y1());
        for (char bit : bits) {
            append(beads, bit == '1' ? y1() : y0());
            append(beads, y1());
        }
        for (std::size_t i = 0; i < 2 + 2 * slots; ++i)
            append(beads, y1());
    }
    return uniform(std::move(beads), Direction::SW);
}

Word decode_input_column(const BeadWord& word, const Encoding& code, std::size_t slots)
{
    require_uniform(word, Direction::SW, "input column");
    const std::size_t m = code.letter_bits;
    const std::size_t block = column_beads_per_letter(slots, m);
    const auto& beads = word.beads;
    if (beads.size() % block != 0)
        throw ParseError("input column length " + std::to_string(beads.size()) + " is not a multiple of "
                         + std::to_string(block));
    Word out;
    for (std::size_t base = 0; base < beads.size(); base += block) {
        std::string bits;
        for (std::size_t w = 0; w < block / word_size; ++w) {
            const std::size_t pos = base + w * word_size;
            const bool bit_word = w >= 2 * slots - 1 && w < 2 * slots - 1 + 2 * m && (w - (2 * slots - 1)) % 2 == 0;
            if (bit_word) {
                if (matches_at(beads, pos, y0()))
                    bits += '0';
                else if (matches_at(beads, pos, y1()))
                    bits += '1';
                else
                    throw ParseError("input column: no y_0/y_1 word at bead " + std::to_string(pos + 1));
            } else if (!matches_at(beads, pos, y1())) {
                throw ParseError("input column: expected the spacer word at bead " + std::to_string(pos + 1));
            }
        }
        const auto letter = code.letter_for(bits);
        if (!letter)
            throw LetterNotEncoded("input column carries the unassigned letter code " + bits);
        out.push_back(*letter);
    }
    return out;
}

Seed build_seed(const AugmentedNfa& nfa, const Encoding& code, const Word& word)
{
    const std::size_t n = nfa.slot_count();
    Word letters = word;
    letters.emplace_back(dollar);

    Seed out;
    out.layout.state_row = encode_state_row(code.code_of_state(nfa.initial), std::vector<brick::Flag>(n, brick::Flag::N));
    out.layout.input_column = encode_input_column(letters, code, n);
    out.layout.junction = { 0, -1 };
    out.layout.row_origin = { 0, -1 };
    out.layout.column_origin = { 0, -2 };

    const GridPath column = trace(out.layout.column_origin, out.layout.input_column.directions);
    const GridPath row = trace(out.layout.row_origin, out.layout.state_row.directions);

    GridPath path(column.rbegin(), column.rend());
    std::vector<BeadType> beads(out.layout.input_column.beads.rbegin(), out.layout.input_column.beads.rend());
    path.insert(path.end(), row.begin(), row.end());
    beads.insert(beads.end(), out.layout.state_row.beads.begin(), out.layout.state_row.beads.end());
    out.conformation = Conformation(std::move(path), std::move(beads));
    return out;
}

DecodedSeed decode_seed(const Conformation& seed, const Encoding& code, std::size_t slots)
{
    const std::size_t row_length = slots * row_slot_size + 2;
    if (seed.size() < row_length)
        throw ParseError("seed is too short to hold a " + std::to_string(slots) + "-slot state row");
    if (!path_is_valid(seed.path()))
        throw ParseError("seed path is not self-avoiding");
    const std::size_t column_length = seed.size() - row_length;

    const auto word_from = [&](std::size_t begin, std::size_t end, bool reversed) {
        BeadWord w;
        GridPath points(seed.path().begin() + static_cast<std::ptrdiff_t>(begin),
                        seed.path().begin() + static_cast<std::ptrdiff_t>(end));
        w.beads.assign(seed.beads().begin() + static_cast<std::ptrdiff_t>(begin),
                       seed.beads().begin() + static_cast<std::ptrdiff_t>(end));
        if (reversed) {
            std::reverse(points.begin(), points.end());
            std::reverse(w.beads.begin(), w.beads.end());
        }
        for (std::size_t i = 1; i < points.size(); ++i)
            w.directions.push_back(*direction_between(points[i - 1], points[i]));
        return w;
    };

    DecodedSeed out;
    out.state = decode_state_row(word_from(column_length, seed.size(), false));
    out.letters = decode_input_column(word_from(0, column_length, true), code, slots);
    return out;
}

DecodedSeed decode_seed_stanza(std::istream& in, const Encoding& code, std::size_t slots)
{
    SeedBuilder builder;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize_line(line);
        if (!tokens.empty() && tokens.front() == "seed")
            builder.consume(tokens, line_no);
    }
    return decode_seed(builder.build(), code, slots);
}

} // namespace oritatami::seed
