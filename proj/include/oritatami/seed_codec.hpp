#pragma once

#include "oritatami/brick_machine.hpp"
#include "oritatami/conformation.hpp"
#include "oritatami/nfa.hpp"

#include <istream>
#include <string>
#include <vector>

// Bead-level encodings carried by the Gamma-shaped seed: the current state
// row below the horizontal arm and the input word along the vertical arm.
namespace oritatami::seed {

struct BeadWord
{
    std::vector<BeadType> beads;
    std::vector<Direction> directions;   // beads.size() - 1 steps

    bool operator==(const BeadWord&) const = default;
};

// Six-bead words.
const std::vector<BeadType>& z0();       // 96 91 90 85 84 79, also x_N
const std::vector<BeadType>& z1();       // 96 95 94 93 92 79, also x_Y
const std::vector<BeadType>& y0();       // 501 502 503 504 507 508
const std::vector<BeadType>& y1();       // 501 .. 506, also the column spacer

// Every bead type the encoders can emit.
bool in_vocabulary(const BeadType& bead);

// For each slot k: x_{f_k} (630 625)^3 z_{q[k]} (630 625)^3, then 624 623,
// all eastward. Throws WidthMismatch unless |flags| = |q_code|.
BeadWord encode_state_row(const std::string& q_code, const std::vector<brick::Flag>& flags);

struct StateRow
{
    std::string q_code;
    std::vector<brick::Flag> flags;
};

// Inverse of encode_state_row; throws ParseError on any other bead word.
StateRow decode_state_row(const BeadWord& word);

// Per letter b: (y_sp)^{2n-1}, then y_{b[l]} y_sp for each bit, then
// (y_sp)^{2+2n}, all southwestward. Throws LetterNotEncoded.
BeadWord encode_input_column(const Word& letters, const Encoding& code, std::size_t slots);

Word decode_input_column(const BeadWord& word, const Encoding& code, std::size_t slots);

// Bead count of one encoded letter: 6 (2n - 1 + 2m + 2 + 2n).
std::size_t column_beads_per_letter(std::size_t slots, std::size_t letter_bits);

struct SeedLayout
{
    BeadWord state_row;          // eastward from row_origin
    BeadWord input_column;       // southwestward from column_origin
    Point row_origin;
    Point column_origin;
    Point junction;              // where the two arms meet
    BeadType last_bead = "540";  // annotation only, never placed
};

struct Seed
{
    SeedLayout layout;
    // One bond-free path: up the input column from its far end, then east
    // along the state row.
    Conformation conformation;
};

// Places the state row on row -1 starting at (0, -1) and the column on
// x = 0 descending from (0, -2). The word is followed by $.
Seed build_seed(const AugmentedNfa& nfa, const Encoding& code, const Word& word);

struct DecodedSeed
{
    StateRow state;
    Word letters;                // including the trailing $
};

// Reads back a seed conformation laid out by build_seed.
DecodedSeed decode_seed(const Conformation& seed, const Encoding& code, std::size_t slots);

// Parses `seed x y bead` lines (other lines are ignored) and decodes them.
DecodedSeed decode_seed_stanza(std::istream& in, const Encoding& code, std::size_t slots);

} // namespace oritatami::seed
