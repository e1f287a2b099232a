#pragma once

#include "oritatami/fold_engine.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace oritatami {

// Whitespace-separated tokens of a line with any '#' comment removed.
std::vector<std::string> tokenize_line(std::string_view line);

int parse_int(const std::string& token, std::string_view what);

// Accumulates the seed stanza (`seed x y bead`, `seedbond i j`) shared by
// system files and environment catalogs.
class SeedBuilder
{
public:
    // Returns false if the keyword is not a seed keyword.
    bool consume(const std::vector<std::string>& tokens, std::size_t line_no);
    [[nodiscard]] Conformation build() const;
    [[nodiscard]] bool empty() const { return points_.empty(); }

private:
    GridPath points_;
    std::vector<BeadType> beads_;
    std::vector<std::pair<std::size_t, std::size_t>> bonds_;
};

// Line-oriented system file:
//   delay <int>, arity <int>, rule <a> <b>, seed <x> <y> <bead>,
//   seedbond <i> <j> (1-based), transcript <bead>..., repeat <count> <bead>...
// Throws ParseError; the result is validated.
OritatamiSystem parse_system(std::istream& in);
OritatamiSystem load_system(const std::string& path);

void write_seed_stanza(std::ostream& out, const Conformation& seed);
void write_system(std::ostream& out, const OritatamiSystem& sys);

// TSV, one line per transcript bead stabilized after the seed:
// index, bead type, x, y, semicolon-joined 1-based bond partners.
void write_trace(std::ostream& out, const Conformation& c, std::size_t seed_size);

} // namespace oritatami
