#include "oritatami/system_io.hpp"

#include "oritatami/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

namespace oritatami {

std::vector<std::string> tokenize_line(std::string_view line)
{
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(const std::string& token, std::string_view what)
{
    int value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("expected an integer for " + std::string(what) + ", got '" + token + "'");
    return value;
}

namespace {

std::string at_line(std::size_t line_no)
{
    return "line " + std::to_string(line_no) + ": ";
}

} // namespace

bool SeedBuilder::consume(const std::vector<std::string>& tokens, std::size_t line_no)
{
    const auto& key = tokens.front();
    if (key == "seed") {
        if (tokens.size() != 4)
            throw ParseError(at_line(line_no) + "usage: seed <x> <y> <bead>");
        points_.push_back({ parse_int(tokens[1], "x"), parse_int(tokens[2], "y") });
        beads_.push_back(tokens[3]);
        return true;
    }
    if (key == "seedbond") {
        if (tokens.size() != 3)
            throw ParseError(at_line(line_no) + "usage: seedbond <i> <j>");
        const int i = parse_int(tokens[1], "bond index");
        const int j = parse_int(tokens[2], "bond index");
        if (i < 1 || j < 1)
            throw ParseError(at_line(line_no) + "bond indices are 1-based");
        bonds_.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        return true;
    }
    return false;
}

Conformation SeedBuilder::build() const
{
    Conformation c(points_, beads_);
    for (const auto& [i, j] : bonds_) {
        if (i >= c.size() || j >= c.size())
            throw ParseError("seedbond {" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                             + "} refers to a bead outside the seed");
        c.add_bond(i, j);
    }
    return c;
}

OritatamiSystem parse_system(std::istream& in)
{
    OritatamiSystem sys;
    SeedBuilder seed;
    bool have_delay = false;
    bool have_arity = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize_line(line);
        if (tokens.empty())
            continue;
        const auto& key = tokens.front();
        if (seed.consume(tokens, line_no))
            continue;
        if (key == "delay" || key == "arity") {
            if (tokens.size() != 2)
                throw ParseError(at_line(line_no) + "usage: " + key + " <int>");
            (key == "delay" ? sys.delay : sys.arity) = parse_int(tokens[1], key);
            (key == "delay" ? have_delay : have_arity) = true;
        } else if (key == "rule") {
            if (tokens.size() != 3)
                throw ParseError(at_line(line_no) + "usage: rule <beadA> <beadB>");
            sys.rules.add(tokens[1], tokens[2]);
        } else if (key == "transcript") {
            sys.transcript.insert(sys.transcript.end(), tokens.begin() + 1, tokens.end());
        } else if (key == "repeat") {
            if (tokens.size() < 3)
                throw ParseError(at_line(line_no) + "usage: repeat <count> <bead>...");
            const int count = parse_int(tokens[1], "repeat count");
            if (count < 0)
                throw ParseError(at_line(line_no) + "repeat count must be non-negative");
            for (int r = 0; r < count; ++r)
                sys.transcript.insert(sys.transcript.end(), tokens.begin() + 2, tokens.end());
        } else {
            throw ParseError(at_line(line_no) + "unknown keyword '" + key + "'");
        }
    }
    if (!have_delay || !have_arity)
        throw ParseError("system file must set both delay and arity");
    sys.seed = seed.build();
    try {
        sys.validate();
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("invalid system: ") + e.what());
    }
    return sys;
}

OritatamiSystem load_system(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open system file '" + path + "'");
    return parse_system(in);
}

void write_seed_stanza(std::ostream& out, const Conformation& seed)
{
    for (std::size_t i = 0; i < seed.size(); ++i)
        out << "seed " << seed.path()[i].x << ' ' << seed.path()[i].y << ' ' << seed.beads()[i] << '\n';
    for (const auto& b : seed.bonds())
        out << "seedbond " << b.first + 1 << ' ' << b.second + 1 << '\n';
}

void write_system(std::ostream& out, const OritatamiSystem& sys)
{
    out << "delay " << sys.delay << '\n' << "arity " << sys.arity << '\n';
    for (const auto& [a, b] : sys.rules.pairs())
        out << "rule " << a << ' ' << b << '\n';
    write_seed_stanza(out, sys.seed);
    if (!sys.transcript.empty()) {
        out << "transcript";
        for (const auto& b : sys.transcript)
            out << ' ' << b;
        out << '\n';
    }
}

void write_trace(std::ostream& out, const Conformation& c, std::size_t seed_size)
{
    for (std::size_t i = seed_size; i < c.size(); ++i) {
        out << i + 1 << '\t' << c.beads()[i] << '\t' << c.path()[i].x << '\t' << c.path()[i].y << '\t';
        const auto partners = c.partners_of(i);
        for (std::size_t k = 0; k < partners.size(); ++k)
            out << (k ? ";" : "") << partners[k] + 1;
        out << '\n';
    }
}

} // namespace oritatami
