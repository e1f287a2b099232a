#include "oritatami/brick_harness.hpp"

#include "oritatami/error.hpp"
#include "oritatami/fold_engine.hpp"
#include "oritatami/system_io.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>

namespace oritatami::harness {

namespace {

std::string at_line(std::size_t line_no)
{
    return "line " + std::to_string(line_no) + ": ";
}

Height require_height(const std::string& token, std::size_t line_no)
{
    auto h = parse_height(token);
    if (!h)
        throw ParseError(at_line(line_no) + "expected T or B, got '" + token + "'");
    return *h;
}

std::string join(const std::vector<BeadType>& beads)
{
    std::string out;
    for (const auto& b : beads)
        out += (out.empty() ? "" : ",") + b;
    return out;
}

// Whether the last `tail.size()` beads of `c`, moved by a single
// translation, coincide with `tail` including its internal bonds.
bool tail_matches(const Conformation& c, const Conformation& tail)
{
    if (tail.empty() || tail.size() > c.size())
        return false;
    const std::size_t base = c.size() - tail.size();
    const Point delta = tail.path().front() - c.path()[base];
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (c.path()[base + i] + delta != tail.path()[i] || c.beads()[base + i] != tail.beads()[i])
            return false;
    }
    std::set<Bond> inside;
    for (const auto& b : c.bonds())
        if (b.first >= base)
            inside.insert(make_bond(b.first - base, b.second - base));
    return inside == tail.bonds();
}

} // namespace

char height_char(Height h)
{
    return h == Height::T ? 'T' : 'B';
}

std::optional<Height> parse_height(const std::string& token)
{
    if (token == "T")
        return Height::T;
    if (token == "B")
        return Height::B;
    return std::nullopt;
}

GridPath Brick::shape() const
{
    GridPath out(folded.path().begin() + static_cast<std::ptrdiff_t>(fragment_begin), folded.path().end());
    if (!out.empty()) {
        const Point origin = out.front();
        for (auto& p : out)
            p = p - origin;
    }
    return out;
}

bool same_brick(const Brick& a, const Brick& b)
{
    return a.exit == b.exit && a.exposed == b.exposed && a.shape() == b.shape();
}

std::string brick_name(const std::string& submodule, Height entry, const std::string& input)
{
    return submodule + "_-" + height_char(entry) + input;
}

Brick fold_in_environment(const Submodule& sub, const Environment& env)
{
    OritatamiSystem sys{ sub.rules, sub.arity, sub.delay, env.surrounding, sub.fragment };
    try {
        sys.validate();
    } catch (const InvalidInput& e) {
        throw InvalidInput("environment " + env.name + ": " + e.what());
    }
    const std::string where = sub.name + " in " + env.name;
    if (sub.fragment.empty())
        throw UnexpectedFold(where + ": the fragment is empty");

    FoldOptions options;
    options.mode = FoldMode::first;
    const FoldOutcome outcome = fold_all(sys, options).front();
    if (!outcome.deterministic)
        throw NondeterministicBrick(where + ": several minimizers at some step");
    if (!outcome.completed)
        throw UnexpectedFold(where + ": dead end after " + std::to_string(outcome.stabilized) + " beads");

    Brick brick;
    brick.submodule = sub.name;
    brick.entry = env.entry;
    brick.input = env.input;
    brick.name = brick_name(sub.name, env.entry, env.input);
    brick.folded = outcome.conformation;
    brick.fragment_begin = env.surrounding.size();

    try {
        brick.folded.validate(sub.rules, sub.arity);
    } catch (const InvalidInput& e) {
        throw UnexpectedFold(where + ": " + e.what());
    }

    const auto& path = brick.folded.path();
    const int first_y = path[brick.fragment_begin].y;
    const int top = env.entry == Height::T ? first_y : first_y + 2;
    const int bottom = top - 2;
    std::vector<std::pair<int, BeadType>> low;
    for (std::size_t i = brick.fragment_begin; i < path.size(); ++i) {
        if (path[i].y > top || path[i].y < bottom)
            throw UnexpectedFold(where + ": bead " + std::to_string(i + 1) + " leaves the height-3 band");
        if (path[i].y == bottom)
            low.emplace_back(path[i].x, brick.folded.beads()[i]);
    }
    const int last_y = path.back().y;
    if (last_y == top)
        brick.exit = Height::T;
    else if (last_y == bottom)
        brick.exit = Height::B;
    else
        throw UnexpectedFold(where + ": folding ends in the middle row");
    std::stable_sort(low.begin(), low.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [x, bead] : low)
        brick.exposed.push_back(std::move(bead));

    for (const auto& spec : sub.bricks) {
        if (spec.entry == env.entry && (!spec.input || *spec.input == env.input) && spec.exit == brick.exit
            && spec.exposed == brick.exposed)
            return brick;
    }
    throw UnexpectedFold(where + ": exit " + height_char(brick.exit) + " exposing " + join(brick.exposed)
                         + " matches no declared brick");
}

const Submodule& Definitions::submodule(const std::string& name) const
{
    for (const auto& s : submodules)
        if (s.name == name)
            return s;
    throw InvalidInput("no submodule named '" + name + "'");
}

const Environment& Definitions::environment(const std::string& name) const
{
    for (const auto& e : environments)
        if (e.name == name)
            return e;
    throw InvalidInput("no environment named '" + name + "'");
}

const Environment& successor(const Definitions& defs, const Brick& brick)
{
    const Environment* best = nullptr;
    for (const auto& env : defs.environments) {
        if (env.entry != brick.exit || !tail_matches(brick.folded, env.surrounding))
            continue;
        if (!best || env.surrounding.size() > best->surrounding.size())
            best = &env;
    }
    if (!best)
        throw ClosureViolation("brick " + brick.name + " leads to an undeclared environment (exit "
                               + height_char(brick.exit) + ")");
    return *best;
}

BrickAutomaton explore_closure(const Definitions& defs, const std::vector<std::string>& start)
{
    BrickAutomaton out;
    std::set<std::string> seen;
    std::deque<std::string> pending;
    for (const auto& name : start) {
        (void)defs.environment(name);
        if (seen.insert(name).second) {
            out.environments.push_back(name);
            pending.push_back(name);
        }
    }
    while (!pending.empty()) {
        const Environment& env = defs.environment(pending.front());
        pending.pop_front();
        Brick brick;
        try {
            brick = fold_in_environment(defs.submodule(env.submodule), env);
        } catch (const UnexpectedFold& e) {
            out.failures.push_back({ env.name, e.what() });
            continue;
        }
        const Environment& next = successor(defs, brick);
        out.edges.push_back({ env.name, brick.exit, next.name, brick.name });
        out.bricks.push_back(std::move(brick));
        if (seen.insert(next.name).second) {
            out.environments.push_back(next.name);
            pending.push_back(next.name);
        }
    }
    return out;
}

std::vector<Submodule> parse_submodules(std::istream& in)
{
    std::vector<Submodule> out;
    std::optional<Submodule> current;
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
        if (!current) {
            if (key != "submodule" || tokens.size() != 2)
                throw ParseError(at_line(line_no) + "expected 'submodule <name>'");
            current = Submodule{};
            current->name = tokens[1];
            have_delay = have_arity = false;
        } else if (key == "end") {
            if (!have_delay || !have_arity)
                throw ParseError(at_line(line_no) + "submodule " + current->name + " must set delay and arity");
            if (current->delay < 1 || current->arity < 1)
                throw ParseError(at_line(line_no) + "delay and arity must be positive");
            out.push_back(std::move(*current));
            current.reset();
        } else if (key == "delay" || key == "arity") {
            if (tokens.size() != 2)
                throw ParseError(at_line(line_no) + "usage: " + key + " <int>");
            (key == "delay" ? current->delay : current->arity) = parse_int(tokens[1], key);
            (key == "delay" ? have_delay : have_arity) = true;
        } else if (key == "rule") {
            if (tokens.size() != 3)
                throw ParseError(at_line(line_no) + "usage: rule <beadA> <beadB>");
            current->rules.add(tokens[1], tokens[2]);
        } else if (key == "transcript") {
            current->fragment.insert(current->fragment.end(), tokens.begin() + 1, tokens.end());
        } else if (key == "repeat") {
            if (tokens.size() < 3)
                throw ParseError(at_line(line_no) + "usage: repeat <count> <bead>...");
            const int count = parse_int(tokens[1], "repeat count");
            for (int r = 0; r < count; ++r)
                current->fragment.insert(current->fragment.end(), tokens.begin() + 2, tokens.end());
        } else if (key == "brick") {
            if (tokens.size() < 5 || tokens[3] != "exit" || (tokens.size() > 5 && tokens[5] != "expose"))
                throw ParseError(at_line(line_no) + "usage: brick <T|B> <input|*> exit <T|B> [expose <bead>...]");
            BrickSpec spec;
            spec.entry = require_height(tokens[1], line_no);
            if (tokens[2] != "*")
                spec.input = tokens[2] == "-" ? std::string() : tokens[2];
            spec.exit = require_height(tokens[4], line_no);
            if (tokens.size() > 5)
                spec.exposed.assign(tokens.begin() + 6, tokens.end());
            current->bricks.push_back(std::move(spec));
        } else {
            throw ParseError(at_line(line_no) + "unknown keyword '" + key + "'");
        }
    }
    if (current)
        throw ParseError("submodule " + current->name + " is missing 'end'");
    return out;
}

std::vector<Environment> parse_environments(std::istream& in)
{
    std::vector<Environment> out;
    std::optional<Environment> current;
    std::optional<SeedBuilder> seed;
    bool have_entry = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize_line(line);
        if (tokens.empty())
            continue;
        const auto& key = tokens.front();
        if (!current) {
            if (key != "environment" || tokens.size() != 2)
                throw ParseError(at_line(line_no) + "expected 'environment <name>'");
            current = Environment{};
            current->name = tokens[1];
            seed.emplace();
            have_entry = false;
        } else if (seed->consume(tokens, line_no)) {
            continue;
        } else if (key == "end") {
            if (!have_entry || current->submodule.empty())
                throw ParseError(at_line(line_no) + "environment " + current->name
                                 + " must set entry and submodule");
            current->surrounding = seed->build();
            out.push_back(std::move(*current));
            current.reset();
        } else if (key == "entry" && tokens.size() == 2) {
            current->entry = require_height(tokens[1], line_no);
            have_entry = true;
        } else if (key == "input" && tokens.size() == 2) {
            static const std::set<std::string> allowed{ "0", "1", "N", "Y" };
            if (!allowed.count(tokens[1]))
                throw ParseError(at_line(line_no) + "input must be 0, 1, N or Y");
            current->input = tokens[1];
        } else if (key == "submodule" && tokens.size() == 2) {
            current->submodule = tokens[1];
        } else {
            throw ParseError(at_line(line_no) + "unexpected '" + key + "' in an environment stanza");
        }
    }
    if (current)
        throw ParseError("environment " + current->name + " is missing 'end'");
    return out;
}

Definitions load_definitions(const std::string& defs_path, const std::string& catalog_path)
{
    std::ifstream defs_in(defs_path);
    if (!defs_in)
        throw ParseError("cannot open submodule definitions '" + defs_path + "'");
    std::ifstream catalog_in(catalog_path);
    if (!catalog_in)
        throw ParseError("cannot open environment catalog '" + catalog_path + "'");
    Definitions defs{ parse_submodules(defs_in), parse_environments(catalog_in) };

    std::set<std::string> names;
    for (const auto& s : defs.submodules)
        if (!names.insert(s.name).second)
            throw ParseError("submodule '" + s.name + "' is defined twice");
    names.clear();
    for (const auto& e : defs.environments) {
        if (!names.insert(e.name).second)
            throw ParseError("environment '" + e.name + "' is defined twice");
        try {
            (void)defs.submodule(e.submodule);
        } catch (const InvalidInput& err) {
            throw ParseError("environment " + e.name + ": " + err.what());
        }
    }
    return defs;
}

void write_automaton(std::ostream& out, const BrickAutomaton& automaton)
{
    for (const auto& e : automaton.edges)
        out << e.from << " -" << height_char(e.label) << "-> " << e.to << '\n';
    for (const auto& f : automaton.failures)
        out << "unclassified " << f.environment << ": " << f.message << '\n';
    out << "digraph bricks {\n";
    for (const auto& v : automaton.environments)
        out << "  \"" << v << "\";\n";
    for (const auto& e : automaton.edges)
        out << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << height_char(e.label) << "\", brick=\""
            << e.brick << "\"];\n";
    out << "}\n";
}

} // namespace oritatami::harness
