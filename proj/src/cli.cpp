#include "oritatami/cli.hpp"

#include "oritatami/brick_harness.hpp"
#include "oritatami/brick_machine.hpp"
#include "oritatami/error.hpp"
#include "oritatami/fold_engine.hpp"
#include "oritatami/render.hpp"
#include "oritatami/seed_codec.hpp"
#include "oritatami/system_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>

namespace oritatami {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_reject = 1;
constexpr int exit_input = 2;

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    return out;
}

struct Machine
{
    NfaDocument doc;
    AugmentedNfa nfa;
    Encoding code;
};

Machine load_machine(const std::string& path)
{
    Machine m{ load_nfa(path), {}, {} };
    m.nfa = augment(m.doc.nfa, m.doc.sink, m.doc.order);
    m.code = assign_codes(m.nfa, m.doc.overrides);
    return m;
}

const char* yes_no(bool b)
{
    return b ? "yes" : "no";
}

struct FoldArgs
{
    std::string system;
    std::string mode = "first";
    std::uint64_t rng_seed = 0;
    std::size_t budget = 10000;
    std::string trace;
    std::string svg;
    std::string ascii;
};

int do_fold(const FoldArgs& a, std::ostream& out)
{
    const OritatamiSystem sys = load_system(a.system);
    static const std::map<std::string, FoldMode> modes{
        { "enumerate", FoldMode::enumerate }, { "sample", FoldMode::sample }, { "first", FoldMode::first } };
    FoldOptions options{ modes.at(a.mode), a.rng_seed, a.budget };
    const auto outcomes = fold_all(sys, options);

    out << "outcomes " << outcomes.size() << '\n';
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        const auto& o = outcomes[k];
        out << "outcome " << k + 1 << ": " << (o.completed ? "completed" : "dead end") << ", stabilized "
            << o.stabilized << '/' << sys.transcript.size() << ", energy " << energy(o.conformation)
            << ", deterministic " << yes_no(o.deterministic) << '\n';
    }
    const bool deterministic = outcomes.size() == 1 && outcomes.front().deterministic;
    out << "deterministic " << yes_no(deterministic) << '\n';

    const Conformation& shown = outcomes.front().conformation;
    if (!a.trace.empty()) {
        auto f = open_output(a.trace);
        write_trace(f, shown, sys.seed.size());
    }
    if (!a.svg.empty()) {
        auto f = open_output(a.svg);
        f << render(shown, { RenderFormat::svg });
    }
    if (!a.ascii.empty()) {
        auto f = open_output(a.ascii);
        f << render(shown, { RenderFormat::ascii });
    }
    return exit_ok;
}

struct RunArgs
{
    std::string nfa;
    std::string word;
    std::string mode = "enumerate";
    std::uint64_t rng_seed = 0;
    std::size_t budget = 100000;
    std::string report;
};

int do_run(const RunArgs& a, std::ostream& out)
{
    const Machine m = load_machine(a.nfa);
    const Word word = split_word(a.word, m.doc.nfa.alphabet);
    brick::RunOptions options;
    options.mode = a.mode == "sample" ? brick::RunMode::sample : brick::RunMode::enumerate;
    options.rng_seed = a.rng_seed;
    options.branch_budget = a.budget;
    const auto result = brick::run_word(m.nfa, m.code, word, options);
    brick::write_report(out, result, word);
    if (!a.report.empty()) {
        auto f = open_output(a.report);
        brick::write_report(f, result, word);
    }
    return result.accepted() ? exit_ok : exit_reject;
}

int do_compile(const std::string& nfa_path, const std::string& text, const std::string& out_path, std::ostream& out)
{
    const Machine m = load_machine(nfa_path);
    const Word word = split_word(text, m.doc.nfa.alphabet);
    const seed::Seed s = seed::build_seed(m.nfa, m.code, word);

    auto f = open_output(out_path);
    f << "# seed for word '" << join_word(word) << "' followed by $\n";
    f << "# initial state " << m.nfa.initial << " code " << m.code.code_of_state(m.nfa.initial) << ", "
      << m.nfa.slot_count() << " transition slots, " << m.code.letter_bits << "-bit letters\n";
    for (std::size_t k = 0; k < m.nfa.transitions.size(); ++k) {
        const auto& t = m.nfa.transitions[k];
        f << "# f" << k + 1 << " = (" << m.code.code_of_state(t.origin) << ", " << m.code.code_of_letter(t.letter)
          << ", " << m.code.code_of_state(t.target) << ")\n";
    }
    write_seed_stanza(f, s.conformation);

    out << "seed beads " << s.conformation.size() << " (state row " << s.layout.state_row.beads.size()
        << ", input column " << s.layout.input_column.beads.size() << ")\n";
    return exit_ok;
}

int do_check(const std::string& defs_path, const std::string& catalog_path, std::ostream& out)
{
    const auto defs = harness::load_definitions(defs_path, catalog_path);
    std::vector<std::string> start;
    for (const auto& e : defs.environments)
        start.push_back(e.name);
    const auto automaton = harness::explore_closure(defs, start);
    harness::write_automaton(out, automaton);
    for (const auto& b : automaton.bricks) {
        out << "brick " << b.name << " exit " << harness::height_char(b.exit) << " exposes";
        for (const auto& bead : b.exposed)
            out << ' ' << bead;
        out << '\n';
    }
    out << (automaton.closed() ? "closed" : "not closed") << ": " << automaton.environments.size()
        << " environments, " << automaton.edges.size() << " transitions\n";
    return automaton.closed() ? exit_ok : exit_reject;
}

int do_stats(const std::string& nfa_path, std::size_t t, std::ostream& out)
{
    const Machine m = load_machine(nfa_path);
    const std::size_t n = m.nfa.slot_count();
    const std::size_t mbits = m.code.letter_bits;
    out << "n " << n << "\nm " << mbits << "\nt " << t << "\nzigzags/period " << brick::zigzags_per_period(n, mbits)
        << "\nsteps " << brick::step_count(m.nfa, m.code, t) << '\n';
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{ "Oritatami folding simulator and NFA brick machine" };
    app.require_subcommand(1);

    FoldArgs fold;
    auto* fold_cmd = app.add_subcommand("fold", "fold a system file");
    fold_cmd->add_option("system", fold.system, "system file")->required();
    fold_cmd->add_option("--mode", fold.mode)->check(CLI::IsMember({ "enumerate", "sample", "first" }));
    fold_cmd->add_option("--rng-seed", fold.rng_seed);
    fold_cmd->add_option("--budget", fold.budget, "enumerate-mode branch budget");
    fold_cmd->add_option("--trace", fold.trace, "TSV trace of the first outcome");
    fold_cmd->add_option("--svg", fold.svg, "SVG drawing of the first outcome");
    fold_cmd->add_option("--ascii", fold.ascii, "text drawing of the first outcome");

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run-nfa", "run the brick machine on a word");
    run_cmd->add_option("nfa", run.nfa, "NFA file")->required();
    run_cmd->add_option("--word", run.word)->required();
    run_cmd->add_option("--mode", run.mode)->check(CLI::IsMember({ "enumerate", "sample" }));
    run_cmd->add_option("--rng-seed", run.rng_seed);
    run_cmd->add_option("--budget", run.budget, "branch budget");
    run_cmd->add_option("--report", run.report, "copy of the report");

    std::string compile_nfa, compile_word, compile_out;
    auto* compile_cmd = app.add_subcommand("compile", "emit the seed encoding of a word");
    compile_cmd->add_option("nfa", compile_nfa, "NFA file")->required();
    compile_cmd->add_option("--word", compile_word)->required();
    compile_cmd->add_option("--out", compile_out, "seed stanza output")->required();

    std::string defs, catalog;
    auto* check_cmd = app.add_subcommand("check-bricks", "verify brick closure");
    check_cmd->add_option("defs", defs, "submodule definitions")->required();
    check_cmd->add_option("catalog", catalog, "environment catalog")->required();

    std::string stats_nfa;
    std::size_t word_len = 0;
    auto* stats_cmd = app.add_subcommand("stats", "print the step count");
    stats_cmd->add_option("nfa", stats_nfa, "NFA file")->required();
    stats_cmd->add_option("--word-len", word_len)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*fold_cmd)
            return do_fold(fold, out);
        if (*run_cmd)
            return do_run(run, out);
        if (*compile_cmd)
            return do_compile(compile_nfa, compile_word, compile_out, out);
        if (*check_cmd)
            return do_check(defs, catalog, out);
        return do_stats(stats_nfa, word_len, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
}

} // namespace oritatami
