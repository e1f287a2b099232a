// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include "oritatami/brick_harness.hpp"
#include "oritatami/brick_machine.hpp"
#include "oritatami/error.hpp"
#include "oritatami/fold_engine.hpp"
#include "oritatami/glider.hpp"
#include "oritatami/seed_codec.hpp"

#include "../oracle/fold_oracle.hpp"
#include "../support/generators.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace oritatami;

namespace {

const std::string data = ORITATAMI_DATA_DIR;

struct Verdict
{
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

struct Machine
{
    AugmentedNfa nfa;
    Encoding code;
};

Machine example_machine()
{
    const auto doc = load_nfa(data + "/example.nfa");
    Machine m;
    m.nfa = augment(doc.nfa, doc.sink, doc.order);
    m.code = assign_codes(m.nfa, doc.overrides);
    return m;
}

// Bonds whose later bead lies in [begin, end), shifted back by `begin`.
std::set<std::pair<long, long>> bonds_closed_in(const Conformation& c, std::size_t begin, std::size_t end)
{
    std::set<std::pair<long, long>> out;
    for (const auto& b : c.bonds())
        if (b.second >= begin && b.second < end)
            out.insert({ static_cast<long>(b.first) - static_cast<long>(begin),
                         static_cast<long>(b.second) - static_cast<long>(begin) });
    return out;
}

Verdict glider_reproduction()
{
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    constexpr std::size_t periods = 10;
    const auto sys = glider::system(periods);
    const std::size_t len = glider::period().size();

    const auto outcomes = fold_all(sys, { FoldMode::enumerate });
    if (outcomes.size() != 1 || !outcomes.front().completed)
        return v.fail("expected one completed fold"), v;
    if (!is_deterministic_run(sys))
        v.fail("run is not deterministic");
    const auto& c = outcomes.front().conformation;

    const std::size_t base = sys.seed.size();
    const Point shift = c.path()[base + len] - c.path()[base];
    for (std::size_t p = 0; p + 1 < periods; ++p) {
        const std::size_t a = base + p * len;
        const std::size_t b = a + len;
        for (std::size_t i = 0; i < len; ++i)
            if (c.path()[b + i] != c.path()[a + i] + shift || c.beads()[b + i] != c.beads()[a + i])
                v.fail("period " + std::to_string(p + 2) + " is not a translate of period " + std::to_string(p + 1));
        if (bonds_closed_in(c, a, b) != bonds_closed_in(c, b, b + len))
            v.fail("bonds of period " + std::to_string(p + 2) + " differ");
    }
    if (shift != glider::period_shift)
        v.fail("unexpected period shift");
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (ms.count() >= 1000)
        v.fail("took " + std::to_string(ms.count()) + " ms");
    if (v.pass)
        v.detail = "10 periods, shift (" + std::to_string(shift.x) + "," + std::to_string(shift.y) + "), energy "
                   + std::to_string(energy(c)) + ", deterministic";
    return v;
}

Verdict oracle_equivalence()
{
    Verdict v;
    std::mt19937_64 rng(20240501);
    std::size_t steps = 0, dead_ends = 0, ties = 0;
    constexpr int systems = 500;
    for (int s = 0; s < systems && v.pass; ++s) {
        const auto sys = gen::random_system(rng);
        auto c = sys.seed;
        for (std::size_t i = 0; i < sys.transcript.size(); ++i) {
            const auto reference = oracle::stabilize(sys, c, i);
            std::vector<StabilizationChoice> engine;
            try {
                engine = stabilize_next(sys, c, i);
            } catch (const DeadEnd&) {
            }
            ++steps;
            std::set<oracle::Choice> got;
            for (const auto& e : engine)
                got.insert({ e.point, e.partners });
            if (got != reference.choices) {
                v.fail("system " + std::to_string(s) + " step " + std::to_string(i) + ": minimizer sets differ");
                break;
            }
            if (engine.empty()) {
                ++dead_ends;
                break;
            }
            ties += engine.size() > 1;
            const auto& pick = engine[rng() % engine.size()];
            c.append(pick.point, sys.transcript[i], pick.partners);
        }
    }
    if (v.pass)
        v.detail = std::to_string(systems) + " systems, " + std::to_string(steps) + " steps (" + std::to_string(ties)
                   + " with ties, " + std::to_string(dead_ends) + " dead ends)";
    return v;
}

Verdict language_equivalence()
{
    Verdict v;
    std::mt19937_64 rng(77);
    std::size_t tested = 0, skipped = 0, words = 0, accepted = 0;
    while (tested < 250 && tested + skipped < 5000) {
        const auto a = gen::random_nfa(rng);
        AugmentedNfa aug;
        Encoding code;
        try {
            aug = augment(a);
            code = assign_codes(aug);
        } catch (const Error&) {
            ++skipped;   // rejected at load time: no slots, or too few for the state codes
            continue;
        }
        ++tested;
        for (const auto& w : gen::all_words(a.alphabet, 5)) {
            ++words;
            const bool expected = oracle_accepts(a, w);
            accepted += expected;
            if (brick::run_word(aug, code, w).accepted() != expected) {
                v.fail("NFA " + std::to_string(tested) + " disagrees on '" + join_word(w) + "'");
                return v;
            }
        }
    }
    if (tested < 200)
        v.fail("only " + std::to_string(tested) + " NFAs were loadable");
    if (v.pass)
        v.detail = std::to_string(tested) + " NFAs (" + std::to_string(skipped) + " rejected by the loader), "
                   + std::to_string(words) + " words, " + std::to_string(accepted) + " accepted";
    return v;
}

Verdict worked_example()
{
    using brick::Flag;
    Verdict v;
    const auto m = example_machine();
    const auto r1 = brick::module1(brick::boundary_row(m.code.code_of_state(m.nfa.initial)), m.code, m.nfa);
    if (r1.x != std::vector<Flag>{ Flag::N, Flag::Y, Flag::Y, Flag::Y })
        v.fail("module1 gave " + brick::to_string(r1));
    const auto r2 = brick::module2(r1, m.code, m.nfa, "100");
    if (r2.x != std::vector<Flag>{ Flag::N, Flag::Y, Flag::N, Flag::Y })
        v.fail("module2 gave " + brick::to_string(r2));
    const auto r3 = brick::module3_enumerate(r2);
    std::set<std::size_t> chosen;
    for (const auto& o : r3)
        if (o.chosen)
            chosen.insert(*o.chosen + 1);
    if (chosen != std::set<std::size_t>{ 2, 4 })
        v.fail("module3 outcomes are not {f2, f4}");
    for (const auto& o : r3) {
        if (o.chosen == 1) {
            const auto r4 = brick::module4(o.row, m.code, m.nfa);
            if (r4.z_bits() != "1000" || !r4.is_period_boundary())
                v.fail("module4 with f2 gave " + brick::to_string(r4));
        }
    }
    if (v.pass)
        v.detail = "module1 " + brick::to_string(r1) + ", module2 " + brick::to_string(r2)
                   + ", module3 {f2,f4}, module4(f2) z=1000";
    return v;
}

Verdict halting()
{
    using brick::Flag;
    Verdict v;
    const auto halt = brick::module3_enumerate({ std::vector<Flag>(3, Flag::N), std::vector<brick::Bit>(3, brick::Bit::Dropped) });
    if (halt.size() != 1 || !halt.front().halted)
        v.fail("an all-N row did not halt");

    const auto m = example_machine();
    const Word word{ "100", "100" };
    const auto r = brick::run_word(m.nfa, m.code, word);
    std::ostringstream report;
    brick::write_report(report, r, word);
    if (r.accepted() || report.str().find("REJECT (all branches halted; last halt in period 2)") == std::string::npos)
        v.fail("'100 100' was not rejected with its halt period");
    for (const auto& b : r.branches)
        if (b.halt_period != 2)
            v.fail("a branch did not halt in period 2");

    // Every period without a valid transition halts that branch, and only then.
    std::mt19937_64 rng(8);
    std::size_t halts = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = gen::random_nfa(rng);
        AugmentedNfa aug;
        Encoding code;
        try {
            aug = augment(a);
            code = assign_codes(aug);
        } catch (const Error&) {
            continue;
        }
        for (const auto& w : gen::all_words(a.alphabet, 3)) {
            for (const auto& b : brick::run_word(aug, code, w).branches) {
                for (std::size_t p = 0; p < b.periods.size(); ++p) {
                    const auto& t = b.periods[p];
                    const bool none = t.rows.size() >= 2
                                      && std::count(t.rows[1].x.begin(), t.rows[1].x.end(), Flag::Y) == 0;
                    if (none != !t.chosen.has_value())
                        v.fail("HALT does not coincide with an empty candidate row");
                    if (!t.chosen) {
                        ++halts;
                        if (p + 1 != b.periods.size() || b.halt_period != p + 1 || b.accepted)
                            v.fail("a halted branch kept running");
                    }
                }
            }
        }
    }
    if (v.pass)
        v.detail = "'100 100' rejected with halt in period 2; " + std::to_string(halts) + " random halts checked";
    return v;
}

Verdict step_scaling()
{
    Verdict v;
    const auto m = example_machine();
    if (brick::step_count(m.nfa, m.code, 1) != 384)
        v.fail("worked example does not give 384 steps");
    for (std::size_t n = 1; n <= 64; ++n)
        for (std::size_t mb = 1; mb <= 4; ++mb)
            for (std::size_t t1 = 0; t1 <= 10; ++t1)
                for (std::size_t t2 = 0; t2 <= 10; ++t2)
                    if (brick::step_count(n, mb, t2) * (t1 + 1) != brick::step_count(n, mb, t1) * (t2 + 1))
                        v.fail("not linear in t");
    // The doubling ratio tends to 4 from below and reaches 3.5 once
    // n >= 1.5 (m + 1); the sweep starts where that holds for m <= 4.
    double lo = 10, hi = 0;
    for (std::size_t n = 8; n <= 64; ++n)
        for (std::size_t mb = 1; mb <= 4; ++mb)
            for (std::size_t t = 0; t <= 10; ++t) {
                const double ratio = static_cast<double>(brick::step_count(2 * n, mb, t))
                                     / static_cast<double>(brick::step_count(n, mb, t));
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
    if (lo < 3.5 || hi > 4.5)
        v.fail("doubling ratio out of range");
    const double small = static_cast<double>(brick::step_count(8, 3, 1)) / static_cast<double>(brick::step_count(4, 3, 1));
    std::ostringstream d;
    d.precision(3);
    d << "linear in t; n->2n ratio in [" << lo << ", " << hi << "] for 8 <= n <= 64, m <= 4 (n=4, m=3 gives "
      << small << ")";
    if (v.pass)
        v.detail = d.str();
    return v;
}

Verdict fairness()
{
    Verdict v;
    const auto m = example_machine();
    constexpr int samples = 10000;
    int f2 = 0, f4 = 0;
    brick::RunOptions o;
    o.mode = brick::RunMode::sample;
    for (int s = 0; s < samples; ++s) {
        o.rng_seed = static_cast<std::uint64_t>(s);
        const auto r = brick::run_word(m.nfa, m.code, { "100" }, o);
        const auto chosen = r.branches.front().periods.front().chosen;
        f2 += chosen == 1;
        f4 += chosen == 3;
    }
    const double p2 = f2 / static_cast<double>(samples);
    const double p4 = f4 / static_cast<double>(samples);
    if (f2 + f4 != samples)
        v.fail("a sample chose neither f2 nor f4");
    if (std::abs(p2 - 0.5) > 0.02 || std::abs(p4 - 0.5) > 0.02)
        v.fail("frequencies " + std::to_string(p2) + " / " + std::to_string(p4));
    if (v.pass)
        v.detail = "f2 " + std::to_string(f2) + ", f4 " + std::to_string(f4) + " of " + std::to_string(samples);
    return v;
}

Verdict codec_round_trips()
{
    using brick::Flag;
    Verdict v;
    std::mt19937_64 rng(31337);
    constexpr int cases = 1000;
    for (int trial = 0; trial < cases; ++trial) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
        const auto mbits = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        std::string q;
        std::vector<Flag> flags;
        for (std::size_t k = 0; k < n; ++k) {
            q += gen::coin(rng) ? '1' : '0';
            flags.push_back(gen::coin(rng) ? Flag::Y : Flag::N);
        }
        const auto row = seed::decode_state_row(seed::encode_state_row(q, flags));
        if (row.q_code != q || row.flags != flags)
            v.fail("state row case " + std::to_string(trial));

        Encoding code;
        code.letter_bits = mbits;
        std::vector<std::string> pool;
        for (std::size_t i = 0; i < (std::size_t{ 1 } << mbits); ++i) {
            std::string bits;
            for (std::size_t b = mbits; b-- > 0;)
                bits += (i >> b & 1U) ? '1' : '0';
            pool.push_back(bits);
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t letters = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<int>(pool.size())));
        for (std::size_t i = 0; i < letters; ++i)
            code.letter_code["a" + std::to_string(i)] = pool[i];
        Word w;
        const int len = gen::uniform(rng, 0, 6);
        for (int i = 0; i < len; ++i)
            w.push_back("a" + std::to_string(gen::uniform(rng, 0, static_cast<int>(letters) - 1)));
        if (seed::decode_input_column(seed::encode_input_column(w, code, n), code, n) != w)
            v.fail("input column case " + std::to_string(trial));
    }
    if (v.pass)
        v.detail = std::to_string(cases) + " random state rows and input columns, n <= 8, m <= 4";
    return v;
}

Verdict brick_closure()
{
    Verdict v;
    const auto defs = harness::load_definitions(data + "/glider.defs", data + "/glider.envs");
    const auto automaton = harness::explore_closure(defs, { "glider-T", "glider-B" });
    if (!automaton.closed())
        v.fail("unclassified fold: " + automaton.failures.front().message);
    if (automaton.environments.size() != 2)
        v.fail(std::to_string(automaton.environments.size()) + " environments");
    const std::vector<BeadType> top{ "588", "587", "582", "581" };
    const std::vector<BeadType> bottom{ "590", "585", "584", "579" };
    for (const auto& b : automaton.bricks) {
        if (b.exposed != (b.entry == harness::Height::T ? top : bottom))
            v.fail("wrong exposure for " + b.name);
        if (b.exit != b.entry)
            v.fail(b.name + " changes height");
    }
    for (const auto& e : automaton.edges)
        if (defs.environment(e.to).entry != e.label)
            v.fail("edge label does not match the successor's entry");
    if (automaton.bricks.size() != 2)
        v.fail("expected two bricks");
    if (v.pass)
        v.detail = "2 environments, edges T and B, exposures 588,587,582,581 (top) and 590,585,584,579 (bottom)";
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        { "glider reproduction", glider_reproduction },
        { "stabilization oracle equivalence", oracle_equivalence },
        { "NFA language equivalence", language_equivalence },
        { "worked example modules", worked_example },
        { "halting", halting },
        { "step-count scaling", step_scaling },
        { "two-choice fairness", fairness },
        { "codec round trips", codec_round_trips },
        { "glider brick closure", brick_closure },
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        failed += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << v.detail
                  << " (" << ms << " ms)\n";
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << '/' << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
