#include "oritatami/cli.hpp"
#include "oritatami/glider.hpp"
#include "oritatami/render.hpp"
#include "oritatami/seed_codec.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace oritatami;

namespace {

const std::string data = ORITATAMI_DATA_DIR;

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return { code, out.str(), err.str() };
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "oritatami_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("svg of a single bead")
{
    const auto svg = render(Conformation({ { 0, 0 } }, { "a" }), { RenderFormat::svg, 10.0 });
    CHECK(count(svg, "<circle") == 1);
    CHECK(svg.find("cx=\"0.00\" cy=\"0.00\"") != std::string::npos);
    CHECK(count(svg, "<polyline") == 0);
}

TEST_CASE("svg of an empty conformation")
{
    const auto svg = render(Conformation{}, {});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<circle") == 0);
    CHECK(render(Conformation{}, { RenderFormat::ascii }).empty());
}

TEST_CASE("svg draws one dashed segment per bond")
{
    const auto c = fold_all(glider::system(2)).front().conformation;
    const auto svg = render(c);
    CHECK(count(svg, "class=\"bond\"") == static_cast<std::size_t>(-energy(c)));
    CHECK(count(svg, "<circle") == c.size());
    CHECK(count(svg, "<polyline") == 1);
    CHECK(svg == render(c));
    RenderOptions bare;
    bare.show_bonds = false;
    bare.label_beads = false;
    CHECK(count(render(c, bare), "class=\"bond\"") == 0);
    CHECK(count(render(c, bare), "<text") == 0);
    CHECK_THROWS(render(c, { RenderFormat::svg, 0.0 }));
}

TEST_CASE("svg places y upward")
{
    const auto svg = render(Conformation({ { 0, 0 }, { 0, 1 } }, { "a", "b" }), { RenderFormat::svg, 10.0 });
    CHECK(svg.find("cx=\"5.00\" cy=\"-8.66\"") != std::string::npos);
}

TEST_CASE("ascii rows")
{
    // Rows 0, -1, -2 of the seed; row -1 sits half a cell to the right and
    // 587 at (1,-2) lies straight under 585.
    const auto text = render(glider::seed(), { RenderFormat::ascii });
    std::istringstream lines(text);
    std::string row0, row1, row2;
    std::getline(lines, row0);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(row0 == "585 590");
    CHECK(row1 == "  586 589");
    CHECK(row2 == "587 588");
    CHECK(text.find("bond 1-6\n") != std::string::npos);
}

TEST_CASE("run-nfa exit codes")
{
    const auto accept = cli({ "run-nfa", data + "/example.nfa", "--word", "100", "--mode", "enumerate" });
    CHECK(accept.code == 0);
    CHECK(accept.out.find("\nACCEPT\n") != std::string::npos);
    CHECK(accept.out.find("period 1: 2 branches") != std::string::npos);

    const auto reject = cli({ "run-nfa", data + "/example.nfa", "--word", "100 100" });
    CHECK(reject.code == 1);
    CHECK(reject.out.find("REJECT") != std::string::npos);

    const auto report = scratch("report.txt");
    const auto sampled = cli({ "run-nfa", data + "/example.nfa", "--word", "100", "--mode", "sample", "--rng-seed", "4",
                               "--report", report.string() });
    CHECK(slurp(report) == sampled.out);
    CHECK(cli({ "run-nfa", data + "/example.nfa", "--word", "100", "--mode", "sample", "--rng-seed", "4" }).out
          == sampled.out);
}

TEST_CASE("fold writes a trace and a drawing")
{
    const auto svg = scratch("g.svg");
    const auto tsv = scratch("g.tsv");
    const auto r = cli({ "fold", data + "/glider.sys", "--svg", svg.string(), "--trace", tsv.string() });
    CHECK(r.code == 0);
    CHECK(r.out.find("deterministic yes") != std::string::npos);
    CHECK(r.out.find("energy -72") != std::string::npos);
    const auto drawing = slurp(svg);
    CHECK(count(drawing, "class=\"bond\"") == 72);
    CHECK(count(slurp(tsv), "\n") == 120);

    const auto again = cli({ "fold", data + "/glider.sys", "--mode", "enumerate", "--svg", svg.string() });
    CHECK(again.out.find("outcomes 1") != std::string::npos);
    CHECK(slurp(svg) == drawing);
}

TEST_CASE("compile emits a decodable seed")
{
    const auto out = scratch("seed.txt");
    const auto r = cli({ "compile", data + "/example.nfa", "--word", "100", "--out", out.string() });
    REQUIRE(r.code == 0);
    const auto doc = load_nfa(data + "/example.nfa");
    const auto code = assign_codes(augment(doc.nfa, doc.sink, doc.order), doc.overrides);
    std::ifstream in(out);
    const auto decoded = seed::decode_seed_stanza(in, code, 4);
    CHECK(decoded.letters == Word{ "100", "$" });
    CHECK(decoded.state.q_code == "1011");
}

TEST_CASE("check-bricks and stats")
{
    const auto r = cli({ "check-bricks", data + "/glider.defs", data + "/glider.envs" });
    CHECK(r.code == 0);
    CHECK(r.out.find("glider-T -T-> glider-T") != std::string::npos);
    CHECK(r.out.find("glider-B -B-> glider-B") != std::string::npos);

    const auto s = cli({ "stats", data + "/example.nfa", "--word-len", "1" });
    CHECK(s.code == 0);
    CHECK(s.out.find("steps 384\n") != std::string::npos);
}

TEST_CASE("failures exit nonzero with a one-line diagnostic")
{
    const std::vector<std::vector<std::string>> failing{
        { "fold", "/nonexistent.sys" },
        { "run-nfa", data + "/example.nfa", "--word", "0" },
        { "stats", data + "/glider.sys", "--word-len", "1" },
        { "check-bricks", data + "/glider.envs", data + "/glider.defs" },
    };
    for (const auto& args : failing) {
        const auto r = cli(args);
        CHECK(r.code == 2);
        CHECK(count(r.err, "\n") == 1);
    }
    CHECK(cli({}).code == 2);
    CHECK(cli({ "bogus" }).code == 2);
    CHECK(cli({ "run-nfa", data + "/example.nfa" }).code == 2);
    CHECK(cli({ "fold", data + "/glider.sys", "--mode", "fast" }).code == 2);
    CHECK(cli({ "--help" }).code == 0);
}
