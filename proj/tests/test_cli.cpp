#include "corpus.hpp"
#include "oracles.hpp"

#include "monalg/app.hpp"
#include "monalg/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace monalg;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(MONALG_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in) << "missing golden file " << name;
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

bool has_line(const std::string& text, const std::string& line) {
    auto all = lines_of(text);
    return std::find(all.begin(), all.end(), line) != all.end();
}

// Independent glyph for one cell, from the generators and the Leibniz oracle.
char oracle_glyph(const MonomialIdeal& ideal, const ExponentVector& cell) {
    if (oracle::in_ideal(ideal, cell)) return '#';
    const bool derivations = oracle::derivation_space_dim(ideal, cell) > 0;
    if (cell.is_nonnegative()) return derivations ? 'G' : 'o';
    return derivations ? 'R' : '.';
}

} // namespace

TEST(CliAnalyze, MachineGoldens) {
    EXPECT_EQ(run({"analyze", "y^3, x*y, x^3", "--machine"}).out, golden("corner.machine"));
    EXPECT_EQ(run({"analyze", "x^2, y^2", "--machine"}).out, golden("square.machine"));
    EXPECT_EQ(run({"analyze", "x^3", "--machine"}).out, golden("cubic.machine"));
}

TEST(CliAnalyze, HumanGolden) { EXPECT_EQ(run({"analyze", "y^3, x*y, x^3"}).out, golden("corner.human")); }

TEST(CliAnalyze, CubicRecords) {
    auto r = run({"analyze", "x^3", "--machine"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(has_line(r.out, "ALGDIM 3"));
    EXPECT_TRUE(has_line(r.out, "ROOT 1 : 1"));
    EXPECT_TRUE(has_line(r.out, "LIEDIM 2"));
}

TEST(CliAnalyze, SquareRecords) {
    auto r = run({"analyze", "x^2, y^2", "--machine"});
    EXPECT_TRUE(has_line(r.out, "LIEDIM 4"));
    EXPECT_TRUE(has_line(r.out, "PERM 1 2"));
    EXPECT_TRUE(has_line(r.out, "PERM 2 1"));
    for (const auto& line : lines_of(r.out))
        if (line.rfind("ROOT", 0) == 0) EXPECT_EQ(line.find('-'), std::string::npos) << line;
}

TEST(CliAnalyze, CornerRoots) {
    auto r = run({"analyze", "y^3, x*y, x^3", "--machine"});
    EXPECT_TRUE(has_line(r.out, "ROOT -1 2 : 1"));
    EXPECT_TRUE(has_line(r.out, "ROOT 2 -1 : 1"));
}

TEST(CliAnalyze, EchoesVariableOrder) {
    auto r = run({"analyze", "z^2, y^3", "--machine"});
    EXPECT_TRUE(has_line(r.out, "VARS y z")) << r.out;
}

TEST(CliStaircase, Goldens) {
    EXPECT_EQ(run({"staircase", "y^3, x*y, x^3"}).out, golden("corner.staircase"));
    EXPECT_EQ(run({"staircase", "x^2, y^2"}).out, golden("square.staircase"));
    EXPECT_EQ(run({"staircase", "x^3"}).out, golden("cubic.staircase"));
}

TEST(CliStaircase, CubicRow) {
    auto diagram = staircase_diagram(parse_ideal("x^3"));
    EXPECT_EQ(lines_of(diagram).front(), "    |  .  G  G  o  #");
}

TEST(CliStaircase, SquareHasNoOuterRoots) {
    for (const auto& row : lines_of(staircase_diagram(parse_ideal("x^2, y^2"))))
        if (row.rfind("legend", 0) != 0) EXPECT_EQ(row.find('R'), std::string::npos) << row;
}

TEST(CliStaircase, RejectsThreeVariables) {
    auto r = run({"staircase", "x^2, y^2, z^2"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("UnsupportedDimension"), std::string::npos);
}

TEST(CliStaircase, GlyphsMatchOracleCellByCell) {
    auto corpus = monalg::testing::make_corpus(60, 31, 1, 2, 5);
    corpus.push_back(monalg::testing::corner());
    corpus.push_back(monalg::testing::square());
    for (const auto& ideal : corpus) {
        const auto rows = lines_of(staircase_diagram(ideal));
        const ExponentVector box = cosupport(ideal).box();
        const int x_hi = box[0] + 1;
        const int y_hi = ideal.dim() == 2 ? box[1] + 1 : 0;
        const int y_lo = ideal.dim() == 2 ? -1 : 0;
        ASSERT_GE(rows.size(), static_cast<std::size_t>(y_hi - y_lo + 1));
        for (int y = y_hi; y >= y_lo; --y) {
            const std::string& row = rows[static_cast<std::size_t>(y_hi - y)];
            for (int x = -1; x <= x_hi; ++x) {
                ExponentVector cell = ideal.dim() == 2 ? ExponentVector{x, y} : ExponentVector{x};
                const std::size_t at = 5 + 3 * static_cast<std::size_t>(x + 1) + 2;
                ASSERT_LT(at, row.size());
                EXPECT_EQ(row[at], oracle_glyph(ideal, cell)) << render_ideal(ideal) << " at " << to_string(cell);
            }
        }
    }
}

TEST(CliRoundtrip, Fixtures) {
    auto r = run({"roundtrip", "y^3, x*y, x^3"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "OK\n");
    EXPECT_EQ(run({"roundtrip", "x^2, y^2"}).code, kExitOk);
}

TEST(CliRoundtrip, RandomCorpus) {
    auto r = run({"roundtrip", "--random", "500", "--n", "3", "--max-exp", "6", "--seed", "7"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    auto lines = lines_of(r.out);
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines.front(), "seed 7");
    EXPECT_EQ(lines.back(), "500/500 OK");
    EXPECT_EQ(std::count_if(lines.begin(), lines.end(), [](const std::string& l) { return l.rfind("OK ", 0) == 0; }),
              500);
}

TEST(CliRoundtrip, RandomIsReproducible) {
    auto a = run({"roundtrip", "--random", "20", "--n", "2", "--seed", "99"});
    auto b = run({"roundtrip", "--random", "20", "--n", "2", "--seed", "99"});
    EXPECT_EQ(a.out, b.out);
}

TEST(CliIsocheck, Examples) {
    auto swap = run({"isocheck", "x^2, y^3", "x^3, y^2"});
    EXPECT_EQ(swap.code, kExitOk);
    EXPECT_EQ(swap.out, "isomorphic via [2 1] (x -> y, y -> x)\n");

    auto different = run({"isocheck", "y^3, x*y, x^3", "x^2, y^2"});
    EXPECT_EQ(different.code, kExitMismatch);
    EXPECT_EQ(different.out, "not isomorphic\n");

    auto same = run({"isocheck", "y^3, x*y, x^3", "y^3, x*y, x^3"});
    EXPECT_EQ(same.code, kExitOk);
    EXPECT_EQ(same.out, "isomorphic via [1 2] (x -> x, y -> y)\n");
}

TEST(CliReconstruct, FromWeightsFile) {
    const auto path = std::filesystem::temp_directory_path() / "monalg_test_corner.weights";
    {
        std::ofstream f(path);
        f << format_weights(weight_data_of(monalg::testing::corner()));
    }
    auto r = run({"reconstruct", "--weights", path.string()});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "y^3, x*y, x^3\n");
    std::filesystem::remove(path);
}

TEST(CliReconstruct, InnerDataWithoutOuterDegrees) {
    // Only inner degrees: absent outer keys are 0, which gives (x^2, y^2).
    const auto path = std::filesystem::temp_directory_path() / "monalg_test_inner.weights";
    {
        std::ofstream f(path);
        f << "# inner degrees only\n0 0 2\n1 0 1\n0 1 1\n";
    }
    auto r = run({"reconstruct", "--weights", path.string()});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "y^2, x^2\n");
    std::filesystem::remove(path);
}

TEST(CliWeightsFile, ParseErrors) {
    EXPECT_THROW(parse_weights("0 0 two\n"), SyntaxError);
    EXPECT_THROW(parse_weights("0 0 2\n0 0 1\n"), SyntaxError);
    EXPECT_THROW(parse_weights("# nothing\n"), SyntaxError);
    EXPECT_THROW(parse_weights("0 0 2\n1 1\n0 1 0 1\n"), MonomialError);
    auto data = parse_weights("0 0 2  # origin\n\n-1 2 1\n");
    EXPECT_EQ(data.n, 2u);
    EXPECT_EQ(data.at({-1, 2}), 1);
    EXPECT_EQ(data.at({5, 5}), 0);
}

TEST(CliWeightsFile, FormatParseRoundTrip) {
    for (const auto& ideal : monalg::testing::make_corpus(50, 33)) {
        auto data = weight_data_of(ideal);
        EXPECT_EQ(parse_weights(format_weights(data)), data);
    }
}

TEST(CliExitCodes, UsageAndValidation) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"analyze"}).code, kExitUsage);
    EXPECT_EQ(run({"analyze", "x, y"}).code, kExitUsage);
    EXPECT_EQ(run({"analyze", "x*y"}).code, kExitUsage);
    EXPECT_EQ(run({"roundtrip", "x^2, q"}).code, kExitUsage);
    EXPECT_EQ(run({"isocheck", "x^2"}).code, kExitUsage);
    EXPECT_EQ(run({"reconstruct", "--weights", "/nonexistent/monalg.weights"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);

    auto bad = run({"analyze", "x^2, y^2,"});
    EXPECT_EQ(bad.code, kExitUsage);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_EQ(bad.err.rfind("error: ", 0), 0u) << bad.err;
}

TEST(CliReport, RoundTripFieldMatchesRoundtripCommand) {
    for (const auto& ideal : monalg::testing::make_corpus(100, 35)) {
        const std::string text = render_ideal(ideal);
        auto report = run({"analyze", text, "--machine"});
        ASSERT_EQ(report.code, kExitOk) << report.err;
        auto verdict = run({"roundtrip", text});
        const bool field_ok = has_line(report.out, "ROUNDTRIP ok");
        EXPECT_TRUE(field_ok || has_line(report.out, "ROUNDTRIP mismatch"));
        EXPECT_EQ(field_ok, verdict.code == kExitOk) << text;
    }
}

TEST(CliReport, MachineReportAgreesWithLibrary) {
    for (const auto& ideal : monalg::testing::make_corpus(40, 37, 1, 3)) {
        auto out = run({"analyze", render_ideal(ideal), "--machine"}).out;
        auto weights = weight_decomposition(ideal);
        std::size_t deg_lines = 0;
        for (const auto& line : lines_of(out)) deg_lines += line.rfind("DEG ", 0) == 0;
        EXPECT_EQ(deg_lines, weights.spaces.size());
        for (const auto& [alpha, space] : weights.spaces) {
            std::string line = "DEG";
            for (int c : alpha) line += " " + std::to_string(c);
            line += " : " + std::to_string(space.dim());
            EXPECT_TRUE(has_line(out, line)) << line;
        }
    }
}
