#include "monalg/app.hpp"

#include "monalg/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace monalg {

namespace {

int cmd_analyze(const std::string& text, bool machine, std::ostream& out) {
    AnalysisReport report = analyze(parse_full_finite(text));
    out << (machine ? format_machine(report) : format_human(report));
    return kExitOk;
}

int cmd_staircase(const std::string& text, std::ostream& out) {
    ParsedIdeal parsed = parse_full_finite(text);
    out << "ideal: (" << render_ideal(parsed.ideal, parsed.source.variables) << ")\n";
    out << staircase_diagram(parsed.ideal);
    return kExitOk;
}

int cmd_weights(const std::string& text, std::ostream& out) {
    out << format_weights(weight_data_of(parse_ideal(text)));
    return kExitOk;
}

int cmd_roundtrip_one(const std::string& text, std::ostream& out) {
    ParsedIdeal parsed = parse_full_finite(text);
    RoundTrip rt = round_trip(parsed.ideal);
    if (rt.ok) {
        out << "OK\n";
        return kExitOk;
    }
    out << "MISMATCH\n";
    out << "  original:      " << render_ideal(rt.original, parsed.source.variables) << "\n";
    out << "  reconstructed: " << render_ideal(rt.reconstructed, parsed.source.variables) << "\n";
    return kExitMismatch;
}

int cmd_roundtrip_random(std::size_t count, std::size_t n, int max_exp, std::uint64_t seed, std::ostream& out) {
    if (n == 0) throw MonomialError(ErrorCode::DimensionMismatch, "--n must be positive");
    std::mt19937_64 rng(seed);
    out << "seed " << seed << "\n";
    std::size_t passed = 0;
    for (std::size_t k = 0; k < count; ++k) {
        MonomialIdeal ideal = random_full_finite_ideal(n, max_exp, rng);
        RoundTrip rt = round_trip(ideal);
        if (rt.ok) {
            ++passed;
            out << "OK " << render_ideal(ideal) << "\n";
        } else {
            out << "MISMATCH " << render_ideal(ideal) << " -> " << render_ideal(rt.reconstructed) << "\n";
        }
    }
    out << passed << "/" << count << " OK\n";
    return passed == count ? kExitOk : kExitMismatch;
}

int cmd_isocheck(const std::string& a_text, const std::string& b_text, std::ostream& out) {
    ParsedIdeal a = parse_full_finite(a_text);
    ParsedIdeal b = parse_full_finite(b_text);
    std::optional<Permutation> sigma = iso_check(a.ideal, b.ideal);
    if (!sigma) {
        out << "not isomorphic\n";
        return kExitMismatch;
    }
    out << "isomorphic via " << to_string(*sigma) << " (";
    for (std::size_t i = 0; i < sigma->size(); ++i)
        out << (i ? ", " : "") << a.source.variables[i] << " -> " << b.source.variables[(*sigma)(i)];
    out << ")\n";
    return kExitOk;
}

int cmd_reconstruct(const std::string& path, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read weights file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    MonomialIdeal ideal = reconstruct_ideal(parse_weights(buffer.str()));
    out << render_ideal(ideal) << "\n";
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derivation weight data of finite monomial algebras K[x]/I", "monalg"};
    app.require_subcommand(1);

    std::string ideal_a, ideal_b, weights_path;
    bool machine = false;
    std::size_t random_count = 0, random_n = 2;
    int max_exp = 6;
    std::uint64_t seed = 1;

    auto* analyze_cmd = app.add_subcommand("analyze", "Weight decomposition, automorphism data and symmetries");
    analyze_cmd->add_option("ideal", ideal_a, "Monomial ideal, e.g. \"y^3, x*y, x^3\"")->required();
    analyze_cmd->add_flag("--machine", machine, "Line-oriented machine-readable records");

    auto* staircase_cmd = app.add_subcommand("staircase", "Text diagram of the staircase and derivation degrees");
    staircase_cmd->add_option("ideal", ideal_a, "Monomial ideal in one or two variables")->required();

    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Reconstruct the ideal from its weight data");
    roundtrip_cmd->add_option("ideal", ideal_a, "Monomial ideal");
    auto* random_opt = roundtrip_cmd->add_option("--random", random_count, "Number of random ideals");
    roundtrip_cmd->add_option("--n", random_n, "Number of variables for random ideals")->needs(random_opt);
    roundtrip_cmd->add_option("--max-exp", max_exp, "Largest pure-power exponent")->needs(random_opt);
    roundtrip_cmd->add_option("--seed", seed, "Random seed")->needs(random_opt);

    auto* iso_cmd = app.add_subcommand("isocheck", "Decide isomorphism of two monomial algebras");
    iso_cmd->add_option("ideal_a", ideal_a, "First ideal")->required();
    iso_cmd->add_option("ideal_b", ideal_b, "Second ideal")->required();

    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Recover an ideal from a weights file");
    reconstruct_cmd->add_option("--weights", weights_path, "File of \"a1 ... an dim\" records")->required();

    auto* weights_cmd = app.add_subcommand("weights", "Write the weight data of an ideal as a weights file");
    weights_cmd->add_option("ideal", ideal_a, "Monomial ideal")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out;
        app.exit(e, help_out, err);
        return kExitUsage;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(ideal_a, machine, out);
        if (*staircase_cmd) return cmd_staircase(ideal_a, out);
        if (*weights_cmd) return cmd_weights(ideal_a, out);
        if (*iso_cmd) return cmd_isocheck(ideal_a, ideal_b, out);
        if (*reconstruct_cmd) return cmd_reconstruct(weights_path, out);
        if (*roundtrip_cmd) {
            if (*random_opt) {
                if (!ideal_a.empty()) {
                    err << "roundtrip: give either an ideal or --random, not both\n";
                    return kExitUsage;
                }
                return cmd_roundtrip_random(random_count, random_n, max_exp, seed, out);
            }
            if (ideal_a.empty()) {
                err << "roundtrip: an ideal or --random N is required\n";
                return kExitUsage;
            }
            return cmd_roundtrip_one(ideal_a, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace monalg
