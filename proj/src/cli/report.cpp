#include "monalg/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace monalg {

namespace {

std::string join_coords(const ExponentVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_covector(const HomogeneousDerivation& d) {
    std::string out;
    for (std::size_t i = 0; i < d.covector.size(); ++i) {
        if (i) out += " ";
        out += to_string(d.covector[i]);
    }
    return out;
}

std::string join_perm(const Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(p(i) + 1);
    }
    return out;
}

} // namespace

RoundTrip round_trip(const MonomialIdeal& ideal) {
    MonomialIdeal back = reconstruct_ideal(weight_data_of(ideal));
    bool ok = back == ideal;
    return RoundTrip{ok, ideal, std::move(back)};
}

AnalysisReport analyze(const ParsedIdeal& parsed) {
    const MonomialIdeal& ideal = parsed.ideal;
    require_full_finite(ideal);
    const CoSupport c = cosupport(ideal);
    AnalysisReport report{parsed.source.variables,
                          ideal,
                          c.size(),
                          c.points(),
                          weight_decomposition(ideal),
                          aut_weight_report(ideal),
                          ideal.dim() <= kMaxPermutationDim ? perm_symmetries(ideal) : std::vector<Permutation>{},
                          round_trip(ideal).ok};
    return report;
}

std::string format_human(const AnalysisReport& r) {
    std::ostringstream os;
    os << "ideal: (" << render_ideal(r.ideal, r.variables) << ")\n";
    os << "variables:";
    for (const auto& v : r.variables) os << " " << v;
    os << "\n";
    os << "algebra dimension: " << r.algebra_dim << "\n";
    os << "basis monomials:";
    for (std::size_t i = 0; i < r.cosupport.size(); ++i)
        os << (i ? ", " : " ") << render_monomial(r.cosupport[i], r.variables);
    os << "\n";

    os << "weight decomposition (" << r.weights.spaces.size() << " degrees):\n";
    for (const auto& [degree, space] : r.weights.spaces) {
        os << "  " << to_string(degree) << (degree.is_nonnegative() ? " inner" : " outer") << "  dim "
           << space.dim() << "  ";
        for (std::size_t i = 0; i < space.basis.size(); ++i) os << (i ? ", " : "") << to_string(space.basis[i]);
        os << "\n";
    }

    os << "automorphism group:\n";
    os << "  torus rank: " << r.aut.torus_rank << "\n";
    os << "  roots:";
    if (r.aut.roots.empty()) os << " none";
    for (const auto& [degree, dim] : r.aut.roots) os << " " << to_string(degree) << ":" << dim;
    os << "\n";
    os << "  Lie algebra dimension: " << r.aut.lie_dim << "\n";
    os << "  variable permutations preserving I: " << r.symmetries.size();
    for (const auto& p : r.symmetries) os << " " << to_string(p);
    os << "\n";
    os << "round trip: " << (r.round_trip_ok ? "ok" : "MISMATCH") << "\n";
    return os.str();
}

std::string format_machine(const AnalysisReport& r) {
    std::ostringstream os;
    os << "VARS";
    for (const auto& v : r.variables) os << " " << v;
    os << "\n";
    os << "IDEAL " << render_ideal(r.ideal, r.variables) << "\n";
    for (const auto& g : r.ideal.generators()) os << "GEN " << join_coords(g) << "\n";
    os << "ALGDIM " << r.algebra_dim << "\n";
    for (const auto& p : r.cosupport) os << "BASIS " << join_coords(p) << "\n";
    for (const auto& [degree, space] : r.weights.spaces) {
        os << "DEG " << join_coords(degree) << " : " << space.dim() << "\n";
        for (const auto& d : space.basis) os << "DERIV " << join_coords(degree) << " : " << join_covector(d) << "\n";
    }
    os << "TORUS " << r.aut.torus_rank << "\n";
    for (const auto& [degree, dim] : r.aut.roots) os << "ROOT " << join_coords(degree) << " : " << dim << "\n";
    os << "LIEDIM " << r.aut.lie_dim << "\n";
    for (const auto& p : r.symmetries) os << "PERM " << join_perm(p) << "\n";
    os << "ROUNDTRIP " << (r.round_trip_ok ? "ok" : "mismatch") << "\n";
    return os.str();
}

char staircase_glyph(const MonomialIdeal& ideal, const ExponentVector& cell) {
    if (cell.is_nonnegative()) {
        if (contains(ideal, cell)) return '#';
        return weight_dim(ideal, cell) > 0 ? 'G' : 'o';
    }
    return weight_dim(ideal, cell) > 0 ? 'R' : '.';
}

std::string staircase_diagram(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.dim();
    if (n >= 3)
        throw MonomialError(ErrorCode::UnsupportedDimension, "staircase diagrams need one or two variables");
    const ExponentVector box = cosupport(ideal).box();

    const int x_hi = box[0] + 1;
    const int y_hi = n == 2 ? box[1] + 1 : 0;
    const int y_lo = n == 2 ? -1 : 0;

    auto cell_text = [](const std::string& s) { return std::string(3 - std::min<std::size_t>(3, s.size()), ' ') + s; };

    std::ostringstream os;
    for (int y = y_hi; y >= y_lo; --y) {
        os << (n == 2 ? cell_text(std::to_string(y)) : std::string("   ")) << " |";
        for (int x = -1; x <= x_hi; ++x) {
            ExponentVector cell = n == 2 ? ExponentVector{x, y} : ExponentVector{x};
            os << cell_text(std::string(1, staircase_glyph(ideal, cell)));
        }
        os << "\n";
    }
    os << "    +" << std::string(static_cast<std::size_t>(3 * (x_hi + 2)), '-') << "\n";
    os << "     ";
    for (int x = -1; x <= x_hi; ++x) os << cell_text(std::to_string(x));
    os << "\n";
    os << "legend: # in I, G inner degree with derivations, R outer degree with derivations, "
          "o basis monomial, . empty\n";
    return os.str();
}

RestrictedWeightData parse_weights(std::string_view text) {
    RestrictedWeightData data;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long> values;
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size() || used == 0)
                throw SyntaxError(1, "line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
            values.push_back(v);
        }
        if (values.empty()) continue;
        if (values.size() < 2)
            throw SyntaxError(1, "line " + std::to_string(line_no) + ": expected a degree followed by a dimension");
        const std::size_t n = values.size() - 1;
        if (data.n == 0) data.n = n;
        if (data.n != n)
            throw MonomialError(ErrorCode::DimensionMismatch, "line " + std::to_string(line_no) + ": expected " +
                                                                  std::to_string(data.n) + " coordinates");
        std::vector<int> coords(values.begin(), values.end() - 1);
        auto [it, inserted] = data.dims.emplace(ExponentVector(std::move(coords)), static_cast<int>(values.back()));
        if (!inserted)
            throw SyntaxError(1, "line " + std::to_string(line_no) + ": degree " + to_string(it->first) +
                                     " listed twice");
    }
    if (data.n == 0) throw SyntaxError(1, "no weight records");
    return data;
}

std::string format_weights(const RestrictedWeightData& data) {
    std::ostringstream os;
    os << "# degree (" << data.n << " coordinates) followed by dim g_alpha\n";
    for (const auto& [alpha, dim] : data.dims) os << join_coords(alpha) << " " << dim << "\n";
    return os.str();
}

MonomialIdeal random_full_finite_ideal(std::size_t n, int max_exp, std::mt19937_64& rng) {
    if (n == 0) throw MonomialError(ErrorCode::DimensionMismatch, "ambient dimension must be positive");
    if (max_exp < 2)
        throw MonomialError(ErrorCode::NotFull, "a full ideal needs pure-power exponents of at least 2");
    std::uniform_int_distribution<int> exponent(1, max_exp);
    std::uniform_int_distribution<std::size_t> extras(0, n);
    while (true) {
        std::vector<ExponentVector> gens;
        ExponentVector bounds(n);
        for (std::size_t i = 0; i < n; ++i) {
            bounds[i] = exponent(rng);
            ExponentVector g(n);
            g[i] = bounds[i];
            gens.push_back(std::move(g));
        }
        const std::size_t count = extras(rng);
        for (std::size_t k = 0; k < count; ++k) {
            ExponentVector g(n);
            for (std::size_t i = 0; i < n; ++i) g[i] = std::uniform_int_distribution<int>(0, bounds[i])(rng);
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
        MonomialIdeal ideal(n, std::move(gens));
        if (is_full(ideal)) return ideal;
    }
}

} // namespace monalg
