#ifndef MONALG_REPORT_HPP
#define MONALG_REPORT_HPP

#include "monalg/derivations.hpp"
#include "monalg/parse.hpp"
#include "monalg/reconstruction.hpp"

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace monalg {

struct RoundTrip {
    bool ok = false;
    MonomialIdeal original;
    MonomialIdeal reconstructed;
};

/// Weight data of the ideal, reconstructed back into an ideal.
RoundTrip round_trip(const MonomialIdeal& ideal);

struct AnalysisReport {
    std::vector<std::string> variables;
    MonomialIdeal ideal;
    std::size_t algebra_dim = 0;
    std::vector<ExponentVector> cosupport;
    WeightDecomposition weights;
    AutWeightReport aut;
    std::vector<Permutation> symmetries;
    bool round_trip_ok = false;
};

AnalysisReport analyze(const ParsedIdeal& parsed);

std::string format_human(const AnalysisReport& report);

/// Line-oriented records, one per line:
///   VARS, IDEAL, GEN, ALGDIM, BASIS, DEG ... : dim, DERIV ... : covector,
///   TORUS, ROOT ... : dim, LIEDIM, PERM, ROUNDTRIP.
std::string format_machine(const AnalysisReport& report);

/// Grid over [-1, box+1]^2 (highest y first; a single row for n = 1):
///   '#' supp(I), 'G' inner degree with g != 0, 'R' outer degree with g != 0,
///   'o' remaining basis monomial, '.' anything else.
/// Throws UnsupportedDimension for n >= 3.
std::string staircase_diagram(const MonomialIdeal& ideal);

/// Glyph of one cell, shared by the diagram and its tests.
char staircase_glyph(const MonomialIdeal& ideal, const ExponentVector& cell);

/// Weights file: one "a1 ... an dim" record per line, '#' starts a comment.
RestrictedWeightData parse_weights(std::string_view text);
std::string format_weights(const RestrictedWeightData& data);

/// Pure powers x_i^{d_i} with d_i uniform in [1, max_exp], plus up to n
/// extra generators inside the box, minimalized; redrawn until full.
MonomialIdeal random_full_finite_ideal(std::size_t n, int max_exp, std::mt19937_64& rng);

} // namespace monalg

#endif // MONALG_REPORT_HPP
