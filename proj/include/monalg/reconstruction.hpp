#ifndef MONALG_RECONSTRUCTION_HPP
#define MONALG_RECONSTRUCTION_HPP

// The inverse problem: recover a monomial ideal from the dimensions of the
// weight spaces of its derivation algebra.
//
// For a finite set C of lattice points the weight function is
//     m_C(alpha) = #{ i : alpha + e_i in C }.
// m_C determines C: sweeping the first coordinate a = 0, 1, 2, ... and writing
// C_a for the points with first coordinate <= a,
//     1_C(alpha) = m_C(alpha - e_1) - m_{C_{a-1}}(alpha - e_1)   when alpha_1 = a.
// For a co-support, m_C agrees with dim g_alpha on inner degrees, and the
// outer values that the torus cannot see directly are forced to 1 next to a
// positive inner value.

#include "monalg/derivations.hpp"
#include "monalg/monomial_ideal.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace monalg {

/// Finitely supported map Z^n -> Z_{>=0}; absent keys are 0, stored values
/// are positive.
struct WeightFunction {
    std::size_t n = 0;
    std::map<ExponentVector, int> values;

    int at(const ExponentVector& alpha) const {
        auto it = values.find(alpha);
        return it == values.end() ? 0 : it->second;
    }
    friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

/// dim g_alpha for the degrees the torus action exposes: inner degrees and
/// outer degrees alpha with alpha + e_k inner for some k. Absent keys are 0.
struct RestrictedWeightData {
    std::size_t n = 0;
    std::map<ExponentVector, int> dims;

    int at(const ExponentVector& alpha) const {
        auto it = dims.find(alpha);
        return it == dims.end() ? 0 : it->second;
    }
    friend bool operator==(const RestrictedWeightData&, const RestrictedWeightData&) = default;
};

/// Outer degree alpha with alpha + e_k inner: the k, if any.
std::optional<std::size_t> inner_neighbor_axis(const ExponentVector& alpha);

WeightFunction weight_function_of(std::span<const ExponentVector> points, std::size_t n);
WeightFunction weight_function_of(const CoSupport& c);

/// Recovers the point set behind m, assuming it sits in Z^n_{>=0}.
/// Throws InconsistentWeightFunction when m is not of the form m_C.
std::vector<ExponentVector> reconstruct_points(const WeightFunction& m);

/// As reconstruct_points, additionally requiring a staircase.
CoSupport reconstruct_cosupport(const WeightFunction& m);

/// Group-visible data of an ideal: every nonzero weight-space dimension.
RestrictedWeightData weight_data_of(const WeightDecomposition& wd);
RestrictedWeightData weight_data_of(const MonomialIdeal& ideal);

/// Fills in the outer values of m_I that dim g_alpha does not show.
WeightFunction extend_restricted(const RestrictedWeightData& data);

MonomialIdeal reconstruct_ideal(const RestrictedWeightData& data);

/// Least permutation (lexicographic one-line order) with sigma . I1 = I2.
std::optional<Permutation> iso_check(const MonomialIdeal& a, const MonomialIdeal& b);

RestrictedWeightData permuted(const RestrictedWeightData& data, const Permutation& sigma);

/// Least sigma with sigma . d1 = d2 (degrees relabelled, dims equal).
std::optional<Permutation> weight_data_iso_check(const RestrictedWeightData& a, const RestrictedWeightData& b);

} // namespace monalg

#endif // MONALG_RECONSTRUCTION_HPP
