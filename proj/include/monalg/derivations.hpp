#ifndef MONALG_DERIVATIONS_HPP
#define MONALG_DERIVATIONS_HPP

// Homogeneous derivations of a monomial algebra K[x]/I and the torus weight
// decomposition of its derivation Lie algebra g = sum_alpha g_alpha.
//
// A homogeneous derivation of degree alpha acts on monomials as
//     x^m  |->  p(m) x^{m + alpha}
// for a covector p. For inner alpha (alpha >= 0) every p gives a derivation of
// the quotient. For outer alpha only multiples of e_k^* survive, where k is the
// unique coordinate with alpha_k = -1 and every other coordinate is >= 0, and
// then only when the map sends the ideal into itself.

#include "monalg/linalg.hpp"
#include "monalg/monomial_ideal.hpp"
#include "monalg/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace monalg {

struct HomogeneousDerivation {
    ExponentVector degree;
    std::vector<Rational> covector; // coefficients on e_1^*, ..., e_n^*

    /// The derivation of the given degree with covector e_i^*.
    static HomogeneousDerivation basis(ExponentVector degree, std::size_t i);
    static HomogeneousDerivation zero(ExponentVector degree);

    std::size_t dim() const noexcept { return degree.size(); }
    Rational evaluate(const ExponentVector& m) const;
    bool has_zero_covector() const;

    friend bool operator==(const HomogeneousDerivation&, const HomogeneousDerivation&) = default;
};

/// "d[(1,0); e2*]" for basis covectors, "d[(1,0); (a,b)]" otherwise.
std::string to_string(const HomogeneousDerivation& d);

struct WeightSpace {
    ExponentVector degree;
    std::vector<HomogeneousDerivation> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

struct WeightDecomposition {
    std::size_t n = 0;
    std::map<ExponentVector, WeightSpace> spaces; // only degrees with dim > 0

    std::size_t total_dim() const;
    std::size_t dim_at(const ExponentVector& degree) const;
};

/// Matrix of the induced map on the quotient, columns and rows indexed by
/// the co-support in graded order.
struct DerivationMatrix {
    std::vector<ExponentVector> basis;
    SparseMatrix<Rational> entries;
};

/// Indices i (0-based) with alpha + e_i in the co-support.
std::vector<std::size_t> e_alpha_set(const MonomialIdeal& ideal, const ExponentVector& alpha);

/// Inner degrees: basis {d_{alpha, e_i^*} : i in E_alpha}. Throws NotInner.
WeightSpace inner_weight_space(const MonomialIdeal& ideal, const ExponentVector& alpha);
std::size_t inner_weight_dim(const MonomialIdeal& ideal, const ExponentVector& alpha);

/// The k with alpha_k = -1 and alpha_j >= 0 elsewhere. Throws NotOuter on
/// inner alpha.
std::optional<std::size_t> outer_shape(const ExponentVector& alpha);

/// d_{alpha, e_k^*} maps I into I; checked on the generators.
bool preserves_ideal(const MonomialIdeal& ideal, const ExponentVector& alpha, std::size_t k);

/// Outer degrees: at most the single derivation d_{alpha, e_k^*}.
WeightSpace outer_weight_space(const MonomialIdeal& ideal, const ExponentVector& alpha);
std::size_t outer_weight_dim(const MonomialIdeal& ideal, const ExponentVector& alpha);

WeightSpace weight_space(const MonomialIdeal& ideal, const ExponentVector& alpha);
std::size_t weight_dim(const MonomialIdeal& ideal, const ExponentVector& alpha);

/// All degrees with g_alpha != 0. Requires a full, finite ideal.
WeightDecomposition weight_decomposition(const MonomialIdeal& ideal);

/// d_{alpha,p} is a derivation of K[x] that maps I into I, so it induces a
/// derivation of the quotient. Works for any covector.
bool is_valid_on_quotient(const CoSupport& c, const HomogeneousDerivation& d);
bool is_valid_on_quotient(const MonomialIdeal& ideal, const HomogeneousDerivation& d);

/// The induced derivation on K[x]/I is zero: no basis monomial c has
/// c - alpha >= 0 with p(c - alpha) != 0.
bool is_trivial_on_quotient(const CoSupport& c, const HomogeneousDerivation& d);
bool is_trivial_on_quotient(const MonomialIdeal& ideal, const HomogeneousDerivation& d);

/// Throws NotADerivation when d does not induce a derivation of the quotient.
DerivationMatrix derivation_matrix(const CoSupport& c, const HomogeneousDerivation& d);
DerivationMatrix derivation_matrix(const MonomialIdeal& ideal, const HomogeneousDerivation& d);

/// [d1, d2] = d_{alpha+beta, p(beta) q - q(alpha) p}.
HomogeneousDerivation lie_bracket(const MonomialIdeal& ideal, const HomogeneousDerivation& d1,
                                  const HomogeneousDerivation& d2);

struct AutWeightReport {
    std::size_t torus_rank = 0;
    std::map<ExponentVector, std::size_t> roots; // nonzero degrees with their dims
    std::size_t lie_dim = 0;
    std::size_t algebra_dim = 0;
};

AutWeightReport aut_weight_report(const MonomialIdeal& ideal);

/// Variable permutations fixing the ideal, in lexicographic order. n <= 8.
std::vector<Permutation> perm_symmetries(const MonomialIdeal& ideal);

/// Degrees and bases relabelled by sigma.
WeightDecomposition permuted(const WeightDecomposition& wd, const Permutation& sigma);

inline constexpr std::size_t kMaxPermutationDim = 8;

} // namespace monalg

#endif // MONALG_DERIVATIONS_HPP
