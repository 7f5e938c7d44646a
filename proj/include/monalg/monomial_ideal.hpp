#ifndef MONALG_MONOMIAL_IDEAL_HPP
#define MONALG_MONOMIAL_IDEAL_HPP

// Monomial ideals of K[x_1..x_n] as antichains of exponent vectors, and the
// staircase (co-support) that indexes the monomial basis of the quotient.
// Everything here is exact integer lattice arithmetic.

#include "monalg/exponent.hpp"
#include "monalg/permutation.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace monalg {

/// Ideal generated by monomials, stored as its unique minimal generating set
/// sorted lexicographically ascending. The unit ideal is not representable.
class MonomialIdeal {
public:
    /// Minimalizes gens. Throws ZeroGenerator, NegativeExponent or
    /// DimensionMismatch.
    MonomialIdeal(std::size_t n, std::vector<ExponentVector> gens);

    std::size_t dim() const noexcept { return n_; }
    const std::vector<ExponentVector>& generators() const noexcept { return gens_; }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t n_;
    std::vector<ExponentVector> gens_;
};

/// Finite downward-closed subset of Z^n_{>=0}. Points are kept in graded
/// order (see GradedLess); that order is the basis order of the quotient.
class CoSupport {
public:
    /// Validates downward closure (which also forces 0 to be present).
    static CoSupport from_points(std::size_t n, std::vector<ExponentVector> points);

    std::size_t dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<ExponentVector>& points() const noexcept { return points_; }
    /// Componentwise maximum over the points.
    const ExponentVector& box() const noexcept { return box_; }

    bool contains(const ExponentVector& m) const { return index_of(m).has_value(); }
    /// Position of m in points(), if present.
    std::optional<std::size_t> index_of(const ExponentVector& m) const;

    friend bool operator==(const CoSupport& a, const CoSupport& b) {
        return a.n_ == b.n_ && a.points_ == b.points_;
    }

private:
    CoSupport() = default;

    std::size_t n_ = 0;
    std::vector<ExponentVector> points_;
    ExponentVector box_;
    std::vector<std::size_t> strides_;
    std::vector<long> grid_; // -1 when absent, else index into points_
};

MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t n);

/// m lies in supp(I): some generator divides x^m.
bool contains(const MonomialIdeal& ideal, const ExponentVector& m);

/// No variable x_i lies in the ideal.
bool is_full(const MonomialIdeal& ideal);

/// Every variable has a pure power among the generators.
bool is_finite(const MonomialIdeal& ideal);

/// Exponents d_i of the pure-power generators x_i^{d_i}, when all exist.
std::optional<ExponentVector> pure_power_bounds(const MonomialIdeal& ideal);

/// Throws InfiniteAlgebra / NotFull unless the quotient is a finite algebra
/// over a full ideal.
void require_full_finite(const MonomialIdeal& ideal);

/// supp^c(I). Requires a full, finite ideal.
CoSupport cosupport(const MonomialIdeal& ideal);

/// Minimal corners just outside a staircase; inverse of cosupport.
MonomialIdeal ideal_from_cosupport(const CoSupport& c);

/// The integer span of the points is all of Z^n.
bool weights_generate_lattice(std::span<const ExponentVector> points, std::size_t n);
bool weights_generate_lattice(const CoSupport& c);

/// sigma . I: relabel the variables of every generator.
MonomialIdeal permuted(const MonomialIdeal& ideal, const Permutation& sigma);

} // namespace monalg

#endif // MONALG_MONOMIAL_IDEAL_HPP
