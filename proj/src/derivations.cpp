#include "monalg/derivations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace monalg {

HomogeneousDerivation HomogeneousDerivation::basis(ExponentVector degree, std::size_t i) {
    HomogeneousDerivation d = zero(std::move(degree));
    d.covector.at(i) = 1;
    return d;
}

HomogeneousDerivation HomogeneousDerivation::zero(ExponentVector degree) {
    const std::size_t n = degree.size();
    return HomogeneousDerivation{std::move(degree), std::vector<Rational>(n, Rational(0))};
}

Rational HomogeneousDerivation::evaluate(const ExponentVector& m) const {
    if (m.size() != covector.size())
        throw MonomialError(ErrorCode::DimensionMismatch, "covector applied to " + to_string(m));
    Rational value = 0;
    for (std::size_t i = 0; i < covector.size(); ++i)
        if (m[i] != 0 && covector[i] != 0) value += covector[i] * m[i];
    return value;
}

bool HomogeneousDerivation::has_zero_covector() const {
    return std::all_of(covector.begin(), covector.end(), [](const Rational& q) { return q == 0; });
}

std::string to_string(const HomogeneousDerivation& d) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < d.covector.size(); ++i)
        if (d.covector[i] != 0) {
            ++nonzero;
            where = i;
        }
    std::string out = "d[" + to_string(d.degree) + "; ";
    if (nonzero == 1 && d.covector[where] == 1) return out + "e" + std::to_string(where + 1) + "*]";
    out += "(";
    for (std::size_t i = 0; i < d.covector.size(); ++i) {
        if (i) out += ",";
        out += to_string(d.covector[i]);
    }
    return out + ")]";
}

std::size_t WeightDecomposition::total_dim() const {
    return std::accumulate(spaces.begin(), spaces.end(), std::size_t{0},
                           [](std::size_t acc, const auto& kv) { return acc + kv.second.dim(); });
}

std::size_t WeightDecomposition::dim_at(const ExponentVector& degree) const {
    auto it = spaces.find(degree);
    return it == spaces.end() ? 0 : it->second.dim();
}

std::vector<std::size_t> e_alpha_set(const MonomialIdeal& ideal, const ExponentVector& alpha) {
    if (alpha.size() != ideal.dim())
        throw MonomialError(ErrorCode::DimensionMismatch, "degree " + to_string(alpha));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
        ExponentVector m = alpha.shifted(i, 1);
        if (m.is_nonnegative() && !contains(ideal, m)) out.push_back(i);
    }
    return out;
}

WeightSpace inner_weight_space(const MonomialIdeal& ideal, const ExponentVector& alpha) {
    if (!alpha.is_nonnegative())
        throw MonomialError(ErrorCode::NotInner, "degree " + to_string(alpha) + " has a negative coordinate");
    WeightSpace space{alpha, {}};
    for (std::size_t i : e_alpha_set(ideal, alpha)) space.basis.push_back(HomogeneousDerivation::basis(alpha, i));
    return space;
}

std::size_t inner_weight_dim(const MonomialIdeal& ideal, const ExponentVector& alpha) {
    return inner_weight_space(ideal, alpha).dim();
}

std::optional<std::size_t> outer_shape(const ExponentVector& alpha) {
    if (alpha.is_nonnegative())
        throw MonomialError(ErrorCode::NotOuter, "degree " + to_string(alpha) + " is inner");
    std::optional<std::size_t> k;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] >= 0) continue;
        if (alpha[i] != -1 || k) return std::nullopt;
        k = i;
    }
    return k;
}

bool preserves_ideal(const MonomialIdeal& ideal, const ExponentVector& alpha, std::size_t k) {
    for (const auto& beta : ideal.generators()) {
        if (beta[k] == 0) continue; // killed by e_k^*
        ExponentVector image = alpha + beta;
        if (image.is_nonnegative() && !contains(ideal, image)) return false;
    }
    return true;
}

WeightSpace outer_weight_space(const MonomialIdeal& ideal, const ExponentVector& alpha) {
    WeightSpace space{alpha, {}};
    auto k = outer_shape(alpha);
    if (!k) return space;
    if (!preserves_ideal(ideal, alpha, *k)) return space;
    if (contains(ideal, alpha.shifted(*k, 1))) return space;
    space.basis.push_back(HomogeneousDerivation::basis(alpha, *k));
    return space;
}

std::size_t outer_weight_dim(const MonomialIdeal& ideal, const ExponentVector& alpha) {
    return outer_weight_space(ideal, alpha).dim();
}

WeightSpace weight_space(const MonomialIdeal& ideal, const ExponentVector& alpha) {
    if (alpha.size() != ideal.dim())
        throw MonomialError(ErrorCode::DimensionMismatch, "degree " + to_string(alpha));
    return alpha.is_nonnegative() ? inner_weight_space(ideal, alpha) : outer_weight_space(ideal, alpha);
}

std::size_t weight_dim(const MonomialIdeal& ideal, const ExponentVector& alpha) {
    return weight_space(ideal, alpha).dim();
}

WeightDecomposition weight_decomposition(const MonomialIdeal& ideal) {
    const CoSupport c = cosupport(ideal);
    const std::size_t n = ideal.dim();

    // g_alpha != 0 needs some basis monomial hit from a monomial, which puts
    // alpha + e_i (inner case) or alpha + e_k (outer case) in the co-support.
    std::set<ExponentVector> candidates;
    for (const auto& point : c.points())
        for (std::size_t i = 0; i < n; ++i) candidates.insert(point.shifted(i, -1));

    WeightDecomposition wd{n, {}};
    for (const auto& alpha : candidates) {
        WeightSpace space = weight_space(ideal, alpha);
        if (space.dim() > 0) wd.spaces.emplace(alpha, std::move(space));
    }
    return wd;
}

namespace {

// d_{alpha,p} is a derivation of K[x] (no monomial is sent below the
// orthant with a nonzero coefficient) iff alpha is inner, p = 0, or p is a
// multiple of e_k^* with k the unique -1 coordinate of alpha.
bool is_polynomial_derivation(const HomogeneousDerivation& d) {
    if (d.degree.is_nonnegative() || d.has_zero_covector()) return true;
    auto k = outer_shape(d.degree);
    if (!k) return false;
    for (std::size_t i = 0; i < d.covector.size(); ++i)
        if (i != *k && d.covector[i] != 0) return false;
    return true;
}

void require_same_dim(const CoSupport& c, const HomogeneousDerivation& d) {
    if (d.degree.size() != c.dim() || d.covector.size() != c.dim())
        throw MonomialError(ErrorCode::DimensionMismatch, "derivation " + to_string(d));
}

} // namespace

bool is_valid_on_quotient(const CoSupport& c, const HomogeneousDerivation& d) {
    require_same_dim(c, d);
    if (!is_polynomial_derivation(d)) return false;
    if (d.degree.is_nonnegative() || d.has_zero_covector()) return true;
    // I is preserved unless some x^beta in I maps with nonzero coefficient
    // onto a basis monomial x^{beta+alpha}; such beta lies in C - alpha.
    for (const auto& point : c.points()) {
        ExponentVector beta = point - d.degree;
        if (beta.is_nonnegative() && !c.contains(beta) && d.evaluate(beta) != 0) return false;
    }
    return true;
}

bool is_valid_on_quotient(const MonomialIdeal& ideal, const HomogeneousDerivation& d) {
    return is_valid_on_quotient(cosupport(ideal), d);
}

bool is_trivial_on_quotient(const CoSupport& c, const HomogeneousDerivation& d) {
    require_same_dim(c, d);
    for (const auto& point : c.points()) {
        ExponentVector source = point - d.degree;
        if (source.is_nonnegative() && d.evaluate(source) != 0) return false;
    }
    return true;
}

bool is_trivial_on_quotient(const MonomialIdeal& ideal, const HomogeneousDerivation& d) {
    return is_trivial_on_quotient(cosupport(ideal), d);
}

DerivationMatrix derivation_matrix(const CoSupport& c, const HomogeneousDerivation& d) {
    if (!is_valid_on_quotient(c, d))
        throw MonomialError(ErrorCode::NotADerivation, to_string(d) + " does not preserve the ideal");

    const auto size = static_cast<Eigen::Index>(c.size());
    std::vector<Eigen::Triplet<Rational>> triplets;
    for (std::size_t col = 0; col < c.size(); ++col) {
        const ExponentVector& m = c.points()[col];
        auto row = c.index_of(m + d.degree);
        if (!row) continue;
        Rational value = d.evaluate(m);
        if (value != 0)
            triplets.emplace_back(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col), value);
    }
    DerivationMatrix out{c.points(), SparseMatrix<Rational>(size, size)};
    out.entries.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

DerivationMatrix derivation_matrix(const MonomialIdeal& ideal, const HomogeneousDerivation& d) {
    return derivation_matrix(cosupport(ideal), d);
}

HomogeneousDerivation lie_bracket(const MonomialIdeal& ideal, const HomogeneousDerivation& d1,
                                  const HomogeneousDerivation& d2) {
    const CoSupport c = cosupport(ideal);
    for (const auto* d : {&d1, &d2})
        if (!is_valid_on_quotient(c, *d))
            throw MonomialError(ErrorCode::NotADerivation, to_string(*d) + " does not preserve the ideal");

    const Rational p_of_beta = d1.evaluate(d2.degree);
    const Rational q_of_alpha = d2.evaluate(d1.degree);
    HomogeneousDerivation out = HomogeneousDerivation::zero(d1.degree + d2.degree);
    for (std::size_t i = 0; i < out.covector.size(); ++i)
        out.covector[i] = p_of_beta * d2.covector[i] - q_of_alpha * d1.covector[i];
    return out;
}

AutWeightReport aut_weight_report(const MonomialIdeal& ideal) {
    const WeightDecomposition wd = weight_decomposition(ideal);
    AutWeightReport report;
    report.torus_rank = ideal.dim();
    for (const auto& [degree, space] : wd.spaces)
        if (!degree.is_zero()) report.roots.emplace(degree, space.dim());
    report.lie_dim = wd.total_dim();
    report.algebra_dim = cosupport(ideal).size();
    return report;
}

std::vector<Permutation> perm_symmetries(const MonomialIdeal& ideal) {
    if (ideal.dim() > kMaxPermutationDim)
        throw MonomialError(ErrorCode::UnsupportedDimension,
                            "permutation search supports at most " + std::to_string(kMaxPermutationDim) +
                                " variables");
    std::vector<Permutation> out;
    find_permutation(ideal.dim(), [&](const Permutation& sigma) {
        if (permuted(ideal, sigma) == ideal) out.push_back(sigma);
        return false;
    });
    return out;
}

WeightDecomposition permuted(const WeightDecomposition& wd, const Permutation& sigma) {
    WeightDecomposition out{wd.n, {}};
    for (const auto& [degree, space] : wd.spaces) {
        WeightSpace moved{sigma.apply(degree), {}};
        for (const auto& d : space.basis) {
            HomogeneousDerivation e = HomogeneousDerivation::zero(moved.degree);
            for (std::size_t i = 0; i < d.covector.size(); ++i) e.covector[sigma(i)] = d.covector[i];
            moved.basis.push_back(std::move(e));
        }
        std::sort(moved.basis.begin(), moved.basis.end(), [](const auto& a, const auto& b) {
            return a.covector > b.covector;
        });
        out.spaces.emplace(moved.degree, std::move(moved));
    }
    return out;
}

} // namespace monalg
