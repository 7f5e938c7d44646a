#include "monalg/monomial_ideal.hpp"

#include "monalg/rational.hpp"

#include <algorithm>
#include <string>

namespace monalg {

namespace {

void check_generator(const ExponentVector& g, std::size_t n) {
    if (g.size() != n)
        throw MonomialError(ErrorCode::DimensionMismatch,
                            "generator " + to_string(g) + " in ambient dimension " + std::to_string(n));
    if (!g.is_nonnegative())
        throw MonomialError(ErrorCode::NegativeExponent, "generator " + to_string(g));
    if (g.is_zero())
        throw MonomialError(ErrorCode::ZeroGenerator, "the constant monomial 1 generates the unit ideal");
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExponentVector> gens) : n_(n) {
    if (n == 0) throw MonomialError(ErrorCode::DimensionMismatch, "ambient dimension must be positive");
    for (const auto& g : gens) check_generator(g, n);

    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // A generator is redundant iff a different generator divides it.
    for (const auto& g : gens) {
        bool redundant = std::any_of(gens.begin(), gens.end(),
                                     [&](const ExponentVector& h) { return h != g && divides(h, g); });
        if (!redundant) gens_.push_back(g);
    }
}

MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t n) {
    return MonomialIdeal(n, std::move(gens));
}

bool contains(const MonomialIdeal& ideal, const ExponentVector& m) {
    if (m.size() != ideal.dim())
        throw MonomialError(ErrorCode::DimensionMismatch,
                            "point " + to_string(m) + " in ambient dimension " + std::to_string(ideal.dim()));
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const ExponentVector& g) { return divides(g, m); });
}

bool is_full(const MonomialIdeal& ideal) {
    for (std::size_t i = 0; i < ideal.dim(); ++i)
        if (contains(ideal, ExponentVector::unit(ideal.dim(), i))) return false;
    return true;
}

std::optional<ExponentVector> pure_power_bounds(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.dim();
    std::vector<int> bound(n, 0);
    for (const auto& g : ideal.generators()) {
        std::size_t support = 0, axis = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] != 0) {
                ++support;
                axis = i;
            }
        if (support == 1) bound[axis] = g[axis];
    }
    if (std::any_of(bound.begin(), bound.end(), [](int d) { return d == 0; })) return std::nullopt;
    return ExponentVector(std::move(bound));
}

bool is_finite(const MonomialIdeal& ideal) { return pure_power_bounds(ideal).has_value(); }

void require_full_finite(const MonomialIdeal& ideal) {
    if (!is_finite(ideal))
        throw MonomialError(ErrorCode::InfiniteAlgebra, "some variable has no pure power in the ideal");
    if (!is_full(ideal)) throw MonomialError(ErrorCode::NotFull, "some variable lies in the ideal");
}

CoSupport cosupport(const MonomialIdeal& ideal) {
    require_full_finite(ideal);
    const std::size_t n = ideal.dim();
    ExponentVector hi = *pure_power_bounds(ideal);
    for (std::size_t i = 0; i < n; ++i) hi[i] -= 1;

    std::vector<ExponentVector> points;
    for_each_point(ExponentVector::zero(n), hi, [&](const ExponentVector& m) {
        if (!contains(ideal, m)) points.push_back(m);
    });
    return CoSupport::from_points(n, std::move(points));
}

CoSupport CoSupport::from_points(std::size_t n, std::vector<ExponentVector> points) {
    if (n == 0) throw MonomialError(ErrorCode::DimensionMismatch, "ambient dimension must be positive");
    CoSupport c;
    c.n_ = n;
    c.box_ = ExponentVector::zero(n);
    for (const auto& p : points) {
        if (p.size() != n)
            throw MonomialError(ErrorCode::DimensionMismatch, "point " + to_string(p));
        if (!p.is_nonnegative())
            throw MonomialError(ErrorCode::NotDownwardClosed, "point " + to_string(p) + " leaves the orthant");
        for (std::size_t i = 0; i < n; ++i) c.box_[i] = std::max(c.box_[i], p[i]);
    }
    std::sort(points.begin(), points.end(), GradedLess{});
    points.erase(std::unique(points.begin(), points.end()), points.end());
    c.points_ = std::move(points);

    c.strides_.assign(n, 1);
    std::size_t cells = 1;
    for (std::size_t i = n; i-- > 0;) {
        c.strides_[i] = cells;
        cells *= static_cast<std::size_t>(c.box_[i]) + 1;
    }
    c.grid_.assign(cells, -1);
    for (std::size_t k = 0; k < c.points_.size(); ++k) {
        std::size_t cell = 0;
        for (std::size_t i = 0; i < n; ++i) cell += c.strides_[i] * static_cast<std::size_t>(c.points_[k][i]);
        c.grid_[cell] = static_cast<long>(k);
    }

    if (c.points_.empty())
        throw MonomialError(ErrorCode::NotDownwardClosed, "a staircase must contain the origin");
    for (const auto& p : c.points_)
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] > 0 && !c.contains(p.shifted(i, -1)))
                throw MonomialError(ErrorCode::NotDownwardClosed,
                                    to_string(p) + " present but " + to_string(p.shifted(i, -1)) + " missing");
    return c;
}

std::optional<std::size_t> CoSupport::index_of(const ExponentVector& m) const {
    if (m.size() != n_)
        throw MonomialError(ErrorCode::DimensionMismatch, "point " + to_string(m));
    std::size_t cell = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (m[i] < 0 || m[i] > box_[i]) return std::nullopt;
        cell += strides_[i] * static_cast<std::size_t>(m[i]);
    }
    long k = grid_[cell];
    if (k < 0) return std::nullopt;
    return static_cast<std::size_t>(k);
}

MonomialIdeal ideal_from_cosupport(const CoSupport& c) {
    const std::size_t n = c.dim();
    ExponentVector hi = c.box();
    for (std::size_t i = 0; i < n; ++i) hi[i] += 1;

    std::vector<ExponentVector> corners;
    for_each_point(ExponentVector::zero(n), hi, [&](const ExponentVector& beta) {
        if (c.contains(beta)) return;
        for (std::size_t i = 0; i < n; ++i)
            if (beta[i] > 0 && !c.contains(beta.shifted(i, -1))) return;
        corners.push_back(beta);
    });
    return minimalize(std::move(corners), n);
}

bool weights_generate_lattice(std::span<const ExponentVector> points, std::size_t n) {
    // Row-reduce over Z with unimodular operations; the lattice is Z^n iff
    // every column gets a pivot of absolute value 1.
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != n) throw MonomialError(ErrorCode::DimensionMismatch, "point " + to_string(p));
        if (p.is_zero()) continue;
        rows.emplace_back(p.begin(), p.end());
    }

    std::size_t top = 0;
    for (std::size_t col = 0; col < n; ++col) {
        while (true) {
            // Smallest nonzero |entry| in this column among the unreduced rows.
            std::size_t pivot = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r)
                if (rows[r][col] != 0 && (pivot == rows.size() || abs(rows[r][col]) < abs(rows[pivot][col])))
                    pivot = r;
            if (pivot == rows.size()) return false;
            std::swap(rows[top], rows[pivot]);

            bool reduced = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                BigInt q = rows[r][col] / rows[top][col];
                for (std::size_t j = col; j < n; ++j) rows[r][j] -= q * rows[top][j];
                if (rows[r][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (abs(rows[top][col]) != 1) return false;
        ++top;
    }
    return true;
}

bool weights_generate_lattice(const CoSupport& c) { return weights_generate_lattice(c.points(), c.dim()); }

MonomialIdeal permuted(const MonomialIdeal& ideal, const Permutation& sigma) {
    std::vector<ExponentVector> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(sigma.apply(g));
    return MonomialIdeal(ideal.dim(), std::move(gens));
}

} // namespace monalg
