#include "monalg/reconstruction.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace monalg {

namespace {

[[noreturn]] void inconsistent(const std::string& why) {
    throw MonomialError(ErrorCode::InconsistentWeightFunction, why);
}

void check_key(const ExponentVector& alpha, std::size_t n) {
    if (alpha.size() != n)
        throw MonomialError(ErrorCode::DimensionMismatch,
                            "degree " + to_string(alpha) + " in ambient dimension " + std::to_string(n));
}

void check_permutation_dim(std::size_t n) {
    if (n > kMaxPermutationDim)
        throw MonomialError(ErrorCode::UnsupportedDimension,
                            "permutation search supports at most " + std::to_string(kMaxPermutationDim) +
                                " variables");
}

} // namespace

std::optional<std::size_t> inner_neighbor_axis(const ExponentVector& alpha) {
    if (alpha.is_nonnegative()) return std::nullopt;
    return outer_shape(alpha);
}

WeightFunction weight_function_of(std::span<const ExponentVector> points, std::size_t n) {
    WeightFunction m{n, {}};
    for (const auto& c : points) {
        check_key(c, n);
        for (std::size_t i = 0; i < n; ++i) ++m.values[c.shifted(i, -1)];
    }
    return m;
}

WeightFunction weight_function_of(const CoSupport& c) { return weight_function_of(c.points(), c.dim()); }

std::vector<ExponentVector> reconstruct_points(const WeightFunction& m) {
    const std::size_t n = m.n;
    if (n == 0) throw MonomialError(ErrorCode::DimensionMismatch, "ambient dimension must be positive");
    int max_first = -1;
    for (const auto& [alpha, value] : m.values) {
        check_key(alpha, n);
        if (value <= 0 || static_cast<std::size_t>(value) > n)
            inconsistent("value " + std::to_string(value) + " at " + to_string(alpha) + " outside 1.." +
                         std::to_string(n));
        max_first = std::max(max_first, alpha[0]);
    }

    std::vector<ExponentVector> points;
    std::map<ExponentVector, int> partial; // m_{C_{a-1}} while sweeping column a

    for (int a = 0; a <= max_first + 1; ++a) {
        // Only alpha whose alpha - e_1 carries a value in m or in the partial
        // function can change; everything else reads 0 - 0.
        std::set<ExponentVector> sources;
        for (const auto* table : std::array<const std::map<ExponentVector, int>*, 2>{&m.values, &partial})
            for (const auto& [beta, value] : *table)
                if (beta[0] == a - 1) sources.insert(beta);

        std::vector<ExponentVector> column;
        for (const auto& beta : sources) {
            auto it = partial.find(beta);
            const int indicator = m.at(beta) - (it == partial.end() ? 0 : it->second);
            ExponentVector alpha = beta.shifted(0, 1);
            if (indicator == 0) continue;
            if (indicator != 1)
                inconsistent("indicator " + std::to_string(indicator) + " at " + to_string(alpha));
            if (!alpha.is_nonnegative()) inconsistent("recovered point " + to_string(alpha) + " leaves the orthant");
            column.push_back(std::move(alpha));
        }
        for (const auto& alpha : column)
            for (std::size_t i = 0; i < n; ++i) ++partial[alpha.shifted(i, -1)];
        points.insert(points.end(), column.begin(), column.end());
    }

    if (weight_function_of(points, n) != m) inconsistent("no point set has this weight function");
    return points;
}

CoSupport reconstruct_cosupport(const WeightFunction& m) {
    std::vector<ExponentVector> points = reconstruct_points(m);
    try {
        return CoSupport::from_points(m.n, std::move(points));
    } catch (const MonomialError& e) {
        inconsistent(std::string("recovered set is not a staircase (") + e.what() + ")");
    }
}

RestrictedWeightData weight_data_of(const WeightDecomposition& wd) {
    RestrictedWeightData data{wd.n, {}};
    for (const auto& [degree, space] : wd.spaces)
        data.dims.emplace(degree, static_cast<int>(space.dim()));
    return data;
}

RestrictedWeightData weight_data_of(const MonomialIdeal& ideal) {
    return weight_data_of(weight_decomposition(ideal));
}

WeightFunction extend_restricted(const RestrictedWeightData& data) {
    const std::size_t n = data.n;
    if (n == 0) throw MonomialError(ErrorCode::DimensionMismatch, "ambient dimension must be positive");

    const ExponentVector origin = ExponentVector::zero(n);
    if (!data.dims.contains(origin))
        throw MonomialError(ErrorCode::MissingKey, "no dimension recorded for the torus degree 0");

    WeightFunction m{n, {}};
    for (const auto& [alpha, dim] : data.dims) {
        check_key(alpha, n);
        if (dim < 0) inconsistent("negative dimension at " + to_string(alpha));
        if (dim == 0) continue;
        if (alpha.is_nonnegative()) {
            if (static_cast<std::size_t>(dim) > n)
                inconsistent("inner dimension " + std::to_string(dim) + " at " + to_string(alpha));
            m.values[alpha] = dim;
            continue;
        }
        auto k = inner_neighbor_axis(alpha);
        if (!k) inconsistent("degree " + to_string(alpha) + " cannot carry derivations");
        if (dim > 1) inconsistent("outer dimension " + std::to_string(dim) + " at " + to_string(alpha));
        // Next to a positive inner value the outer value is forced to 1
        // below; only the remaining outer degrees take their value here.
        if (data.at(alpha.shifted(*k, 1)) == 0) m.values[alpha] = dim;
    }

    // A positive inner value marks a co-support point beta, so every
    // beta - e_k leaving the orthant sees beta.
    for (const auto& [beta, dim] : data.dims) {
        if (dim <= 0 || !beta.is_nonnegative()) continue;
        for (std::size_t k = 0; k < n; ++k)
            if (beta[k] == 0) m.values[beta.shifted(k, -1)] = 1;
    }
    return m;
}

MonomialIdeal reconstruct_ideal(const RestrictedWeightData& data) {
    return ideal_from_cosupport(reconstruct_cosupport(extend_restricted(data)));
}

std::optional<Permutation> iso_check(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim()) return std::nullopt;
    if (a.generators().size() != b.generators().size()) return std::nullopt;
    check_permutation_dim(a.dim());
    return find_permutation(a.dim(), [&](const Permutation& sigma) { return permuted(a, sigma) == b; });
}

RestrictedWeightData permuted(const RestrictedWeightData& data, const Permutation& sigma) {
    RestrictedWeightData out{data.n, {}};
    for (const auto& [alpha, dim] : data.dims) out.dims.emplace(sigma.apply(alpha), dim);
    return out;
}

std::optional<Permutation> weight_data_iso_check(const RestrictedWeightData& a, const RestrictedWeightData& b) {
    // Both must be genuine weight data; reconstruction is the certificate.
    reconstruct_ideal(a);
    reconstruct_ideal(b);
    if (a.n != b.n) return std::nullopt;
    check_permutation_dim(a.n);

    auto drop_zeros = [](const RestrictedWeightData& d) {
        RestrictedWeightData out{d.n, {}};
        for (const auto& [alpha, dim] : d.dims)
            if (dim != 0) out.dims.emplace(alpha, dim);
        return out;
    };
    const RestrictedWeightData lhs = drop_zeros(a), rhs = drop_zeros(b);
    if (lhs.dims.size() != rhs.dims.size()) return std::nullopt;
    return find_permutation(a.n, [&](const Permutation& sigma) { return permuted(lhs, sigma) == rhs; });
}

} // namespace monalg
