#ifndef MONALG_TESTS_CORPUS_HPP
#define MONALG_TESTS_CORPUS_HPP

#include "monalg/report.hpp"

#include <cstdint>
#include <iterator>
#include <random>
#include <vector>

namespace monalg::testing {

/// Seeded corpus of full finite ideals, n uniform in [min_n, max_n],
/// pure-power exponents at most max_exp.
inline std::vector<MonomialIdeal> make_corpus(std::size_t count, std::uint64_t seed, std::size_t min_n = 1,
                                              std::size_t max_n = 4, int max_exp = 6) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(min_n, max_n);
    std::vector<MonomialIdeal> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(random_full_finite_ideal(dim(rng), max_exp, rng));
    return out;
}

/// Random element of a random nonzero weight space: an integer combination
/// of the basis covectors with coefficients in [-3, 3].
inline HomogeneousDerivation random_derivation(const WeightDecomposition& wd, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, wd.spaces.size() - 1);
    auto it = std::next(wd.spaces.begin(), static_cast<std::ptrdiff_t>(pick(rng)));
    const WeightSpace& space = it->second;
    std::uniform_int_distribution<int> coeff(-3, 3);
    HomogeneousDerivation d = HomogeneousDerivation::zero(space.degree);
    for (const auto& b : space.basis) {
        const int c = coeff(rng);
        for (std::size_t i = 0; i < d.covector.size(); ++i) d.covector[i] += c * b.covector[i];
    }
    return d;
}

inline MonomialIdeal corner() { return MonomialIdeal(2, {{0, 3}, {1, 1}, {3, 0}}); }
inline MonomialIdeal square() { return MonomialIdeal(2, {{2, 0}, {0, 2}}); }
inline MonomialIdeal cubic() { return MonomialIdeal(1, {{3}}); }

} // namespace monalg::testing

#endif // MONALG_TESTS_CORPUS_HPP
