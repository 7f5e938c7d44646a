#ifndef MONALG_PERMUTATION_HPP
#define MONALG_PERMUTATION_HPP

#include "monalg/exponent.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace monalg {

/// Relabelling of variables in one-line notation (0-based): x_i goes to
/// x_{image[i]}. On exponents, (sigma . a)[sigma(i)] = a[i].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
        std::vector<std::size_t> check = image_;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < check.size(); ++i)
            if (check[i] != i)
                throw MonomialError(ErrorCode::DimensionMismatch, "not a permutation of 0..n-1");
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> image(n);
        std::iota(image.begin(), image.end(), std::size_t{0});
        return Permutation(std::move(image));
    }

    std::size_t size() const noexcept { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_.at(i); }
    const std::vector<std::size_t>& image() const noexcept { return image_; }

    bool is_identity() const noexcept {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i] != i) return false;
        return true;
    }

    ExponentVector apply(const ExponentVector& v) const {
        if (v.size() != image_.size())
            throw MonomialError(ErrorCode::DimensionMismatch, "permutation and vector sizes differ");
        ExponentVector out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[image_[i]] = v[i];
        return out;
    }

    Permutation inverse() const {
        std::vector<std::size_t> inv(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
        return Permutation(std::move(inv));
    }

    /// Advance to the next permutation in lexicographic one-line order.
    bool next() { return std::next_permutation(image_.begin(), image_.end()); }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> image_;
};

/// 1-based one-line notation, e.g. "[2 1]" for the swap.
inline std::string to_string(const Permutation& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(p(i) + 1);
    }
    return out + "]";
}

/// Calls fn on every permutation of n letters in lexicographic order until fn
/// returns true; returns the permutation that stopped the walk, if any.
template <typename Fn>
std::optional<Permutation> find_permutation(std::size_t n, Fn&& fn) {
    Permutation p = Permutation::identity(n);
    do {
        if (fn(p)) return p;
    } while (p.next());
    return std::nullopt;
}

} // namespace monalg

#endif // MONALG_PERMUTATION_HPP
