#ifndef MONALG_EXPONENT_HPP
#define MONALG_EXPONENT_HPP

// Points of the character lattice Z^n: exponents of monomials and degrees of
// derivations. The componentwise order is divisibility of monomials.

#include "monalg/errors.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace monalg {

class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : coords_(n, 0) {}
    ExponentVector(std::initializer_list<int> coords) : coords_(coords) {}
    explicit ExponentVector(std::vector<int> coords) : coords_(std::move(coords)) {}

    static ExponentVector zero(std::size_t n) { return ExponentVector(n); }
    static ExponentVector unit(std::size_t n, std::size_t i) {
        ExponentVector e(n);
        e.coords_.at(i) = 1;
        return e;
    }

    std::size_t size() const noexcept { return coords_.size(); }
    int operator[](std::size_t i) const { return coords_[i]; }
    int& operator[](std::size_t i) { return coords_[i]; }
    std::span<const int> coords() const noexcept { return coords_; }

    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    bool is_zero() const noexcept {
        for (int c : coords_)
            if (c != 0) return false;
        return true;
    }

    /// Inside Z^n_{>=0}; for degrees this is "inner".
    bool is_nonnegative() const noexcept {
        for (int c : coords_)
            if (c < 0) return false;
        return true;
    }

    long total_degree() const noexcept { return std::accumulate(coords_.begin(), coords_.end(), 0L); }

    ExponentVector& operator+=(const ExponentVector& rhs) {
        check_same_size(rhs);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
        return *this;
    }
    ExponentVector& operator-=(const ExponentVector& rhs) {
        check_same_size(rhs);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
        return *this;
    }

    /// Copy moved by step * e_i.
    ExponentVector shifted(std::size_t i, int step) const {
        ExponentVector out = *this;
        out.coords_.at(i) += step;
        return out;
    }

    friend ExponentVector operator+(ExponentVector lhs, const ExponentVector& rhs) { return lhs += rhs; }
    friend ExponentVector operator-(ExponentVector lhs, const ExponentVector& rhs) { return lhs -= rhs; }

    /// Lexicographic comparison; the canonical order of generator lists.
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

    void check_same_size(const ExponentVector& other) const {
        if (other.size() != size())
            throw MonomialError(ErrorCode::DimensionMismatch,
                                "exponent vectors of length " + std::to_string(size()) + " and " +
                                    std::to_string(other.size()));
    }

private:
    std::vector<int> coords_;
};

/// a <= b componentwise, i.e. x^a divides x^b.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
    a.check_same_size(b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Graded order: total degree first, then lexicographically descending, so
/// monomials list as 1, x, y, x^2, xy, y^2, ...
struct GradedLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        auto da = a.total_degree();
        auto db = b.total_degree();
        if (da != db) return da < db;
        return b < a;
    }
};

inline std::string to_string(const ExponentVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const ExponentVector& v) { return os << to_string(v); }

/// Visits every lattice point of the box [lo, hi] (inclusive), last
/// coordinate fastest. Empty when some hi_i < lo_i.
template <typename Fn>
void for_each_point(const ExponentVector& lo, const ExponentVector& hi, Fn&& fn) {
    lo.check_same_size(hi);
    const std::size_t n = lo.size();
    for (std::size_t i = 0; i < n; ++i)
        if (hi[i] < lo[i]) return;
    ExponentVector p = lo;
    while (true) {
        fn(static_cast<const ExponentVector&>(p));
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (p[i] < hi[i]) {
                ++p[i];
                break;
            }
            p[i] = lo[i];
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

struct ExponentHash {
    std::size_t operator()(const ExponentVector& v) const noexcept {
        std::size_t h = v.size();
        for (int c : v) h ^= std::hash<int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace monalg

#endif // MONALG_EXPONENT_HPP
