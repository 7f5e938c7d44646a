#ifndef MONALG_PARSE_HPP
#define MONALG_PARSE_HPP

// Text form of monomial ideals:
//
//     ideal     := ['('] generator {',' generator} [')']
//     generator := factor {['*'] factor}
//     factor    := variable ['^' integer]
//     variable  := 'x' | 'y' | 'z' | 'w'  |  'x' integer      (x1, x2, ...)
//
// Whitespace is ignored. Letter variables take coordinates in the order
// x, y, z, w (skipping unused letters); indexed variables x1..xn take their
// index, with n the largest index seen. The two styles cannot be mixed.

#include "monalg/monomial_ideal.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace monalg {

struct IdealSource {
    std::string raw;
    std::size_t n = 0;
    std::vector<std::string> variables;
};

struct ParsedIdeal {
    IdealSource source;
    MonomialIdeal ideal;
};

/// Parses without checking fullness or finiteness.
ParsedIdeal parse_ideal_source(std::string_view text);

/// Parses and requires a full ideal with finite quotient.
/// Throws SyntaxError, ZeroGenerator, NotFull or InfiniteAlgebra.
ParsedIdeal parse_full_finite(std::string_view text);
MonomialIdeal parse_ideal(std::string_view text);

/// x, y, z, w for n <= 4, else x1..xn.
std::vector<std::string> default_variables(std::size_t n);

/// Canonical text: generators in ascending lexicographic exponent order,
/// e.g. "y^3, x*y, x^3".
std::string render_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& variables);
std::string render_ideal(const MonomialIdeal& ideal);
std::string render_monomial(const ExponentVector& m, const std::vector<std::string>& variables);

} // namespace monalg

#endif // MONALG_PARSE_HPP
