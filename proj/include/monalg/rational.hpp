#ifndef MONALG_RATIONAL_HPP
#define MONALG_RATIONAL_HPP

// Exact scalar used for derivation coefficients and matrix entries.
//
// Expression templates are disabled: Eigen stores and combines scalars by
// value, and the lazy expression types of Boost.Multiprecision do not survive
// that.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace monalg {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline std::string to_string(const Rational& q) { return q.str(); }

} // namespace monalg

#endif // MONALG_RATIONAL_HPP
