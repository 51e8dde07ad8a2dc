#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

namespace ahp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact integer square root; empty if n is not a perfect square.
std::optional<Int> perfect_sqrt(const Int& n);

// Exact rational square root; empty if q is not a square in Q.
std::optional<Rational> perfect_sqrt(const Rational& q);

// Largest s with s^2 | n (n > 0), by trial division; n/s^2 is squarefree
// up to one possible large prime-square remainder, which is then peeled by
// a perfect-square check.
Int square_content(Int n);

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

} // namespace ahp
