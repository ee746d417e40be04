#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace orbalg {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere in the computational paths.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Generalized binomial coefficient C(n, k) for integer n (n may be negative)
// and k >= 0.  Computed by the stepwise product formula; every intermediate
// division is exact.
Int binomial(const Int& n, long k);

Int factorial(int n);

}  // namespace orbalg
