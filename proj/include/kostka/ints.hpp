#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kostka {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact binomial coefficient. Zero for k < 0 or k > n; requires n >= 0.
Int binomial(const Int& n, long long k);

Int factorial(long long n);

}  // namespace kostka
