#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kostka/ints.hpp"

namespace kostka {

// Primes below or equal to limit (sieve of Eratosthenes); limit <= 1e8.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

struct RatInterval {
  Rat lower, upper;
  friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

bool contains(const RatInterval& iv, const Rat& x);

// Rigorous bracket for the Euler product alpha_k = prod_p (1 - k/p^2)
// over all primes, truncated at B: the partial product P(B) is an upper
// bound, and P(B) * (1 - k/B) a lower bound (clamped at zero), since the
// tail loses at most a factor 1 - sum_{p > B} k/p^2 >= 1 - k/B.
// Exact rationals up to B = 1e5; fixed-point with directed rounding
// beyond, which only widens the bracket.
RatInterval alpha_interval(int k, std::int64_t B);

// (5/2) alpha_1 - 2 alpha_2 + (1/2) alpha_3, combined so that the bracket
// stays rigorous (upper bounds of alpha_2 feed the lower bound).
RatInterval initial_pair_probability(std::int64_t B);

// Exact density over pairs 1 <= m < n <= N of the event cut out by the
// chosen conditions from
//   E1: gcd(m, n) = 1
//   E2: gcd(m, n+1) = 1
//   E3: gcd(m+1, n+1) = 1 and 2m >= n,
// intersected over I (a nonempty subset of {1,2,3}).
Rat empirical_density(std::int64_t N, const std::vector<int>& I);

// Inclusion-exclusion over the three events at finite N: an estimate of
// the density of pairs satisfying at least one condition.
Rat union_density(std::int64_t N);

// Decimal expansion of x, truncated toward zero at `digits` places.
std::string decimal_string(const Rat& x, int digits);

}  // namespace kostka
