#include "kostka/ints.hpp"

#include "kostka/errors.hpp"

namespace kostka {

Int binomial(const Int& n, long long k) {
  if (n < 0) throw InvalidArgument("binomial: n must be nonnegative");
  if (k < 0 || n < k) return 0;
  if (n <= (std::numeric_limits<long long>::max)()) {
    long long nn = n.convert_to<long long>();
    if (nn - k < k) k = nn - k;
  }
  if (k > 10'000'000) throw ResourceLimit("binomial: k too large");
  // C(n-k+i, i) for i = 1..k; each division is exact.
  Int acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

Int factorial(long long n) {
  if (n < 0) throw InvalidArgument("factorial: n must be nonnegative");
  if (n > 1'000'000) throw ResourceLimit("factorial: n too large");
  Int acc = 1;
  for (long long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace kostka
