#include "kostka/euler.hpp"

#include <algorithm>
#include <numeric>

#include "kostka/errors.hpp"

namespace kostka {

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  if (limit < 0) throw InvalidArgument("sieve limit must be nonnegative");
  if (limit > 100'000'000) throw ResourceLimit("sieve limit above 1e8");
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::int64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

bool contains(const RatInterval& iv, const Rat& x) {
  return iv.lower <= x && x <= iv.upper;
}

namespace {

// Balanced product of a factor list; keeps the multiplications between
// numbers of similar size.
Int product_tree(const std::vector<Int>& xs, std::size_t lo, std::size_t hi) {
  if (lo == hi) return 1;
  if (hi - lo == 1) return xs[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return product_tree(xs, lo, mid) * product_tree(xs, mid, hi);
}

constexpr int kFracBits = 192;

}  // namespace

RatInterval alpha_interval(int k, std::int64_t B) {
  if (k < 1 || k > 3) throw InvalidArgument("k must be 1, 2 or 3");
  if (B < 2) throw InvalidArgument("cutoff must be at least 2");
  std::vector<std::int64_t> primes = primes_up_to(B);

  Rat plo, phi;  // bracket for the partial product P(B)
  if (B <= 100'000) {
    std::vector<Int> nums, dens;
    nums.reserve(primes.size());
    dens.reserve(primes.size());
    for (std::int64_t p : primes) {
      Int p2 = Int(p) * p;
      nums.push_back(p2 - k);
      dens.push_back(p2);
    }
    Rat exact(product_tree(nums, 0, nums.size()),
              product_tree(dens, 0, dens.size()));
    plo = phi = exact;
  } else {
    // Fixed-point mantissas at 2^-kFracBits with directed rounding.
    Int lo = Int(1) << kFracBits, hi = lo;
    for (std::int64_t p : primes) {
      Int p2 = Int(p) * p;
      Int num = p2 - k;
      lo = lo * num / p2;             // floor
      hi = (hi * num + p2 - 1) / p2;  // ceil
    }
    plo = Rat(lo, Int(1) << kFracBits);
    phi = Rat(hi, Int(1) << kFracBits);
  }

  RatInterval iv;
  iv.upper = phi;
  iv.lower = plo * Rat(Int(B - k), Int(B));
  if (iv.lower < 0) iv.lower = 0;
  return iv;
}

RatInterval initial_pair_probability(std::int64_t B) {
  RatInterval a1 = alpha_interval(1, B);
  RatInterval a2 = alpha_interval(2, B);
  RatInterval a3 = alpha_interval(3, B);
  Rat half(1, 2);
  RatInterval iv;
  iv.lower = Rat(5, 2) * a1.lower - 2 * a2.upper + half * a3.lower;
  iv.upper = Rat(5, 2) * a1.upper - 2 * a2.lower + half * a3.upper;
  return iv;
}

Rat empirical_density(std::int64_t N, const std::vector<int>& I) {
  if (N < 2) throw InvalidArgument("N must be at least 2");
  if (N > 50'000) throw ResourceLimit("N above the pair-scan cap");
  if (I.empty()) throw InvalidArgument("condition set must be nonempty");
  bool want[4] = {false, false, false, false};
  for (int i : I) {
    if (i < 1 || i > 3) throw InvalidArgument("conditions are numbered 1..3");
    want[i] = true;
  }
  std::int64_t hits = 0;
  for (std::int64_t n = 2; n <= N; ++n)
    for (std::int64_t m = 1; m < n; ++m) {
      if (want[1] && std::gcd(m, n) != 1) continue;
      if (want[2] && std::gcd(m, n + 1) != 1) continue;
      if (want[3] && !(std::gcd(m + 1, n + 1) == 1 && 2 * m >= n)) continue;
      ++hits;
    }
  return Rat(Int(hits), Int(N) * (N - 1) / 2);
}

Rat union_density(std::int64_t N) {
  Rat total = 0;
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<int> I;
    for (int i = 1; i <= 3; ++i)
      if (mask & (1 << (i - 1))) I.push_back(i);
    Rat d = empirical_density(N, I);
    if (I.size() % 2 == 1)
      total += d;
    else
      total -= d;
  }
  return total;
}

std::string decimal_string(const Rat& x, int digits) {
  if (digits < 0) throw InvalidArgument("digits must be nonnegative");
  Rat y = x < 0 ? Rat(-x) : x;
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int scaled = boost::multiprecision::numerator(y) * scale /
               boost::multiprecision::denominator(y);
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= digits)
    s = std::string(digits + 1 - s.size(), '0') + s;
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  if (x < 0) out = "-" + out;
  return out;
}

}  // namespace kostka
