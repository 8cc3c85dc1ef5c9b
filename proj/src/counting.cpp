#include "kostka/counting.hpp"

#include <utility>

#include "kostka/errors.hpp"

namespace kostka {

long long min_rank_with_face(long long d) {
  if (d < 0) throw InvalidArgument("dimension must be nonnegative");
  return (d + 3) / 2;
}

Int alpha_dmin_expected(long long d) {
  if (d < 0) throw InvalidArgument("dimension must be nonnegative");
  if (d == 1) return 3;
  if (d % 2 == 1) return 3 * d - 2;
  return 1;
}

BinomialPolynomial fit_face_polynomial(long long d,
                                       const std::map<long long, Int>& values) {
  if (d < 0) throw InvalidArgument("dimension must be nonnegative");
  long long lo = min_rank_with_face(d), hi = 3 * d + 3;
  for (long long k = lo; k <= hi; ++k)
    if (!values.count(k))
      throw InvalidArgument("fit needs a value for every rank " +
                            std::to_string(lo) + ".." + std::to_string(hi));
  BinomialPolynomial p;
  p.d = d;
  for (long long k = lo; k <= hi; ++k) {
    Int a = values.at(k);
    for (long long j = lo; j < k; ++j)
      a -= binomial(Int(k), j) * p.alpha.at(j);
    if (a < 0)
      throw FitError("fit produced a negative coefficient at k = " +
                     std::to_string(k));
    p.alpha.emplace(k, std::move(a));
  }
  return p;
}

Int evaluate(const BinomialPolynomial& p, const Int& r) {
  if (r < 0) throw InvalidArgument("rank must be nonnegative");
  Int total = 0;
  for (const auto& [k, a] : p.alpha) total += a * binomial(r, k);
  return total;
}

std::map<long long, Int> enumerate_fit_values(long long d,
                                              const EnumOptions& opts) {
  if (d < 0) throw InvalidArgument("dimension must be nonnegative");
  std::map<long long, Int> values;
  // r >= d_min guarantees d <= 2r-2, so the dimension is always in range.
  for (long long r = min_rank_with_face(d); r <= 3 * d + 3; ++r)
    values[r] =
        enumerate_faces(static_cast<int>(r), static_cast<int>(d), opts).size();
  return values;
}

FVector f_vector(int r, const EnumOptions& opts) {
  if (r < 1) throw InvalidArgument("rank must be positive");
  std::map<int, std::uint64_t> counts = face_counts(r, opts);
  int d = 2 * r - 2;
  FVector fv;
  fv.r = r;
  fv.f.assign(d + 1, 0);
  fv.f[0] = 1;  // the empty face
  for (const auto& [dim, n] : counts) {
    if (dim == -1 || dim == d) continue;  // empty handled, polytope excluded
    fv.f[dim + 1] = n;
  }
  return fv;
}

HVector h_from_f(const FVector& fv) {
  int d = 2 * fv.r - 2;
  if (fv.f.size() != static_cast<std::size_t>(d + 1))
    throw InvalidArgument("f-vector has the wrong length for its rank");
  HVector hv;
  hv.r = fv.r;
  hv.h.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    Int s = 0;
    for (int i = 0; i <= k; ++i) {
      Int term = binomial(Int(d - i), k - i) * fv.f[i];
      if ((k - i) % 2 == 0)
        s += term;
      else
        s -= term;
    }
    hv.h[k] = s;
  }
  return hv;
}

FVector f_from_h(const HVector& hv) {
  int d = 2 * hv.r - 2;
  if (hv.h.size() != static_cast<std::size_t>(d + 1))
    throw InvalidArgument("h-vector has the wrong length for its rank");
  FVector fv;
  fv.r = hv.r;
  fv.f.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    Int s = 0;
    for (int i = 0; i <= k; ++i) s += binomial(Int(d - i), k - i) * hv.h[i];
    fv.f[k] = s;
  }
  return fv;
}

HVector h_vector(int r, const EnumOptions& opts) {
  return h_from_f(f_vector(r, opts));
}

ConjectureReport check_h_tail(const HVector& hv) {
  ConjectureReport rep;
  rep.holds = true;
  for (int k = hv.r - 1; k <= 2 * hv.r - 2; ++k) {
    if (hv.h[k] != 1) {
      rep.holds = false;
      rep.first_failing_k = k;
      break;
    }
  }
  return rep;
}

Int cyclic_face_count(const Int& n, long long m, long long d) {
  if (m < 0 || d < 0) throw InvalidArgument("dimensions must be nonnegative");
  if (d > m / 2)
    throw InvalidArgument("cyclic count is only valid for d <= m/2");
  return binomial(n, d + 1);
}

Rat limit_face_ratio(long long d) {
  if (d < 0) throw InvalidArgument("dimension must be nonnegative");
  Int num = factorial(d + 1);
  Int six = 1;
  for (long long i = 0; i <= d; ++i) six *= 6;
  return Rat(six * num, factorial(3 * d + 3));
}

}  // namespace kostka
