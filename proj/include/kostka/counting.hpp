#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kostka/errors.hpp"
#include "kostka/faces.hpp"
#include "kostka/ints.hpp"

namespace kostka {

// f_d(r) written in the binomial basis: sum over k of alpha_k * C(r, k),
// with support d_min(d) <= k <= 3d+3.
struct BinomialPolynomial {
  long long d = 0;
  std::map<long long, Int> alpha;
  friend bool operator==(const BinomialPolynomial&,
                         const BinomialPolynomial&) = default;
};

// Raised when a fit produces a negative coefficient, which signals
// inconsistent input values.
class FitError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// floor((d+3)/2): the least rank with a d-face.
long long min_rank_with_face(long long d);

// The forced leading value at k = d_min: 3 for d = 1, 3d-2 for odd d > 1,
// 1 for even d.
Int alpha_dmin_expected(long long d);

// Interpolate the coefficients from exact counts f_d(r) for
// r = d_min..3d+3 via alpha_k = f_d(k) - sum_{j<k} C(k,j) alpha_j.
BinomialPolynomial fit_face_polynomial(long long d,
                                       const std::map<long long, Int>& values);

// The counts a fit needs, by direct enumeration: f_d(r) for
// r = d_min..3d+3. Heavy for d >= 3; runs under the usual caps.
std::map<long long, Int> enumerate_fit_values(long long d,
                                              const EnumOptions& opts = {});

Int evaluate(const BinomialPolynomial& p, const Int& r);

// f-vector of the rank-r slice polytope: dimensions -1 .. 2r-3 (proper
// faces and the empty face; the polytope itself is excluded).
struct FVector {
  int r = 0;
  std::vector<Int> f;  // f[i] = f_{i-1}
  friend bool operator==(const FVector&, const FVector&) = default;
};

struct HVector {
  int r = 0;
  std::vector<Int> h;  // h_0 .. h_{2r-2}
  friend bool operator==(const HVector&, const HVector&) = default;
};

FVector f_vector(int r, const EnumOptions& opts = {});

// h_k = sum_{i=0..k} (-1)^(k-i) C(d-i, k-i) f_{i-1} with d = 2r-2.
HVector h_from_f(const FVector& fv);

// Inverse transform; round-trips with h_from_f.
FVector f_from_h(const HVector& hv);

HVector h_vector(int r, const EnumOptions& opts = {});

// Checks h_k = 1 for r-1 <= k <= 2r-2; returns the first failing k.
struct ConjectureReport {
  bool holds = false;
  std::optional<int> first_failing_k;
};
ConjectureReport check_h_tail(const HVector& hv);

// d-faces of a cyclic polytope with n vertices in ambient dimension m,
// in its neighborly range d <= floor(m/2): C(n, d+1).
Int cyclic_face_count(const Int& n, long long m, long long d);

// 6^(d+1) (d+1)! / (3d+3)!: the limit of f_d(r) / C(n_r, d+1) where n_r
// is the vertex count of the rank-r slice polytope.
Rat limit_face_ratio(long long d);

}  // namespace kostka
