#pragma once

#include <compare>
#include <vector>

#include "kostka/cone_point.hpp"

namespace kostka {

// Extremal rays of the rank-r Kostka cone carry labels (a, b, l) with
// 0 <= l < b < a <= r, plus one rectangle label (a, a, a) per 1 <= a <= r.
struct RayLabel {
  int a = 0;
  int b = 0;
  int l = 0;

  bool rectangle() const { return a == b; }
  friend auto operator<=>(const RayLabel&, const RayLabel&) = default;
};

// Accepts (a, b, l) with l < b < a, or any (a, a, x), which names the same
// rectangle ray as (a, a, a) and is normalized to it.
RayLabel normalize_ray_label(int a, int b, int l);

bool ray_label_valid(const RayLabel& lab, int r);

// All labels for rank r in lexicographic order.
std::vector<RayLabel> enumerate_ray_labels(int r);

// C(r,3) + C(r,2) + C(r,1).
Int ray_label_count(int r);

// The ray generator: for l < b < a the pair
//   lambda = ((a-l)^b), mu = ((a-l)^l, (b-l)^(a-l)),
// and for the rectangle (a, a, a) the pair lambda = mu = (a^a).
ConePoint ray_generator(int r, const RayLabel& lab);

// Generator divided by the gcd of its entries.
ConePoint primitive_generator(int r, const RayLabel& lab);

enum class FacetKind { H, Hhat, J };

struct FacetId {
  FacetKind kind;
  int index;
  friend auto operator<=>(const FacetId&, const FacetId&) = default;
};

// Facet hyperplanes containing the ray: H_i (1 <= i <= r) iff b != i,
// Hhat_k (1 <= k <= r-1) iff a != k and l != k, J_j (1 <= j <= r-1) iff
// j <= l or j >= a or the label is a rectangle.
std::vector<FacetId> facet_incidence(int r, const RayLabel& lab);

// Number of facets of the rank-r cone: 3r - 2 once r >= 3; the degenerate
// ranks are computed from generator ranks.
long long facet_count(int r);

}  // namespace kostka
