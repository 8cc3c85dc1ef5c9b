#include "kostka/rays.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kostka/errors.hpp"
#include "kostka/linalg.hpp"

namespace kostka {

RayLabel normalize_ray_label(int a, int b, int l) {
  if (a == b) {
    if (a < 1) throw InvalidArgument("rectangle label needs a >= 1");
    return RayLabel{a, a, a};
  }
  if (!(0 <= l && l < b && b < a))
    throw InvalidArgument("ray label needs 0 <= l < b < a or a == b");
  return RayLabel{a, b, l};
}

bool ray_label_valid(const RayLabel& lab, int r) {
  if (r < 1) return false;
  if (lab.a == lab.b) return lab.l == lab.a && 1 <= lab.a && lab.a <= r;
  return 0 <= lab.l && lab.l < lab.b && lab.b < lab.a && lab.a <= r;
}

std::vector<RayLabel> enumerate_ray_labels(int r) {
  if (r < 1) throw InvalidArgument("rank must be positive");
  if (r > 500) throw ResourceLimit("rank too large to list ray labels");
  std::vector<RayLabel> out;
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b < a; ++b)
      for (int l = 0; l < b; ++l) out.push_back(RayLabel{a, b, l});
    out.push_back(RayLabel{a, a, a});
  }
  return out;
}

Int ray_label_count(int r) {
  if (r < 1) throw InvalidArgument("rank must be positive");
  Int n(r);
  return binomial(n, 3) + binomial(n, 2) + binomial(n, 1);
}

ConePoint ray_generator(int r, const RayLabel& lab) {
  if (!ray_label_valid(lab, r))
    throw InvalidArgument("label is not a ray label for this rank");
  if (lab.rectangle()) {
    Partition rect = Partition::repeat(lab.a, lab.a);
    return ConePoint(rect, rect, r);
  }
  Int al = lab.a - lab.l, bl = lab.b - lab.l;
  Partition lambda = Partition::repeat(al, lab.b);
  Partition mu = concat(Partition::repeat(al, lab.l),
                        Partition::repeat(bl, static_cast<std::size_t>(
                                                  lab.a - lab.l)));
  return ConePoint(lambda, mu, r);
}

ConePoint primitive_generator(int r, const RayLabel& lab) {
  ConePoint g = ray_generator(r, lab);
  Int d = 0;
  for (const Int& x : g.lambda().parts()) d = gcd(d, x);
  for (const Int& x : g.mu().parts()) d = gcd(d, x);
  if (d <= 1) return g;
  auto divide = [&](const Partition& p) {
    std::vector<Int> parts = p.parts();
    for (Int& x : parts) x /= d;
    return Partition(std::move(parts));
  };
  return ConePoint(divide(g.lambda()), divide(g.mu()), r);
}

std::vector<FacetId> facet_incidence(int r, const RayLabel& lab) {
  if (!ray_label_valid(lab, r))
    throw InvalidArgument("label is not a ray label for this rank");
  std::vector<FacetId> out;
  for (int i = 1; i <= r; ++i)
    if (lab.b != i) out.push_back(FacetId{FacetKind::H, i});
  for (int k = 1; k <= r - 1; ++k)
    if (lab.a != k && lab.l != k) out.push_back(FacetId{FacetKind::Hhat, k});
  for (int j = 1; j <= r - 1; ++j)
    if (j <= lab.l || j >= lab.a || lab.rectangle())
      out.push_back(FacetId{FacetKind::J, j});
  return out;
}

long long facet_count(int r) {
  if (r < 1) throw InvalidArgument("rank must be positive");
  if (r >= 3) return 3LL * r - 2;
  // Degenerate ranks: count distinct hyperplane sections whose incident
  // generators span a hyperplane of the cone (rank 2r - 2).
  std::vector<RayLabel> labels = enumerate_ray_labels(r);
  std::vector<FacetId> all;
  for (int i = 1; i <= r; ++i) all.push_back(FacetId{FacetKind::H, i});
  for (int k = 1; k <= r - 1; ++k) all.push_back(FacetId{FacetKind::Hhat, k});
  for (int j = 1; j <= r - 1; ++j) all.push_back(FacetId{FacetKind::J, j});
  std::set<std::vector<int>> seen;
  long long count = 0;
  for (const FacetId& f : all) {
    std::vector<int> members;
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto inc = facet_incidence(r, labels[i]);
      if (std::find(inc.begin(), inc.end(), f) != inc.end()) {
        members.push_back(static_cast<int>(i));
        gens.push_back(primitive_generator(r, labels[i]).coordinates());
      }
    }
    if (integer_matrix_rank(gens) != 2 * r - 2) continue;
    if (seen.insert(members).second) ++count;
  }
  return count;
}

}  // namespace kostka
