#include <doctest.h>

#include <algorithm>
#include <vector>

#include "kostka/errors.hpp"
#include "kostka/rays.hpp"

using namespace kostka;

namespace {

// Coordinate-level membership in the Obs.-style hyperplanes, used as an
// oracle for the combinatorial incidence rules.
bool on_facet(int r, const ConePoint& p, const FacetId& f) {
  std::vector<Int> x = p.coordinates();
  auto lam = [&](int i) { return x[i - 1]; };          // 1-based
  auto mu = [&](int i) { return x[r + i - 1]; };
  switch (f.kind) {
    case FacetKind::H:
      return f.index < r ? lam(f.index) == lam(f.index + 1)
                         : lam(r) == 0;
    case FacetKind::Hhat:
      return mu(f.index) == mu(f.index + 1);
    case FacetKind::J: {
      Int sl = 0, sm = 0;
      for (int i = 1; i <= f.index; ++i) {
        sl += lam(i);
        sm += mu(i);
      }
      return sl == sm;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("label normalization") {
  CHECK(normalize_ray_label(2, 2, 0) == RayLabel{2, 2, 2});
  CHECK(normalize_ray_label(3, 3, 3) == RayLabel{3, 3, 3});
  CHECK(normalize_ray_label(3, 2, 1) == RayLabel{3, 2, 1});
  CHECK_THROWS_AS(normalize_ray_label(2, 3, 0), InvalidArgument);
  CHECK_THROWS_AS(normalize_ray_label(3, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(normalize_ray_label(0, 0, 0), InvalidArgument);
}

TEST_CASE("label validity") {
  CHECK(ray_label_valid(RayLabel{3, 2, 1}, 3));
  CHECK_FALSE(ray_label_valid(RayLabel{4, 2, 1}, 3));
  CHECK(ray_label_valid(RayLabel{3, 3, 3}, 3));
  CHECK_FALSE(ray_label_valid(RayLabel{3, 3, 0}, 3));  // not normalized
  CHECK_FALSE(ray_label_valid(RayLabel{3, 2, 2}, 5));
}

TEST_CASE("label enumeration") {
  std::vector<RayLabel> expect = {{1, 1, 1}, {2, 1, 0}, {2, 2, 2}, {3, 1, 0},
                                  {3, 2, 0}, {3, 2, 1}, {3, 3, 3}};
  CHECK(enumerate_ray_labels(3) == expect);
  CHECK(enumerate_ray_labels(1) == std::vector<RayLabel>{{1, 1, 1}});
  CHECK(enumerate_ray_labels(4).size() == 14);
  CHECK_THROWS_AS(enumerate_ray_labels(0), InvalidArgument);
}

TEST_CASE("label count formula") {
  for (int r = 1; r <= 30; ++r)
    CHECK(Int(enumerate_ray_labels(r).size()) == ray_label_count(r));
  CHECK(ray_label_count(13) == 377);  // vertex count of the rank-13 slice
}

TEST_CASE("labels come out sorted") {
  for (int r = 1; r <= 10; ++r) {
    std::vector<RayLabel> labs = enumerate_ray_labels(r);
    CHECK(std::is_sorted(labs.begin(), labs.end()));
  }
}

TEST_CASE("ray generators") {
  ConePoint g = ray_generator(5, RayLabel{5, 4, 2});
  CHECK(g.lambda() == Partition(std::vector<Int>{3, 3, 3, 3}));
  CHECK(g.mu() == Partition(std::vector<Int>{3, 3, 2, 2, 2}));

  ConePoint unit = ray_generator(3, RayLabel{1, 1, 1});
  CHECK(unit.lambda() == Partition(std::vector<Int>{1}));
  CHECK(unit.mu() == Partition(std::vector<Int>{1}));

  ConePoint g2 = ray_generator(5, RayLabel{5, 3, 1});
  CHECK(g2.lambda() == Partition(std::vector<Int>{4, 4, 4}));
  CHECK(g2.mu() == Partition(std::vector<Int>{4, 2, 2, 2, 2}));

  CHECK_THROWS_AS(ray_generator(4, RayLabel{5, 3, 1}), InvalidArgument);
}

TEST_CASE("primitive generators") {
  ConePoint p = primitive_generator(5, RayLabel{5, 3, 1});
  CHECK(p.lambda() == Partition(std::vector<Int>{2, 2, 2}));
  CHECK(p.mu() == Partition(std::vector<Int>{2, 1, 1, 1, 1}));

  CHECK(primitive_generator(5, RayLabel{5, 4, 2}) ==
        ray_generator(5, RayLabel{5, 4, 2}));

  ConePoint rect = primitive_generator(3, RayLabel{2, 2, 2});
  CHECK(rect.lambda() == Partition(std::vector<Int>{1, 1}));
  CHECK(rect.mu() == Partition(std::vector<Int>{1, 1}));
}

TEST_CASE("generators are valid cone points") {
  for (int r = 1; r <= 8; ++r)
    for (const RayLabel& lab : enumerate_ray_labels(r)) {
      ConePoint g = ray_generator(r, lab);
      CHECK(g.lambda().sum() == g.mu().sum());
      CHECK(dominates(g.lambda(), g.mu()));
    }
}

TEST_CASE("facet incidence examples") {
  std::vector<FacetId> inc = facet_incidence(3, RayLabel{3, 2, 1});
  std::vector<FacetId> expect = {{FacetKind::H, 1},
                                 {FacetKind::H, 3},
                                 {FacetKind::Hhat, 2},
                                 {FacetKind::J, 1}};
  CHECK(inc == expect);

  std::vector<FacetId> inc2 = facet_incidence(3, RayLabel{2, 1, 0});
  std::vector<FacetId> expect2 = {{FacetKind::H, 2},
                                  {FacetKind::H, 3},
                                  {FacetKind::Hhat, 1},
                                  {FacetKind::J, 2}};
  CHECK(inc2 == expect2);

  // Rectangles are on every J_j.
  for (int r = 2; r <= 6; ++r)
    for (int a = 1; a <= r; ++a) {
      std::vector<FacetId> inc3 = facet_incidence(r, RayLabel{a, a, a});
      for (int j = 1; j <= r - 1; ++j)
        CHECK(std::count(inc3.begin(), inc3.end(),
                         FacetId{FacetKind::J, j}) == 1);
    }
}

TEST_CASE("incidence rules match coordinate membership") {
  for (int r = 1; r <= 8; ++r) {
    std::vector<FacetId> all;
    for (int i = 1; i <= r; ++i) all.push_back({FacetKind::H, i});
    for (int k = 1; k <= r - 1; ++k) all.push_back({FacetKind::Hhat, k});
    for (int j = 1; j <= r - 1; ++j) all.push_back({FacetKind::J, j});
    for (const RayLabel& lab : enumerate_ray_labels(r)) {
      std::vector<FacetId> inc = facet_incidence(r, lab);
      ConePoint g = primitive_generator(r, lab);
      for (const FacetId& f : all) {
        bool listed = std::count(inc.begin(), inc.end(), f) > 0;
        CHECK(listed == on_facet(r, g, f));
      }
    }
  }
}

TEST_CASE("facet counts") {
  CHECK(facet_count(1) == 1);
  CHECK(facet_count(2) == 3);
  CHECK(facet_count(3) == 7);
  CHECK(facet_count(10) == 28);
}
