#pragma once

#include <vector>

#include "kostka/partition.hpp"

namespace kostka {

// A lattice point of the Kostka cone of rank r: a pair of partitions with
// at most r parts, equal sums, lambda dominating mu.
class ConePoint {
 public:
  ConePoint(Partition lambda, Partition mu, int ambient);

  const Partition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }
  int ambient() const { return ambient_; }

  bool is_zero() const { return lambda_.empty(); }

  // The 2r coordinates (lambda padded to r, then mu padded to r).
  std::vector<Int> coordinates() const;

  friend bool operator==(const ConePoint&, const ConePoint&) = default;

 private:
  Partition lambda_, mu_;
  int ambient_;
};

// Same point viewed in a larger ambient rank.
ConePoint embed(const ConePoint& p, int ambient);

// Coordinatewise sum; ambients must agree.
ConePoint operator+(const ConePoint& p, const ConePoint& q);

}  // namespace kostka
