#pragma once

#include <cstdint>
#include <vector>

#include "kostka/ints.hpp"

namespace kostka {

// Integer partition: non-increasing nonnegative parts. Trailing zeros are
// stripped on construction; the ambient length, where one matters, is
// carried by ConePoint.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts);

  static Partition repeat(const Int& part, std::size_t count);

  const std::vector<Int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  Int sum() const;
  Int part(std::size_t i) const;  // zero beyond the stored length

  // Column heights of the Young diagram.
  Partition conjugate() const;

  std::size_t distinct_part_count() const;
  bool is_rectangle() const { return distinct_part_count() == 1; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
};

// head followed by tail; requires head.back() >= tail.front().
Partition concat(const Partition& head, const Partition& tail);

// Dominance order: equal sums and every prefix sum of lambda at least the
// matching prefix sum of mu.
bool dominates(const Partition& lambda, const Partition& mu);

// Number of semistandard tableaux of shape lambda and content mu, computed
// by peeling horizontal strips with memoization. state_cap bounds the
// number of recursion states before ResourceLimit is thrown.
Int kostka_number(const Partition& lambda, const Partition& mu,
                  std::uint64_t state_cap = 10'000'000);

}  // namespace kostka
