#include "kostka/partition.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "kostka/errors.hpp"

namespace kostka {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw InvalidArgument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::repeat(const Int& part, std::size_t count) {
  if (part < 0) throw InvalidArgument("partition parts must be nonnegative");
  if (part == 0) return Partition();
  return Partition(std::vector<Int>(count, part));
}

Int Partition::sum() const {
  Int s = 0;
  for (const Int& p : parts_) s += p;
  return s;
}

Int Partition::part(std::size_t i) const {
  return i < parts_.size() ? parts_[i] : Int(0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  if (parts_[0] > 10'000'000)
    throw ResourceLimit("partition too wide to conjugate");
  long long width = parts_[0].convert_to<long long>();
  std::vector<Int> cols;
  cols.reserve(static_cast<std::size_t>(width));
  std::size_t rows = parts_.size();
  for (long long j = 1; j <= width; ++j) {
    while (rows > 0 && parts_[rows - 1] < j) --rows;
    cols.emplace_back(rows);
  }
  return Partition(std::move(cols));
}

std::size_t Partition::distinct_part_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (i == 0 || parts_[i] != parts_[i - 1]) ++n;
  return n;
}

Partition concat(const Partition& head, const Partition& tail) {
  if (head.empty()) return tail;
  if (tail.empty()) return head;
  if (head.parts().back() < tail.parts().front())
    throw InvalidArgument("concat would break the non-increasing order");
  std::vector<Int> parts = head.parts();
  parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
  return Partition(std::move(parts));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.sum() != mu.sum()) return false;
  Int pl = 0, pm = 0;
  std::size_t n = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < n; ++i) {
    pl += lambda.part(i);
    pm += mu.part(i);
    if (pl < pm) return false;
  }
  return true;
}

Int kostka_number(const Partition& lambda, const Partition& mu,
                  std::uint64_t state_cap) {
  if (lambda.sum() != mu.sum()) return 0;
  if (lambda.empty()) return 1;

  const std::vector<Int>& content = mu.parts();
  std::map<std::pair<std::vector<Int>, std::size_t>, Int> table;
  std::uint64_t states = 0;

  // f(shape, t) = number of SSYT of `shape` with content (mu_1..mu_t).
  // The boxes holding the largest entry t form a horizontal strip
  // shape/nu, so f(shape, t) = sum over such nu of f(nu, t-1).
  auto f = [&](auto&& self, const std::vector<Int>& shape,
               std::size_t t) -> Int {
    if (shape.empty()) return 1;
    if (t == 0) return 0;
    if (++states > state_cap)
      throw ResourceLimit("kostka_number: state cap exceeded");
    auto key = std::make_pair(shape, t);
    if (auto it = table.find(key); it != table.end()) return it->second;

    Int total = 0;
    std::vector<Int> nu(shape);
    // Choose nu rowwise: nu_i in [shape_{i+1}, shape_i], removing mu_t
    // boxes in total.
    auto rec = [&](auto&& inner, std::size_t row, Int remaining) -> void {
      if (row == shape.size()) {
        if (remaining == 0) {
          std::vector<Int> trimmed(nu);
          while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
          total += self(self, trimmed, t - 1);
        }
        return;
      }
      Int below = row + 1 < shape.size() ? shape[row + 1] : Int(0);
      Int hi = shape[row];
      for (Int v = hi; v >= below; --v) {
        if (hi - v > remaining) break;
        nu[row] = v;
        inner(inner, row + 1, remaining - (hi - v));
      }
      nu[row] = hi;
    };
    rec(rec, 0, content[t - 1]);
    table.emplace(std::move(key), total);
    return total;
  };

  return f(f, lambda.parts(), content.size());
}

}  // namespace kostka
