#include "kostka/linalg.hpp"

#include <cmath>
#include <cstdlib>

#include "kostka/errors.hpp"

namespace kostka {

namespace {

// Bareiss elimination; intermediate entries are minors of the input, so
// with T = Int everything is exact and with T = __int128 exactness holds
// whenever the caller has certified a bound on those minors.
template <typename T>
int bareiss_rank(std::vector<std::vector<T>>& m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int integer_matrix_rank(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols)
      throw InvalidArgument("integer_matrix_rank: ragged matrix");
  if (cols == 0) return 0;

  Int maxabs = 0;
  for (const auto& r : rows)
    for (const Int& x : r)
      if (abs(x) > maxabs) maxabs = abs(x);
  if (maxabs == 0) return 0;

  // Hadamard: every k x k minor is at most (sqrt(cols) * maxabs)^k.
  std::size_t k = std::min(rows.size(), cols);
  bool narrow = false;
  if (maxabs < 1'000'000) {
    double logbound = k * (0.5 * std::log(static_cast<double>(cols)) +
                           std::log(maxabs.convert_to<double>()));
    narrow = logbound < std::log(1.5e38);
  }

  if (narrow) {
    std::vector<std::vector<__int128>> m(rows.size(),
                                         std::vector<__int128>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m[i][j] = rows[i][j].convert_to<long long>();
    return bareiss_rank(m);
  }
  return bareiss_rank(rows);
}

}  // namespace kostka
