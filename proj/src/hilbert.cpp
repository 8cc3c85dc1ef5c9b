#include "kostka/hilbert.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "kostka/errors.hpp"

namespace kostka {

namespace {

// Bitset of all subset sums of the given column heights; bit s is set iff
// some subset of the columns sums to s. n is the full sum.
std::vector<std::uint64_t> subset_sums(const Partition& cols, long long n) {
  std::size_t words = static_cast<std::size_t>(n / 64 + 1);
  std::vector<std::uint64_t> acc(words, 0);
  acc[0] = 1;
  for (const Int& c : cols.parts()) {
    long long h = c.convert_to<long long>();
    std::size_t wshift = static_cast<std::size_t>(h / 64);
    int bshift = static_cast<int>(h % 64);
    for (std::size_t i = words; i-- > wshift;) {
      std::uint64_t v = acc[i - wshift] << bshift;
      if (bshift && i > wshift) v |= acc[i - wshift - 1] >> (64 - bshift);
      acc[i] |= v;
    }
  }
  return acc;
}

}  // namespace

bool is_hilbert_basis_element(const ConePoint& p) {
  if (p.is_zero())
    throw InvalidArgument("the zero point is not a candidate");
  Int total = p.lambda().sum();
  if (total > 5'000'000)
    throw ResourceLimit("point too large for the subset-sum sweep");
  long long n = total.convert_to<long long>();
  std::vector<std::uint64_t> sl = subset_sums(p.lambda().conjugate(), n);
  std::vector<std::uint64_t> sm = subset_sums(p.mu().conjugate(), n);
  // Reducible iff the two sets share a sum strictly between 0 and n. Both
  // sets are closed under s -> n - s, so scanning s <= n/2 is enough.
  for (long long s = 1; s <= n / 2; ++s) {
    std::size_t w = static_cast<std::size_t>(s / 64);
    std::uint64_t bit = 1ULL << (s % 64);
    if ((sl[w] & bit) && (sm[w] & bit)) return false;
  }
  return true;
}

namespace {

// All ways to split p into x + (p - x) with both sides partitions,
// 0 < |x| < |p|; descending lexicographic order on x.
std::vector<Partition> partition_splits(const Partition& p) {
  std::vector<Partition> out;
  std::size_t k = p.length();
  std::vector<Int> x(k);
  auto rec = [&](auto&& self, std::size_t row) -> void {
    if (row == k) {
      Partition cand{std::vector<Int>(x)};
      if (!cand.empty() && cand.sum() < p.sum()) out.push_back(cand);
      return;
    }
    // x non-increasing and p - x non-increasing.
    Int hi = p.parts()[row];
    if (row > 0) hi = std::min(hi, x[row - 1]);
    Int lo = 0;
    if (row > 0) {
      Int t = p.parts()[row] - (p.parts()[row - 1] - x[row - 1]);
      if (t > lo) lo = t;
    }
    for (Int v = hi; v >= lo; --v) {
      x[row] = v;
      self(self, row + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::optional<std::pair<ConePoint, ConePoint>> decompose(const ConePoint& p,
                                                         const Int& sum_bound) {
  if (p.is_zero())
    throw InvalidArgument("the zero point is not a candidate");
  if (p.lambda().sum() > sum_bound)
    throw ResourceLimit("point too large for exhaustive decomposition");
  std::vector<Partition> lsplits = partition_splits(p.lambda());
  std::map<Int, std::vector<Partition>> msplits_by_sum;
  for (Partition& m : partition_splits(p.mu()))
    msplits_by_sum[m.sum()].push_back(std::move(m));
  for (const Partition& l : lsplits) {
    auto it = msplits_by_sum.find(l.sum());
    if (it == msplits_by_sum.end()) continue;
    for (const Partition& m : it->second) {
      if (!dominates(l, m)) continue;
      std::vector<Int> l2, m2;
      for (std::size_t i = 0; i < p.lambda().length(); ++i)
        l2.push_back(p.lambda().parts()[i] - l.part(i));
      for (std::size_t i = 0; i < p.mu().length(); ++i)
        m2.push_back(p.mu().parts()[i] - m.part(i));
      Partition lrest(std::move(l2)), mrest(std::move(m2));
      if (!dominates(lrest, mrest)) continue;
      return std::make_pair(ConePoint(l, m, p.ambient()),
                            ConePoint(lrest, mrest, p.ambient()));
    }
  }
  return std::nullopt;
}

Int min_coprime_rank(const Int& lambda1, const Int& mu1) {
  if (mu1 < 1 || lambda1 <= mu1)
    throw InvalidArgument("needs lambda1 > mu1 >= 1");
  Int z = lambda1;
  while (gcd(z, mu1) != 1) ++z;
  return z;
}

Construction construct_gcd1(const Int& lambda1, const Int& mu1) {
  Int r = min_coprime_rank(lambda1, mu1);
  if (r - lambda1 > mu1 - 1)
    throw std::logic_error("coprime rank overshot mu1 - 1");
  std::size_t m1 = mu1.convert_to<std::size_t>();
  std::size_t rr = r.convert_to<std::size_t>();
  std::size_t l1 = lambda1.convert_to<std::size_t>();
  Partition lambda = Partition::repeat(lambda1, m1);
  Partition mu = concat(Partition::repeat(mu1, rr - m1),
                        Partition::repeat(mu1 - Int(rr - l1), m1));
  return Construction{r, ConePoint(lambda, mu, static_cast<int>(rr))};
}

Construction construct_gcd2(const Int& lambda1, const Int& mu1) {
  if (mu1 < 1 || lambda1 < mu1)
    throw InvalidArgument("needs lambda1 >= mu1 >= 1");
  if (gcd(lambda1 + 1, mu1 + 1) != 1)
    throw InvalidArgument("needs gcd(lambda1+1, mu1+1) = 1");
  if (2 * mu1 < lambda1) throw InvalidArgument("needs 2 mu1 >= lambda1");
  Int r = lambda1 + 1;
  std::size_t s = (2 * mu1 - lambda1 + 1).convert_to<std::size_t>();
  std::size_t rest = (lambda1 - mu1).convert_to<std::size_t>();
  Partition lambda = concat(Partition::repeat(lambda1, s),
                            Partition::repeat(lambda1 - 1, rest));
  Partition mu = Partition::repeat(mu1, r.convert_to<std::size_t>());
  Construction c{r, ConePoint(lambda, mu, r.convert_to<int>())};
  if (!is_hilbert_basis_element(c.point))
    throw std::logic_error("construction unexpectedly reducible");
  return c;
}

InitialPair classify_initial_pair(const Int& lambda1, const Int& mu1) {
  if (mu1 < 1 || lambda1 < mu1)
    throw InvalidArgument("needs lambda1 >= mu1 >= 1");
  InitialPair ip;
  ip.lambda1 = lambda1;
  ip.mu1 = mu1;
  ip.conditions[0] = gcd(lambda1, mu1) == 1;
  ip.conditions[1] = gcd(lambda1 + 1, mu1) == 1;
  ip.conditions[2] = gcd(lambda1 + 1, mu1 + 1) == 1 && 2 * mu1 >= lambda1;
  ip.sufficient = ip.conditions[0] || ip.conditions[1] || ip.conditions[2];
  return ip;
}

bool is_initial_at_width(const Int& r, const Int& mu1) {
  if (mu1 < 1 || r < mu1)
    throw InvalidArgument("needs r >= mu1 >= 1");
  return gcd(r, mu1) == 1;
}

bool lies_on_2face(const ConePoint& p) {
  std::size_t dl = p.lambda().distinct_part_count();
  std::size_t dm = p.mu().distinct_part_count();
  return (dl == 1 && dm >= 1 && dm <= 2) || (dm == 1 && dl >= 1 && dl <= 2);
}

ScanResult scan_initial(const Int& lambda1, const Int& mu1, int r,
                        std::uint64_t budget) {
  if (mu1 < 1 || lambda1 < mu1)
    throw InvalidArgument("needs lambda1 >= mu1 >= 1");
  if (Int(r) < lambda1) throw InvalidArgument("needs r >= lambda1");
  ScanResult res;

  std::size_t rr = static_cast<std::size_t>(r);
  Int max_total = mu1 * r;
  // `true` from here means stop the search: either a certificate was
  // found or the next candidate would overrun the budget.
  auto check_pair = [&](const Partition& lambda, const Partition& mu) -> bool {
    if (res.examined >= budget) {
      res.status = ScanResult::Status::BudgetExceeded;
      return true;
    }
    ++res.examined;
    ConePoint p(lambda, mu, r);
    if (is_hilbert_basis_element(p)) {
      res.status = ScanResult::Status::Found;
      res.certificate = p;
      return true;
    }
    return false;
  };

  // Candidates by total size n, then lambda and mu each in descending
  // lexicographic order, with rowwise dominance pruning for mu.
  for (Int n = lambda1; n <= max_total; ++n) {
    auto mu_dfs = [&](auto&& self, const Partition& lambda,
                      std::vector<Int>& mrow, Int mleft,
                      Int lprefix_minus_mprefix) -> bool {
      if (mleft == 0)
        return check_pair(lambda, Partition{std::vector<Int>(mrow)});
      if (mrow.size() >= rr) return false;
      Int hi = mrow.empty() ? std::min(mu1, mleft) : std::min(mrow.back(), mleft);
      for (Int v = hi; v >= 1; --v) {
        if (mrow.empty() && v != mu1) break;  // first entry pinned
        Int gap = lprefix_minus_mprefix + lambda.part(mrow.size()) - v;
        if (gap < 0) continue;  // mu prefix would overtake lambda's
        Int rem = mleft - v;
        if (rem > v * Int(rr - mrow.size() - 1)) continue;  // cannot finish
        mrow.push_back(v);
        bool stop = self(self, lambda, mrow, rem, gap);
        mrow.pop_back();
        if (stop) return true;
      }
      return false;
    };
    auto lam_dfs = [&](auto&& self, std::vector<Int>& row, Int left) -> bool {
      if (left == 0) {
        Partition lambda{std::vector<Int>(row)};
        std::vector<Int> mrow;
        return mu_dfs(mu_dfs, lambda, mrow, n, 0);
      }
      if (row.size() >= rr) return false;
      Int hi = std::min(row.back(), left);
      for (Int v = hi; v >= 1; --v) {
        if (left - v > v * Int(rr - row.size() - 1)) continue;
        row.push_back(v);
        bool stop = self(self, row, left - v);
        row.pop_back();
        if (stop) return true;
      }
      return false;
    };
    std::vector<Int> lrow{lambda1};
    if (lam_dfs(lam_dfs, lrow, n - lambda1)) break;
  }
  if (res.status == ScanResult::Status::Found) {
    // Width sanity: a basis element as wide as the rank must be a pair of
    // rectangles.
    if (Int(r) == lambda1 &&
        !(res.certificate->lambda().is_rectangle() &&
          res.certificate->mu().is_rectangle()))
      throw std::logic_error("wide certificate is not a rectangle pair");
  }
  return res;
}

}  // namespace kostka
