#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "kostka/cone_point.hpp"

namespace kostka {

// Irreducibility test for a nonzero lattice point: (lambda, mu) is a
// Hilbert basis element iff no proper nonempty subset of the columns of
// lambda has the same total as some subset of the columns of mu. Subset
// sums are collected with a bitset sweep; achievable sums come in
// complementary pairs, so only s <= |lambda|/2 is scanned.
bool is_hilbert_basis_element(const ConePoint& p);

// Exhaustive search for a two-term decomposition, or nullopt when p is
// irreducible. Splits lambda and mu rowwise into partition pairs and
// returns the first split (descending lexicographic order on the lambda
// part, then the mu part) whose two halves both lie in the cone.
// sum_bound caps |lambda|.
std::optional<std::pair<ConePoint, ConePoint>> decompose(
    const ConePoint& p, const Int& sum_bound = 20);

// Least z >= lambda1 with gcd(z, mu1) = 1; at most lambda1 + mu1 - 1.
Int min_coprime_rank(const Int& lambda1, const Int& mu1);

struct Construction {
  Int r;
  ConePoint point;
};

// For lambda1 > mu1 >= 1: the pair lambda = (lambda1^mu1),
// mu = (mu1^(r-mu1), (mu1-(r-lambda1))^mu1) at the rank
// r = min_coprime_rank(lambda1, mu1). Always a Hilbert basis element.
Construction construct_gcd1(const Int& lambda1, const Int& mu1);

// For lambda1 >= mu1 >= 1 with gcd(lambda1+1, mu1+1) = 1 and
// 2 mu1 >= lambda1: the pair lambda = (lambda1^(2mu1-lambda1+1),
// (lambda1-1)^(lambda1-mu1)), mu = (mu1^(lambda1+1)) at rank lambda1+1.
// The result is re-checked for irreducibility defensively.
Construction construct_gcd2(const Int& lambda1, const Int& mu1);

// The three sufficient coprimality conditions for (lambda1, mu1) to start
// some Hilbert basis element: gcd(lambda1, mu1) = 1; gcd(lambda1+1, mu1)
// = 1; gcd(lambda1+1, mu1+1) = 1 together with 2 mu1 >= lambda1.
struct InitialPair {
  Int lambda1, mu1;
  std::array<bool, 3> conditions{};
  bool sufficient = false;
};
InitialPair classify_initial_pair(const Int& lambda1, const Int& mu1);

// Whether some Hilbert basis element of the rank-r cone has mu1 as the
// first entry of mu with the widest possible lambda: gcd(r, mu1) = 1.
bool is_initial_at_width(const Int& r, const Int& mu1);

// Every Hilbert basis element lies on a face of dimension <= 2; for the
// cone this reads: one of lambda, mu is a rectangle and the other has at
// most two distinct part sizes.
bool lies_on_2face(const ConePoint& p);

struct ScanResult {
  enum class Status { Found, ExhaustedNo, BudgetExceeded };
  Status status = Status::ExhaustedNo;
  std::optional<ConePoint> certificate;
  std::uint64_t examined = 0;
};

// Deterministic search for a Hilbert basis element of the rank-r cone
// whose first entries are (lambda1, mu1). Candidates are visited by total
// size, then in lexicographic order, with dominance pruning; `budget`
// caps the number of candidate pairs tested.
ScanResult scan_initial(const Int& lambda1, const Int& mu1, int r,
                        std::uint64_t budget);

}  // namespace kostka
