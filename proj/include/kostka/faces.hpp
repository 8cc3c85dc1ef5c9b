#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kostka/rays.hpp"

namespace kostka {

// Subset of the vertex set of the rank-r slice polytope, as a bitset over
// the lexicographic label order.
class VertexBitset {
 public:
  VertexBitset() = default;
  explicit VertexBitset(int nbits);

  int bits() const { return nbits_; }
  void set(int i);
  bool test(int i) const;
  int count() const;
  bool contains(const VertexBitset& other) const;
  std::vector<int> members() const;

  friend bool operator==(const VertexBitset&, const VertexBitset&) = default;

  std::size_t hash() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexBitsetHash {
  std::size_t operator()(const VertexBitset& s) const { return s.hash(); }
};

// (count, members) lexicographic order; used for deterministic output.
bool face_set_less(const VertexBitset& x, const VertexBitset& y);

// The labels of rank r in lexicographic order with index lookup. Face
// machinery encodes label values 0..r in 64-bit masks, hence the rank cap.
class LabelTable {
 public:
  explicit LabelTable(int r);

  int r() const { return r_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<RayLabel>& labels() const { return labels_; }
  const RayLabel& label(int idx) const { return labels_[idx]; }
  int index_of(const RayLabel& lab) const;  // -1 if absent

  static constexpr int kMaxRank = 62;

 private:
  int r_;
  std::vector<RayLabel> labels_;
};

struct FaceVertexSet {
  int r = 0;
  VertexBitset members;
  friend bool operator==(const FaceVertexSet&, const FaceVertexSet&) = default;
};

std::vector<RayLabel> face_labels(const FaceVertexSet& fs);

// Smallest face whose vertex set contains the given labels: keep every
// label (a', b', l') such that
//   (1) b' appears among the input b values,
//   (2) a' and l' appear among the input a and l values, and
//   (3) the integers strictly between l' and a' are covered by the union
//       of the input open intervals (l_i, a_i),
// with rectangles read as a = b = l. Throws on an empty input.
FaceVertexSet minimal_face(int r, const std::vector<RayLabel>& labels);

// dim of the polytope face = rank of the member generators - 1; the empty
// face has dimension -1.
int face_dimension(const FaceVertexSet& fs);

// Direct two-label test, no enumeration: order the pair so that
// a - b <= a' - b'. For a rectangle (a,a,a) against (a',b',l') the pair
// spans an edge iff a' = b' or a = b' or a >= a' or l' >= a; for two
// non-rectangles iff two of {a = a', b = b', l = l'} hold, or l >= a', or
// l' >= a.
bool is_edge(int r, const RayLabel& u, const RayLabel& v);

struct EnumOptions {
  std::uint64_t max_faces = 2'000'000;
  double time_budget_seconds = 0.0;  // 0 means no time cap
};

// All faces of the rank-r slice polytope, improper face included; with a
// dimension given, only the faces of exactly that dimension. Closure-BFS:
// seed with vertices, augment each face by one outside vertex, close,
// deduplicate. Deterministic output order (size, then members).
std::vector<FaceVertexSet> enumerate_faces(int r, std::optional<int> dim,
                                           const EnumOptions& opts = {});

// Same, with each face's dimension.
std::vector<std::pair<FaceVertexSet, int>> enumerate_faces_with_dims(
    int r, std::optional<int> dim, const EnumOptions& opts = {});

// Face counts by dimension, improper face included.
std::map<int, std::uint64_t> face_counts(int r, const EnumOptions& opts = {});

// Largest vertex count among d-faces, with one witness.
struct MaxFace {
  long long max_vertices = 0;
  FaceVertexSet witness;
};
MaxFace max_face_vertices(int r, int d, const EnumOptions& opts = {});

// floor((d+3)/3) * floor((d+4)/3) * floor((d+5)/3): the stable value of
// max_face_vertices once r is large relative to d.
Int max_face_vertices_closed_form(long long d);

// The box face {(a,b,l) : l < z1 <= b <= z1+z2-1 <= r-z3 < a}, a d-face
// with z1*z2*z3 vertices for d = z1+z2+z3-3 when r > d+1.
FaceVertexSet construct_max_face(int r, int z1, int z2, int z3);

// Order-isomorphism invariant of a label multiset: entries of the lex
// sorted label list compressed to ranks 0..t-1.
struct OrderClass {
  std::vector<int> canonical;
  int t = 0;
  friend auto operator<=>(const OrderClass&, const OrderClass&) = default;
};
OrderClass canonical_class(std::vector<RayLabel> labels);

}  // namespace kostka
