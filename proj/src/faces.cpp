#include "kostka/faces.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "kostka/errors.hpp"
#include "kostka/linalg.hpp"

namespace kostka {

VertexBitset::VertexBitset(int nbits)
    : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

void VertexBitset::set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }

bool VertexBitset::test(int i) const {
  return (words_[i >> 6] >> (i & 63)) & 1ULL;
}

int VertexBitset::count() const {
  int n = 0;
  for (std::uint64_t w : words_) n += __builtin_popcountll(w);
  return n;
}

bool VertexBitset::contains(const VertexBitset& other) const {
  std::size_t n = std::max(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t mine = i < words_.size() ? words_[i] : 0;
    std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if (theirs & ~mine) return false;
  }
  return true;
}

std::vector<int> VertexBitset::members() const {
  std::vector<int> out;
  for (int i = 0; i < nbits_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::size_t VertexBitset::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool face_set_less(const VertexBitset& x, const VertexBitset& y) {
  int cx = x.count(), cy = y.count();
  if (cx != cy) return cx < cy;
  return x.members() < y.members();
}

LabelTable::LabelTable(int r) : r_(r) {
  if (r < 1) throw InvalidArgument("rank must be positive");
  if (r > kMaxRank)
    throw InvalidArgument("rank too large for the face machinery");
  labels_ = enumerate_ray_labels(r);
}

int LabelTable::index_of(const RayLabel& lab) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), lab);
  if (it == labels_.end() || !(*it == lab)) return -1;
  return static_cast<int>(it - labels_.begin());
}

namespace {

// Per-label masks over the value range 0..r. sel_b holds the b value,
// sel_ae the a and l values, cov the integers strictly between l and a.
// A label joins the closure of a set with aggregates (B, E, C) iff its b
// is in B, its a and l are in E, and its cov is inside C.
struct ClosureCtx {
  std::vector<std::uint64_t> sel_b, sel_ae, cov;

  explicit ClosureCtx(const LabelTable& table) {
    int n = table.size();
    sel_b.resize(n);
    sel_ae.resize(n);
    cov.resize(n);
    for (int i = 0; i < n; ++i) {
      const RayLabel& lab = table.label(i);
      sel_b[i] = 1ULL << lab.b;
      sel_ae[i] = (1ULL << lab.a) | (1ULL << lab.l);
      std::uint64_t c = 0;
      for (int v = lab.l + 1; v < lab.a; ++v) c |= 1ULL << v;
      cov[i] = c;
    }
  }

  VertexBitset close(const VertexBitset& in) const {
    std::uint64_t B = 0, E = 0, C = 0;
    int n = static_cast<int>(sel_b.size());
    for (int i = 0; i < n; ++i)
      if (in.test(i)) {
        B |= sel_b[i];
        E |= sel_ae[i];
        C |= cov[i];
      }
    VertexBitset out(n);
    for (int i = 0; i < n; ++i)
      if ((B & sel_b[i]) && (E & sel_ae[i]) == sel_ae[i] &&
          (cov[i] & ~C) == 0)
        out.set(i);
    return out;
  }
};

struct GeneratorRows {
  std::vector<std::vector<Int>> rows;

  explicit GeneratorRows(const LabelTable& table) {
    rows.reserve(table.size());
    for (const RayLabel& lab : table.labels())
      rows.push_back(primitive_generator(table.r(), lab).coordinates());
  }

  int dimension(const VertexBitset& s) const {
    std::vector<std::vector<Int>> sub;
    for (int i : s.members()) sub.push_back(rows[i]);
    return integer_matrix_rank(std::move(sub)) - 1;
  }
};

struct Enumeration {
  LabelTable table;
  std::unordered_map<VertexBitset, int, VertexBitsetHash> dim_of;

  Enumeration(int r, int dim_cap, const EnumOptions& opts) : table(r) {
    ClosureCtx ctx(table);
    GeneratorRows gens(table);
    int n = table.size();
    std::vector<VertexBitset> queue;
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(opts.time_budget_seconds));
    auto note = [&](VertexBitset s) -> void {
      if (dim_of.count(s)) return;
      if (dim_of.size() >= opts.max_faces)
        throw ResourceLimit("face cap exceeded; raise KOSTKA_MAX_FACES");
      int d = gens.dimension(s);
      dim_of.emplace(s, d);
      if (d < dim_cap) queue.push_back(std::move(s));
    };
    for (int i = 0; i < n; ++i) {
      VertexBitset v(n);
      v.set(i);
      note(std::move(v));
    }
    std::uint64_t steps = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      VertexBitset face = queue[qi];
      for (int v = 0; v < n; ++v) {
        if (face.test(v)) continue;
        if (opts.time_budget_seconds > 0 && (++steps & 255) == 0 &&
            std::chrono::steady_clock::now() > deadline)
          throw ResourceLimit("time budget exceeded");
        VertexBitset grown = face;
        grown.set(v);
        note(ctx.close(grown));
      }
    }
  }
};

}  // namespace

std::vector<RayLabel> face_labels(const FaceVertexSet& fs) {
  LabelTable table(fs.r);
  std::vector<RayLabel> out;
  for (int i : fs.members.members()) out.push_back(table.label(i));
  return out;
}

FaceVertexSet minimal_face(int r, const std::vector<RayLabel>& labels) {
  if (labels.empty())
    throw InvalidArgument("minimal_face needs at least one label");
  LabelTable table(r);
  ClosureCtx ctx(table);
  VertexBitset in(table.size());
  for (const RayLabel& lab : labels) {
    int idx = table.index_of(lab);
    if (idx < 0)
      throw InvalidArgument("label is not a ray label for this rank");
    in.set(idx);
  }
  return FaceVertexSet{r, ctx.close(in)};
}

int face_dimension(const FaceVertexSet& fs) {
  LabelTable table(fs.r);
  GeneratorRows gens(table);
  return gens.dimension(fs.members);
}

bool is_edge(int r, const RayLabel& u, const RayLabel& v) {
  if (!ray_label_valid(u, r) || !ray_label_valid(v, r))
    throw InvalidArgument("label is not a ray label for this rank");
  if (u == v) throw InvalidArgument("is_edge needs two distinct labels");
  const RayLabel* x = &u;
  const RayLabel* y = &v;
  if (x->a - x->b > y->a - y->b) std::swap(x, y);
  if (x->rectangle()) {
    // (a,a,a) against (a',b',l'), possibly also a rectangle.
    return y->rectangle() || x->a == y->b || x->a >= y->a || y->l >= x->a;
  }
  int agree = (x->a == y->a) + (x->b == y->b) + (x->l == y->l);
  return agree >= 2 || x->l >= y->a || y->l >= x->a;
}

std::vector<std::pair<FaceVertexSet, int>> enumerate_faces_with_dims(
    int r, std::optional<int> dim, const EnumOptions& opts) {
  if (r < 1) throw InvalidArgument("rank must be positive");
  int top = 2 * r - 2;
  if (dim && (*dim < -1 || *dim > top))
    throw InvalidArgument("dimension out of range");
  std::vector<std::pair<FaceVertexSet, int>> out;
  if (dim && *dim == -1) {
    LabelTable table(r);
    out.emplace_back(FaceVertexSet{r, VertexBitset(table.size())}, -1);
    return out;
  }
  int cap = dim ? *dim : top;
  Enumeration enumr(r, cap, opts);
  if (!dim)
    out.emplace_back(FaceVertexSet{r, VertexBitset(enumr.table.size())}, -1);
  std::vector<std::pair<VertexBitset, int>> picked;
  for (const auto& [mask, d] : enumr.dim_of)
    if (!dim || d == *dim) picked.emplace_back(mask, d);
  std::sort(picked.begin(), picked.end(),
            [](const auto& x, const auto& y) {
              return face_set_less(x.first, y.first);
            });
  for (auto& [mask, d] : picked)
    out.emplace_back(FaceVertexSet{r, std::move(mask)}, d);
  return out;
}

std::vector<FaceVertexSet> enumerate_faces(int r, std::optional<int> dim,
                                           const EnumOptions& opts) {
  std::vector<FaceVertexSet> out;
  for (auto& [fs, d] : enumerate_faces_with_dims(r, dim, opts))
    out.push_back(std::move(fs));
  return out;
}

std::map<int, std::uint64_t> face_counts(int r, const EnumOptions& opts) {
  if (r < 1) throw InvalidArgument("rank must be positive");
  Enumeration enumr(r, 2 * r - 2, opts);
  std::map<int, std::uint64_t> counts;
  counts[-1] = 1;
  for (const auto& [mask, d] : enumr.dim_of) ++counts[d];
  return counts;
}

MaxFace max_face_vertices(int r, int d, const EnumOptions& opts) {
  if (r < 1) throw InvalidArgument("rank must be positive");
  if (d < 0 || d > 2 * r - 2) throw InvalidArgument("dimension out of range");
  Enumeration enumr(r, d, opts);
  std::vector<VertexBitset> picked;
  for (const auto& [mask, dd] : enumr.dim_of)
    if (dd == d) picked.push_back(mask);
  if (picked.empty())
    throw InvalidArgument("no face of this dimension");  // cannot happen
  std::sort(picked.begin(), picked.end(), face_set_less);
  MaxFace best;
  best.witness = FaceVertexSet{r, picked.back()};
  best.max_vertices = picked.back().count();
  return best;
}

Int max_face_vertices_closed_form(long long d) {
  if (d < 0) throw InvalidArgument("dimension must be nonnegative");
  Int m = 1;
  for (long long i = 1; i <= 3; ++i) m *= Int((d + 2 + i) / 3);
  return m;
}

FaceVertexSet construct_max_face(int r, int z1, int z2, int z3) {
  if (z1 < 1 || z2 < 1 || z3 < 1)
    throw InvalidArgument("box sides must be positive");
  long long d = static_cast<long long>(z1) + z2 + z3 - 3;
  if (r < 1 || d > 2 * r - 2 || r <= d + 1)
    throw InvalidArgument("rank too small for this box");
  LabelTable table(r);
  VertexBitset mask(table.size());
  for (int i = 0; i < table.size(); ++i) {
    const RayLabel& lab = table.label(i);
    if (lab.rectangle()) continue;
    if (lab.l < z1 && z1 <= lab.b && lab.b <= z1 + z2 - 1 &&
        z1 + z2 - 1 <= r - z3 && r - z3 < lab.a)
      mask.set(i);
  }
  return FaceVertexSet{r, mask};
}

OrderClass canonical_class(std::vector<RayLabel> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<int> values;
  for (const RayLabel& lab : labels) {
    values.push_back(lab.a);
    values.push_back(lab.b);
    values.push_back(lab.l);
  }
  std::vector<int> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  OrderClass oc;
  oc.t = static_cast<int>(sorted.size());
  for (int v : values)
    oc.canonical.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
  return oc;
}

}  // namespace kostka
