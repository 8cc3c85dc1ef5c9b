#include "kostka/kostka.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "kostka/errors.hpp"
#include "kostka/json_io.hpp"

using namespace kostka;

struct kostka_ctx {
  EnumOptions enum_opts;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(kostka_ctx* ctx, char** out, Fn&& fn) {
  if (!ctx || !out) return KOSTKA_EINVAL;
  *out = nullptr;
  try {
    std::string result = fn();
    *out = dup_string(result);
    if (!*out) {
      ctx->last_error = "out of memory";
      return KOSTKA_EINTERNAL;
    }
    ctx->last_error.clear();
    return KOSTKA_OK;
  } catch (const InvalidArgument& e) {
    ctx->last_error = e.what();
    return KOSTKA_EINVAL;
  } catch (const ResourceLimit& e) {
    ctx->last_error = e.what();
    return KOSTKA_ERESOURCE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return KOSTKA_EINTERNAL;
  }
}

Json parse(const char* text, const char* what) {
  if (!text) throw InvalidArgument(std::string(what) + " is missing");
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw InvalidArgument(std::string(what) + " is not valid JSON");
  return j;
}

Int parse_int(const char* text, const char* what) {
  if (!text) throw InvalidArgument(std::string(what) + " is missing");
  try {
    return Int(std::string(text));
  } catch (const std::exception&) {
    throw InvalidArgument(std::string(what) + " is not an integer");
  }
}

Json face_json(const FaceVertexSet& fs, int dim) {
  Json j;
  j["r"] = fs.r;
  j["dim"] = dim;
  Json labels = Json::array();
  for (const RayLabel& lab : face_labels(fs)) labels.push_back(to_json(lab));
  j["labels"] = labels;
  return j;
}

}  // namespace

extern "C" {

kostka_ctx* kostka_ctx_new(void) {
  auto* ctx = new (std::nothrow) kostka_ctx;
  if (!ctx) return nullptr;
  if (const char* env = std::getenv("KOSTKA_MAX_FACES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) ctx->enum_opts.max_faces = v;
  }
  if (const char* env = std::getenv("KOSTKA_TIME_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end && *end == '\0' && v > 0) ctx->enum_opts.time_budget_seconds = v;
  }
  return ctx;
}

void kostka_ctx_free(kostka_ctx* ctx) { delete ctx; }

void kostka_ctx_set_max_faces(kostka_ctx* ctx, uint64_t cap) {
  if (ctx && cap > 0) ctx->enum_opts.max_faces = cap;
}

void kostka_ctx_set_time_budget(kostka_ctx* ctx, double seconds) {
  if (ctx && seconds >= 0) ctx->enum_opts.time_budget_seconds = seconds;
}

const char* kostka_last_error(const kostka_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

const char* kostka_version(void) { return "0.1.0"; }

void kostka_string_free(char* s) { std::free(s); }

int kostka_rays(kostka_ctx* ctx, int r, char** out_json) {
  return guarded(ctx, out_json, [&] {
    Json rays = Json::array();
    for (const RayLabel& lab : enumerate_ray_labels(r)) {
      Json e;
      e["label"] = to_json(lab);
      ConePoint g = ray_generator(r, lab);
      ConePoint pg = primitive_generator(r, lab);
      e["generator"] = to_json(g);
      e["primitive"] = to_json(pg);
      rays.push_back(e);
    }
    Json j;
    j["r"] = r;
    j["count"] = rays.size();
    j["facet_count"] = facet_count(r);
    j["rays"] = rays;
    return j.dump();
  });
}

int kostka_incidence(kostka_ctx* ctx, int r, int a, int b, int l,
                     char** out_json) {
  return guarded(ctx, out_json, [&] {
    RayLabel lab = normalize_ray_label(a, b, l);
    Json facets = Json::array();
    for (const FacetId& f : facet_incidence(r, lab))
      facets.push_back(to_json(f));
    Json j;
    j["r"] = r;
    j["label"] = to_json(lab);
    j["facets"] = facets;
    return j.dump();
  });
}

int kostka_face_counts(kostka_ctx* ctx, int r, int dim, char** out_json) {
  return guarded(ctx, out_json, [&] {
    Json counts = Json::object();
    if (dim == -2) {
      for (const auto& [d, n] : face_counts(r, ctx->enum_opts))
        counts[std::to_string(d)] = n;
    } else {
      counts[std::to_string(dim)] =
          enumerate_faces(r, dim, ctx->enum_opts).size();
    }
    Json j;
    j["r"] = r;
    j["counts"] = counts;
    return j.dump();
  });
}

int kostka_faces(kostka_ctx* ctx, int r, int dim, char** out_jsonl) {
  return guarded(ctx, out_jsonl, [&] {
    std::optional<int> want;
    if (dim != -2) want = dim;
    std::string out;
    for (const auto& [fs, d] :
         enumerate_faces_with_dims(r, want, ctx->enum_opts)) {
      out += face_json(fs, d).dump();
      out += '\n';
    }
    return out;
  });
}

int kostka_minimal_face(kostka_ctx* ctx, int r, const char* labels_json,
                        char** out_json) {
  return guarded(ctx, out_json, [&] {
    Json in = parse(labels_json, "label list");
    if (!in.is_array()) throw InvalidArgument("label list must be an array");
    std::vector<RayLabel> labels;
    for (const Json& e : in) labels.push_back(ray_label_from_json(e));
    FaceVertexSet fs = minimal_face(r, labels);
    return face_json(fs, face_dimension(fs)).dump();
  });
}

int kostka_edge(kostka_ctx* ctx, int r, int a1, int b1, int l1, int a2,
                int b2, int l2, char** out_json) {
  return guarded(ctx, out_json, [&] {
    RayLabel u = normalize_ray_label(a1, b1, l1);
    RayLabel v = normalize_ray_label(a2, b2, l2);
    Json j;
    j["r"] = r;
    j["u"] = to_json(u);
    j["v"] = to_json(v);
    j["edge"] = is_edge(r, u, v);
    return j.dump();
  });
}

int kostka_max_face(kostka_ctx* ctx, int r, int d, char** out_json) {
  return guarded(ctx, out_json, [&] {
    MaxFace mf = max_face_vertices(r, d, ctx->enum_opts);
    Json j;
    j["r"] = r;
    j["d"] = d;
    j["max_vertices"] = mf.max_vertices;
    Json labels = Json::array();
    for (const RayLabel& lab : face_labels(mf.witness))
      labels.push_back(to_json(lab));
    j["witness"] = labels;
    return j.dump();
  });
}

int kostka_max_face_closed_form(kostka_ctx* ctx, long long d,
                                char** out_json) {
  return guarded(ctx, out_json, [&] {
    Json j;
    j["d"] = d;
    j["m"] = int_to_json(max_face_vertices_closed_form(d));
    return j.dump();
  });
}

int kostka_fit(kostka_ctx* ctx, long long d, const char* values_json,
               char** out_json) {
  return guarded(ctx, out_json, [&] {
    std::map<long long, Int> values;
    if (values_json) {
      Json in = parse(values_json, "fit values");
      if (!in.is_object())
        throw InvalidArgument("fit values must be an object of rank:count");
      for (const auto& [key, val] : in.items()) {
        try {
          values[std::stoll(key)] = int_from_json(val);
        } catch (const InvalidArgument&) {
          throw;
        } catch (const std::exception&) {
          throw InvalidArgument("bad rank key in fit values: " + key);
        }
      }
    } else {
      values = enumerate_fit_values(d, ctx->enum_opts);
    }
    return to_json(fit_face_polynomial(d, values)).dump();
  });
}

int kostka_f_vector(kostka_ctx* ctx, int r, char** out_json) {
  return guarded(ctx, out_json,
                 [&] { return to_json(f_vector(r, ctx->enum_opts)).dump(); });
}

int kostka_h_vector(kostka_ctx* ctx, int r, int check_tail, char** out_json) {
  return guarded(ctx, out_json, [&] {
    HVector hv = h_vector(r, ctx->enum_opts);
    Json j = to_json(hv);
    if (check_tail) {
      ConjectureReport rep = check_h_tail(hv);
      Json c;
      c["holds"] = rep.holds;
      c["first_failing_k"] =
          rep.first_failing_k ? Json(*rep.first_failing_k) : Json();
      j["tail_of_ones"] = c;
    }
    return j.dump();
  });
}

int kostka_hb_check(kostka_ctx* ctx, const char* point_json,
                    char** out_json) {
  return guarded(ctx, out_json, [&] {
    ConePoint p = cone_point_from_json(parse(point_json, "cone point"));
    Json j;
    j["point"] = to_json(p);
    j["hilbert_basis_element"] = is_hilbert_basis_element(p);
    return j.dump();
  });
}

int kostka_classify_initial(kostka_ctx* ctx, const char* lambda1,
                            const char* mu1, char** out_json) {
  return guarded(ctx, out_json, [&] {
    InitialPair ip = classify_initial_pair(parse_int(lambda1, "lambda1"),
                                           parse_int(mu1, "mu1"));
    return to_json(ip).dump();
  });
}

int kostka_classify_range(kostka_ctx* ctx, long long range,
                          char** out_json) {
  return guarded(ctx, out_json, [&] {
    if (range < 2) throw InvalidArgument("range must be at least 2");
    if (range > 100'000) throw ResourceLimit("range above the scan cap");
    Json list = Json::array();
    long long pairs = 0;
    for (long long l1 = 2; l1 <= range; ++l1)
      for (long long m1 = 1; m1 < l1; ++m1) {
        ++pairs;
        InitialPair ip = classify_initial_pair(Int(l1), Int(m1));
        if (!ip.sufficient)
          list.push_back(Json::array({l1, m1}));
      }
    Json j;
    j["range"] = range;
    j["pairs"] = pairs;
    j["insufficient"] = list;
    j["insufficient_count"] = list.size();
    return j.dump();
  });
}

int kostka_construct(kostka_ctx* ctx, const char* family, const char* lambda1,
                     const char* mu1, char** out_json) {
  return guarded(ctx, out_json, [&] {
    if (!family) throw InvalidArgument("family is missing");
    std::string fam(family);
    if (fam != "gcd1" && fam != "gcd2")
      throw InvalidArgument("family must be gcd1 or gcd2");
    Int l1 = parse_int(lambda1, "lambda1");
    Int m1 = parse_int(mu1, "mu1");
    Construction c =
        fam == "gcd1" ? construct_gcd1(l1, m1) : construct_gcd2(l1, m1);
    Json j;
    j["family"] = fam;
    j["pair"] = Json::array({int_to_json(l1), int_to_json(m1)});
    j["r"] = int_to_json(c.r);
    j["point"] = to_json(c.point);
    j["hilbert_basis_element"] = is_hilbert_basis_element(c.point);
    j["lies_on_2face"] = lies_on_2face(c.point);
    return j.dump();
  });
}

int kostka_scan_initial(kostka_ctx* ctx, const char* lambda1, const char* mu1,
                        int r, uint64_t budget, char** out_json) {
  return guarded(ctx, out_json, [&] {
    Int l1 = parse_int(lambda1, "lambda1");
    Int m1 = parse_int(mu1, "mu1");
    ScanResult sr = scan_initial(l1, m1, r, budget);
    Json j;
    j["pair"] = Json::array({int_to_json(l1), int_to_json(m1)});
    j["r"] = r;
    j["budget"] = budget;
    Json body = to_json(sr);
    for (auto& [key, val] : body.items()) j[key] = val;
    return j.dump();
  });
}

int kostka_probability(kostka_ctx* ctx, int64_t B, char** out_json) {
  return guarded(ctx, out_json, [&] {
    RatInterval iv = initial_pair_probability(B);
    Json j;
    j["B"] = B;
    Json body = to_json(iv);
    for (auto& [key, val] : body.items()) j[key] = val;
    return j.dump();
  });
}

int kostka_density(kostka_ctx* ctx, int64_t N, const int* conds, int n_conds,
                   char** out_json) {
  return guarded(ctx, out_json, [&] {
    if (!conds || n_conds < 1)
      throw InvalidArgument("condition set must be nonempty");
    std::vector<int> I(conds, conds + n_conds);
    Rat d = empirical_density(N, I);
    Json j;
    j["N"] = N;
    j["I"] = I;
    j["density"] = rat_string(d);
    j["decimal"] = decimal_string(d, 12);
    return j.dump();
  });
}

}  // extern "C"
