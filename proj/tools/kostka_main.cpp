// Command-line front end; all computation goes through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kostka/kostka.h"

namespace {

using Json = nlohmann::ordered_json;

std::string join_ints(const Json& arr, const char* sep) {
  std::string out;
  for (const auto& e : arr) {
    if (!out.empty()) out += sep;
    out += e.is_string() ? e.get<std::string>() : e.dump();
  }
  return out;
}

std::string label_str(const Json& lab) {
  return "(" + join_ints(lab, ",") + ")";
}

std::string point_str(const Json& p) {
  return "lambda=[" + join_ints(p["lambda"], ",") + "] mu=[" +
         join_ints(p["mu"], ",") + "] r=" + p["r"].dump();
}

void csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ",";
    bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
    if (!quote) {
      os << cells[i];
      continue;
    }
    os << '"';
    for (char c : cells[i]) {
      if (c == '"') os << '"';
      os << c;
    }
    os << '"';
  }
  os << "\n";
}

void kv_csv(std::ostream& os, const Json& j) {
  csv_row(os, {"key", "value"});
  for (const auto& [key, val] : j.items())
    csv_row(os, {key, val.is_string() ? val.get<std::string>() : val.dump()});
}

// ---- per-command renderers ------------------------------------------------

void render_rays(const Json& j, const std::string& fmt, std::ostream& os) {
  if (fmt == "csv") {
    csv_row(os, {"a", "b", "l", "lambda", "mu", "primitive_lambda",
                 "primitive_mu"});
    for (const auto& e : j["rays"])
      csv_row(os, {e["label"][0].dump(), e["label"][1].dump(),
                   e["label"][2].dump(), join_ints(e["generator"]["lambda"], " "),
                   join_ints(e["generator"]["mu"], " "),
                   join_ints(e["primitive"]["lambda"], " "),
                   join_ints(e["primitive"]["mu"], " ")});
    return;
  }
  os << "r=" << j["r"] << " rays=" << j["count"]
     << " facets=" << j["facet_count"] << "\n";
  for (const auto& e : j["rays"])
    os << "  " << label_str(e["label"]) << "  lambda=["
       << join_ints(e["generator"]["lambda"], ",") << "] mu=["
       << join_ints(e["generator"]["mu"], ",") << "]\n";
}

void render_incidence(const Json& j, const std::string& fmt,
                      std::ostream& os) {
  if (fmt == "csv") {
    csv_row(os, {"kind", "i"});
    for (const auto& f : j["facets"])
      csv_row(os, {f["kind"].get<std::string>(), f["i"].dump()});
    return;
  }
  os << "label " << label_str(j["label"]) << " lies on:";
  for (const auto& f : j["facets"])
    os << " " << f["kind"].get<std::string>() << f["i"].dump();
  os << "\n";
}

void render_counts(const Json& j, const std::string& fmt, std::ostream& os) {
  if (fmt == "csv") {
    csv_row(os, {"dim", "count"});
    for (const auto& [key, val] : j["counts"].items())
      csv_row(os, {key, val.dump()});
    return;
  }
  for (const auto& [key, val] : j["counts"].items())
    os << key << " " << val.dump() << "\n";
}

void render_faces_line(const Json& line, const std::string& fmt,
                       std::ostream& os) {
  std::string labels;
  for (const auto& lab : line["labels"]) {
    if (!labels.empty()) labels += fmt == "csv" ? ";" : " ";
    labels += fmt == "csv" ? join_ints(lab, " ") : label_str(lab);
  }
  if (fmt == "csv")
    csv_row(os, {line["dim"].dump(), labels});
  else
    os << "dim " << line["dim"] << ": " << labels << "\n";
}

void render_vector(const Json& j, const char* field, const char* start_field,
                   const std::string& fmt, std::ostream& os) {
  int start = j[start_field].get<int>();
  if (fmt == "csv") {
    csv_row(os, {"k", field});
    int k = start;
    for (const auto& e : j[field]) csv_row(os, {std::to_string(k++), e.dump()});
  } else {
    os << field << "(" << j["r"] << "), first index " << start << ": ";
    os << join_ints(j[field], " ") << "\n";
  }
  if (j.contains("tail_of_ones")) {
    const Json& c = j["tail_of_ones"];
    os << "trailing entries all 1 from k=r-1: "
       << (c["holds"].get<bool>() ? "yes" : "no");
    if (!c["first_failing_k"].is_null())
      os << " (fails at k=" << c["first_failing_k"] << ")";
    os << "\n";
  }
}

void render_fit(const Json& j, const std::string& fmt, std::ostream& os) {
  if (fmt == "csv") {
    csv_row(os, {"k", "alpha"});
    for (const auto& [key, val] : j["alpha"].items())
      csv_row(os, {key, val.dump()});
    return;
  }
  os << "d=" << j["d"] << "\n";
  for (const auto& [key, val] : j["alpha"].items())
    os << "  alpha[" << key << "] = "
       << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
}

void render_classify(const Json& j, const std::string& fmt,
                     std::ostream& os) {
  if (j.contains("insufficient")) {
    if (fmt == "csv") {
      csv_row(os, {"lambda1", "mu1"});
      for (const auto& p : j["insufficient"])
        csv_row(os, {p[0].dump(), p[1].dump()});
      return;
    }
    os << "pairs with mu1 < lambda1 <= " << j["range"]
       << " failing all three conditions: " << j["insufficient_count"]
       << "\n";
    for (const auto& p : j["insufficient"])
      os << "  (" << join_ints(p, ",") << ")\n";
    return;
  }
  if (fmt == "csv") {
    kv_csv(os, j);
    return;
  }
  os << "pair (" << join_ints(j["pair"], ",") << "): gcd(l1,m1)=1: "
     << (j["conditions"][0].get<bool>() ? "yes" : "no")
     << ", gcd(l1+1,m1)=1: "
     << (j["conditions"][1].get<bool>() ? "yes" : "no")
     << ", gcd(l1+1,m1+1)=1 & 2m1>=l1: "
     << (j["conditions"][2].get<bool>() ? "yes" : "no") << "\n"
     << "sufficient: " << (j["sufficient"].get<bool>() ? "yes" : "no")
     << "\n";
}

void render_construct(const Json& j, const std::string& fmt,
                      std::ostream& os) {
  if (fmt == "csv") {
    kv_csv(os, j);
    return;
  }
  os << j["family"].get<std::string>() << "(" << join_ints(j["pair"], ",")
     << "): r=" << j["r"].dump() << "\n  " << point_str(j["point"]) << "\n"
     << "  hilbert basis element: "
     << (j["hilbert_basis_element"].get<bool>() ? "yes" : "no")
     << ", on a 2-face: " << (j["lies_on_2face"].get<bool>() ? "yes" : "no")
     << "\n";
}

void render_scan(const Json& j, const std::string& fmt, std::ostream& os) {
  if (fmt == "csv") {
    kv_csv(os, j);
    return;
  }
  os << "status: " << j["status"].get<std::string>() << " (examined "
     << j["examined"] << " candidates)\n";
  if (!j["certificate"].is_null())
    os << "  certificate: " << point_str(j["certificate"]) << "\n";
}

void render_simple(const Json& j, const std::string& fmt, std::ostream& os) {
  if (fmt == "csv") {
    kv_csv(os, j);
    return;
  }
  for (const auto& [key, val] : j.items()) {
    std::string s = val.is_string() ? val.get<std::string>() : val.dump();
    // Exact rationals can run to thousands of digits; keep the table
    // readable and leave the full value to json/csv output.
    if (s.size() > 96)
      s = s.substr(0, 60) + "..." + s.substr(s.size() - 20) + " (" +
          std::to_string(s.size()) + " chars)";
    os << key << ": " << s << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face structure, face-count polynomials and Hilbert-basis "
               "phenomena of the Kostka cone"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  std::uint64_t max_faces = 0;
  app.add_option("--max-faces", max_faces,
                 "Cap on stored faces during enumeration");
  double time_budget = -1;
  app.add_option("--time-budget", time_budget,
                 "Wall-clock cap in seconds for enumeration (0 = none)");

  // rays
  int rays_r = 0;
  auto* sc_rays = app.add_subcommand("rays", "List extremal rays");
  sc_rays->add_option("r", rays_r, "Rank")->required();

  // incidence
  int inc_r = 0, inc_a = 0, inc_b = 0, inc_l = 0;
  auto* sc_inc =
      app.add_subcommand("incidence", "Facet hyperplanes through a ray");
  sc_inc->add_option("r", inc_r)->required();
  sc_inc->add_option("a", inc_a)->required();
  sc_inc->add_option("b", inc_b)->required();
  sc_inc->add_option("l", inc_l)->required();

  // faces
  int faces_r = 0, faces_dim = -2;
  bool faces_count_only = false;
  auto* sc_faces = app.add_subcommand("faces", "Enumerate faces");
  sc_faces->add_option("r", faces_r)->required();
  sc_faces->add_option("--dim", faces_dim, "Only this dimension");
  sc_faces->add_flag("--count-only", faces_count_only, "Counts, no dump");

  // edge
  std::vector<int> edge_args;
  auto* sc_edge =
      app.add_subcommand("edge", "Test whether two rays span an edge");
  sc_edge->add_option("args", edge_args, "r a b l a' b' l'")
      ->expected(7)
      ->required();

  // maxface
  std::vector<long long> mf_args;
  bool mf_closed = false;
  auto* sc_mf = app.add_subcommand(
      "maxface", "Largest vertex count of a d-face (r d), or the stable "
                 "value (--closed-form d)");
  sc_mf->add_option("args", mf_args, "r d, or d with --closed-form")
      ->expected(-1);
  sc_mf->add_flag("--closed-form", mf_closed, "Large-r closed form");

  // fit
  long long fit_d = 0;
  std::string fit_values;
  auto* sc_fit =
      app.add_subcommand("fit", "Binomial coefficients of the d-face count");
  sc_fit->add_option("d", fit_d)->required();
  sc_fit->add_option("--values", fit_values,
                     "JSON file mapping rank to count; enumerated if absent");

  // fvector / hvector
  int fv_r = 0, hv_r = 0;
  bool hv_check = false;
  auto* sc_fv = app.add_subcommand("fvector", "Face numbers by dimension");
  sc_fv->add_option("r", fv_r)->required();
  auto* sc_hv = app.add_subcommand("hvector", "h-vector of the face numbers");
  sc_hv->add_option("r", hv_r)->required();
  sc_hv->add_flag("--check-conjecture", hv_check,
                  "Verify the trailing entries are 1 from k = r-1 on");

  // hb-check
  std::string hb_file;
  auto* sc_hb =
      app.add_subcommand("hb-check", "Hilbert-basis membership of a point");
  sc_hb->add_option("file", hb_file, "JSON file with {r, lambda, mu}")
      ->required();

  // initial-classify
  std::string cl_l1, cl_m1;
  long long cl_range = 0;
  auto* sc_cl = app.add_subcommand("initial-classify",
                                   "Coprimality conditions for a pair");
  sc_cl->add_option("lambda1", cl_l1);
  sc_cl->add_option("mu1", cl_m1);
  sc_cl->add_option("--range", cl_range,
                    "List all failing pairs with lambda1 up to this bound");

  // construct
  std::string con_family, con_l1, con_m1;
  auto* sc_con =
      app.add_subcommand("construct", "Build a Hilbert basis element");
  sc_con->add_option("family", con_family, "gcd1 or gcd2")->required();
  sc_con->add_option("lambda1", con_l1)->required();
  sc_con->add_option("mu1", con_m1)->required();

  // scan-initial
  std::string scan_l1, scan_m1;
  int scan_r = 0;
  std::uint64_t scan_budget = 100000;
  auto* sc_scan = app.add_subcommand(
      "scan-initial", "Search for a basis element with given first entries");
  sc_scan->add_option("lambda1", scan_l1)->required();
  sc_scan->add_option("mu1", scan_m1)->required();
  sc_scan->add_option("r", scan_r)->required();
  sc_scan->add_option("--budget", scan_budget,
                      "Candidate pairs to test before giving up")
      ->capture_default_str();

  // probability
  std::int64_t prob_B = 1000000;
  auto* sc_prob = app.add_subcommand(
      "probability", "Bracket for the coprimality probability");
  sc_prob->add_option("--B", prob_B, "Euler product cutoff")
      ->capture_default_str();

  // density
  std::int64_t den_N = 0;
  std::string den_I;
  auto* sc_den = app.add_subcommand(
      "density", "Exact density of conditions over pairs m < n <= N");
  sc_den->add_option("N", den_N)->required();
  sc_den->add_option("I", den_I, "Comma-separated subset of 1,2,3")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  kostka_ctx* ctx = kostka_ctx_new();
  if (!ctx) {
    std::cerr << "error: could not allocate context\n";
    return 1;
  }
  if (max_faces > 0) kostka_ctx_set_max_faces(ctx, max_faces);
  if (time_budget >= 0) kostka_ctx_set_time_budget(ctx, time_budget);

  char* out = nullptr;
  int rc = KOSTKA_OK;
  std::string kind;

  if (sc_rays->parsed()) {
    kind = "rays";
    rc = kostka_rays(ctx, rays_r, &out);
  } else if (sc_inc->parsed()) {
    kind = "incidence";
    rc = kostka_incidence(ctx, inc_r, inc_a, inc_b, inc_l, &out);
  } else if (sc_faces->parsed()) {
    if (faces_count_only) {
      kind = "counts";
      rc = kostka_face_counts(ctx, faces_r, faces_dim, &out);
    } else {
      kind = "faces";
      rc = kostka_faces(ctx, faces_r, faces_dim, &out);
    }
  } else if (sc_edge->parsed()) {
    kind = "edge";
    rc = kostka_edge(ctx, edge_args[0], edge_args[1], edge_args[2],
                     edge_args[3], edge_args[4], edge_args[5], edge_args[6],
                     &out);
  } else if (sc_mf->parsed()) {
    kind = "simple";
    if (mf_closed && mf_args.size() == 1) {
      rc = kostka_max_face_closed_form(ctx, mf_args[0], &out);
    } else if (!mf_closed && mf_args.size() == 2) {
      kind = "maxface";
      rc = kostka_max_face(ctx, static_cast<int>(mf_args[0]),
                           static_cast<int>(mf_args[1]), &out);
    } else {
      std::cerr << "error: expected `maxface r d` or `maxface --closed-form "
                   "d`\n";
      kostka_ctx_free(ctx);
      return 2;
    }
  } else if (sc_fit->parsed()) {
    kind = "fit";
    std::string values;
    bool have_values = false;
    if (!fit_values.empty()) {
      std::ifstream in(fit_values);
      if (!in) {
        std::cerr << "error: cannot read " << fit_values << "\n";
        kostka_ctx_free(ctx);
        return 2;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      values = ss.str();
      have_values = true;
    }
    rc = kostka_fit(ctx, fit_d, have_values ? values.c_str() : nullptr, &out);
  } else if (sc_fv->parsed()) {
    kind = "fvector";
    rc = kostka_f_vector(ctx, fv_r, &out);
  } else if (sc_hv->parsed()) {
    kind = "hvector";
    rc = kostka_h_vector(ctx, hv_r, hv_check ? 1 : 0, &out);
  } else if (sc_hb->parsed()) {
    kind = "simple";
    std::ifstream in(hb_file);
    if (!in) {
      std::cerr << "error: cannot read " << hb_file << "\n";
      kostka_ctx_free(ctx);
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    std::string point = ss.str();
    rc = kostka_hb_check(ctx, point.c_str(), &out);
  } else if (sc_cl->parsed()) {
    kind = "classify";
    if (cl_range > 0) {
      rc = kostka_classify_range(ctx, cl_range, &out);
    } else if (!cl_l1.empty() && !cl_m1.empty()) {
      rc = kostka_classify_initial(ctx, cl_l1.c_str(), cl_m1.c_str(), &out);
    } else {
      std::cerr << "error: expected `initial-classify lambda1 mu1` or "
                   "`initial-classify --range L`\n";
      kostka_ctx_free(ctx);
      return 2;
    }
  } else if (sc_con->parsed()) {
    kind = "construct";
    rc = kostka_construct(ctx, con_family.c_str(), con_l1.c_str(),
                          con_m1.c_str(), &out);
  } else if (sc_scan->parsed()) {
    kind = "scan";
    rc = kostka_scan_initial(ctx, scan_l1.c_str(), scan_m1.c_str(), scan_r,
                             scan_budget, &out);
  } else if (sc_prob->parsed()) {
    kind = "simple";
    rc = kostka_probability(ctx, prob_B, &out);
  } else if (sc_den->parsed()) {
    kind = "simple";
    std::vector<int> conds;
    std::stringstream ss(den_I);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        conds.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        std::cerr << "error: bad condition list\n";
        kostka_ctx_free(ctx);
        return 2;
      }
    }
    rc = kostka_density(ctx, den_N, conds.data(),
                        static_cast<int>(conds.size()), &out);
  }

  if (rc != KOSTKA_OK) {
    std::cerr << "error: " << kostka_last_error(ctx) << "\n";
    kostka_ctx_free(ctx);
    return rc == KOSTKA_EINVAL ? 2 : rc == KOSTKA_ERESOURCE ? 3 : 1;
  }

  std::string text = out ? out : "";
  kostka_string_free(out);
  kostka_ctx_free(ctx);

  if (format == "json") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return 0;
  }

  if (kind == "faces") {
    // JSON Lines: render each face on its own line.
    if (format == "csv") csv_row(std::cout, {"dim", "labels"});
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      if (line.empty()) continue;
      render_faces_line(Json::parse(line), format, std::cout);
    }
    return 0;
  }

  Json j = Json::parse(text);
  if (kind == "rays")
    render_rays(j, format, std::cout);
  else if (kind == "incidence")
    render_incidence(j, format, std::cout);
  else if (kind == "counts")
    render_counts(j, format, std::cout);
  else if (kind == "edge")
    std::cout << (j["edge"].get<bool>() ? "true" : "false") << "\n";
  else if (kind == "maxface") {
    if (format == "csv") {
      kv_csv(std::cout, j);
    } else {
      std::cout << "max vertices of a " << j["d"] << "-face at r=" << j["r"]
                << ": " << j["max_vertices"] << "\n  witness:";
      for (const auto& lab : j["witness"])
        std::cout << " " << label_str(lab);
      std::cout << "\n";
    }
  } else if (kind == "fit")
    render_fit(j, format, std::cout);
  else if (kind == "fvector")
    render_vector(j, "f", "f_start", format, std::cout);
  else if (kind == "hvector")
    render_vector(j, "h", "h_start", format, std::cout);
  else if (kind == "classify")
    render_classify(j, format, std::cout);
  else if (kind == "construct")
    render_construct(j, format, std::cout);
  else if (kind == "scan")
    render_scan(j, format, std::cout);
  else
    render_simple(j, format, std::cout);
  return 0;
}
