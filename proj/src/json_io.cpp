#include "kostka/json_io.hpp"

#include "kostka/errors.hpp"

namespace kostka {

Json int_to_json(const Int& x) {
  static const Int lo = (std::numeric_limits<std::int64_t>::min)();
  static const Int hi = (std::numeric_limits<std::int64_t>::max)();
  if (lo <= x && x <= hi) return x.convert_to<std::int64_t>();
  return x.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer: " + j.dump());
    }
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

Json to_json(const Partition& p) {
  Json arr = Json::array();
  for (const Int& x : p.parts()) arr.push_back(int_to_json(x));
  return arr;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("partition must be an array");
  std::vector<Int> parts;
  for (const Json& e : j) parts.push_back(int_from_json(e));
  return Partition(std::move(parts));
}

Json to_json(const ConePoint& p) {
  Json j;
  j["r"] = p.ambient();
  j["lambda"] = to_json(p.lambda());
  j["mu"] = to_json(p.mu());
  return j;
}

ConePoint cone_point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("lambda") ||
      !j.contains("mu"))
    throw InvalidArgument("cone point needs fields r, lambda, mu");
  Int r = int_from_json(j.at("r"));
  if (r < 1 || r > 1'000'000'000)
    throw InvalidArgument("ambient rank out of range");
  return ConePoint(partition_from_json(j.at("lambda")),
                   partition_from_json(j.at("mu")), r.convert_to<int>());
}

Json to_json(const RayLabel& lab) {
  return Json::array({lab.a, lab.b, lab.l});
}

RayLabel ray_label_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3)
    throw InvalidArgument("ray label must be a three-entry array");
  Int a = int_from_json(j[0]), b = int_from_json(j[1]), l = int_from_json(j[2]);
  if (a < 0 || a > 1'000'000 || b < 0 || b > 1'000'000 || l < 0 ||
      l > 1'000'000)
    throw InvalidArgument("ray label entry out of range");
  return normalize_ray_label(a.convert_to<int>(), b.convert_to<int>(),
                             l.convert_to<int>());
}

Json to_json(const FacetId& f) {
  Json j;
  switch (f.kind) {
    case FacetKind::H:
      j["kind"] = "H";
      break;
    case FacetKind::Hhat:
      j["kind"] = "HHAT";
      break;
    case FacetKind::J:
      j["kind"] = "J";
      break;
  }
  j["i"] = f.index;
  return j;
}

Json to_json(const BinomialPolynomial& p) {
  Json alpha = Json::object();
  for (const auto& [k, a] : p.alpha) alpha[std::to_string(k)] = int_to_json(a);
  Json j;
  j["d"] = p.d;
  j["alpha"] = alpha;
  return j;
}

BinomialPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("alpha"))
    throw InvalidArgument("polynomial needs fields d and alpha");
  BinomialPolynomial p;
  p.d = j.at("d").get<long long>();
  for (const auto& [key, val] : j.at("alpha").items())
    p.alpha[std::stoll(key)] = int_from_json(val);
  return p;
}

Json to_json(const FVector& fv) {
  Json j;
  j["r"] = fv.r;
  j["f_start"] = -1;
  Json arr = Json::array();
  for (const Int& x : fv.f) arr.push_back(int_to_json(x));
  j["f"] = arr;
  return j;
}

Json to_json(const HVector& hv) {
  Json j;
  j["r"] = hv.r;
  j["h_start"] = 0;
  Json arr = Json::array();
  for (const Int& x : hv.h) arr.push_back(int_to_json(x));
  j["h"] = arr;
  return j;
}

std::string rat_string(const Rat& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

Json to_json(const RatInterval& iv) {
  Json j;
  j["lower"] = rat_string(iv.lower);
  j["upper"] = rat_string(iv.upper);
  j["decimal"] = decimal_string((iv.lower + iv.upper) / 2, 12);
  return j;
}

Json to_json(const InitialPair& ip) {
  Json j;
  j["pair"] = Json::array({int_to_json(ip.lambda1), int_to_json(ip.mu1)});
  j["conditions"] =
      Json::array({ip.conditions[0], ip.conditions[1], ip.conditions[2]});
  j["sufficient"] = ip.sufficient;
  return j;
}

Json to_json(const ScanResult& sr) {
  Json j;
  switch (sr.status) {
    case ScanResult::Status::Found:
      j["status"] = "found";
      break;
    case ScanResult::Status::ExhaustedNo:
      j["status"] = "exhausted-no";
      break;
    case ScanResult::Status::BudgetExceeded:
      j["status"] = "budget-exceeded";
      break;
  }
  j["certificate"] = sr.certificate ? to_json(*sr.certificate) : Json();
  j["examined"] = sr.examined;
  return j;
}

}  // namespace kostka
