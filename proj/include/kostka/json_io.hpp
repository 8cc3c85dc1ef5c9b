#pragma once

#include <json.hpp>

#include "kostka/counting.hpp"
#include "kostka/euler.hpp"
#include "kostka/faces.hpp"
#include "kostka/hilbert.hpp"

namespace kostka {

// Insertion-ordered objects keep the emitted key order stable.
using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are numbers, anything larger a decimal
// string; parsing accepts both.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const ConePoint& p);
ConePoint cone_point_from_json(const Json& j);

Json to_json(const RayLabel& lab);
RayLabel ray_label_from_json(const Json& j);

Json to_json(const FacetId& f);

Json to_json(const BinomialPolynomial& p);
BinomialPolynomial polynomial_from_json(const Json& j);

Json to_json(const FVector& fv);
Json to_json(const HVector& hv);

// {"lower":"p/q","upper":"p/q","decimal":...} with the decimal taken from
// the midpoint.
Json to_json(const RatInterval& iv);

Json to_json(const InitialPair& ip);
Json to_json(const ScanResult& sr);

std::string rat_string(const Rat& x);

}  // namespace kostka
