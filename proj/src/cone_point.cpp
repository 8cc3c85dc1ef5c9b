#include "kostka/cone_point.hpp"

#include <utility>

#include "kostka/errors.hpp"

namespace kostka {

ConePoint::ConePoint(Partition lambda, Partition mu, int ambient)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), ambient_(ambient) {
  if (ambient_ < 1) throw InvalidArgument("ambient rank must be positive");
  if (lambda_.length() > static_cast<std::size_t>(ambient_) ||
      mu_.length() > static_cast<std::size_t>(ambient_))
    throw InvalidArgument("partition has more parts than the ambient rank");
  if (!dominates(lambda_, mu_))
    throw InvalidArgument(
        "not a cone point: lambda must dominate mu (equal sums included)");
}

std::vector<Int> ConePoint::coordinates() const {
  std::vector<Int> v;
  v.reserve(2 * static_cast<std::size_t>(ambient_));
  for (int i = 0; i < ambient_; ++i) v.push_back(lambda_.part(i));
  for (int i = 0; i < ambient_; ++i) v.push_back(mu_.part(i));
  return v;
}

ConePoint embed(const ConePoint& p, int ambient) {
  if (ambient < p.ambient())
    throw InvalidArgument("embed: target rank smaller than current");
  return ConePoint(p.lambda(), p.mu(), ambient);
}

ConePoint operator+(const ConePoint& p, const ConePoint& q) {
  if (p.ambient() != q.ambient())
    throw InvalidArgument("cone point sum needs equal ambient ranks");
  std::size_t nl = std::max(p.lambda().length(), q.lambda().length());
  std::size_t nm = std::max(p.mu().length(), q.mu().length());
  std::vector<Int> l, m;
  for (std::size_t i = 0; i < nl; ++i)
    l.push_back(p.lambda().part(i) + q.lambda().part(i));
  for (std::size_t i = 0; i < nm; ++i)
    m.push_back(p.mu().part(i) + q.mu().part(i));
  return ConePoint(Partition(std::move(l)), Partition(std::move(m)),
                   p.ambient());
}

}  // namespace kostka
