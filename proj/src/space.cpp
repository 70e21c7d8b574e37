#include "vcat/space.hpp"

#include <set>

namespace vcat {

Space::Space(std::string name, Base base, std::vector<std::string> points,
             std::vector<QValue> dist)
    : name_(std::move(name)), base_(base), points_(std::move(points)), dist_(std::move(dist)) {
  if (dist_.size() != points_.size() * points_.size())
    throw std::invalid_argument("distance table size must be (number of points)^2");
  std::set<std::string> seen;
  for (const std::string& p : points_) {
    if (p.empty()) throw std::invalid_argument("empty point name");
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate point name: " + p);
  }
  for (const QValue& v : dist_)
    if (v.base() != base_) throw BaseMismatch("distance entry of the wrong base in " + name_);
  lawsHold_ = validateSpace(*this).empty();
}

std::optional<std::size_t> Space::indexOf(const std::string& point) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == point) return i;
  return std::nullopt;
}

bool Space::isSymmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (dist(i, j) != dist(j, i)) return false;
  return true;
}

SpacePtr makeSpace(std::string name, Base base, std::vector<std::string> points,
                   std::vector<QValue> dist) {
  return std::make_shared<Space>(std::move(name), base, std::move(points), std::move(dist));
}

std::vector<std::string> validateSpace(const Space& s) {
  std::vector<std::string> out;
  const QValue u = QValue::unit(s.base());
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s.dist(x, x) != u)
      out.push_back("d(" + s.pointName(x) + "," + s.pointName(x) + ") = " +
                    s.dist(x, x).str() + ", expected the unit " + u.str());
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      for (std::size_t z = 0; z < s.size(); ++z) {
        // composition law: d(y,z) tensor d(x,y) has an arrow to d(x,z)
        if (!catLeq(tensor(s.dist(y, z), s.dist(x, y)), s.dist(x, z)))
          out.push_back("triangle fails on (" + s.pointName(x) + "," + s.pointName(y) + "," +
                        s.pointName(z) + "): d(" + s.pointName(x) + "," + s.pointName(z) +
                        ") = " + s.dist(x, z).str() + " vs " +
                        tensor(s.dist(x, y), s.dist(y, z)).str());
      }
  return out;
}

SpacePtr underlyingPreorder(const Space& s) {
  if (s.base() == Base::Bool) {
    return makeSpace(s.name(), Base::Bool, s.points(), s.distances());
  }
  std::vector<QValue> d;
  d.reserve(s.size() * s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      d.push_back(QValue::boolean(s.dist(i, j).isUnit()));
  return makeSpace(s.name() + "_ord", Base::Bool, s.points(), std::move(d));
}

std::vector<std::string> validateMap(const SpaceMap& f) {
  std::vector<std::string> out;
  if (!f.source || !f.target) {
    out.push_back("map endpoints missing");
    return out;
  }
  if (f.source->base() != f.target->base()) out.push_back("map mixes bases");
  if (f.assign.size() != f.source->size()) out.push_back("assignment size mismatch");
  for (std::size_t i = 0; i < f.assign.size(); ++i)
    if (f.assign[i] >= f.target->size()) out.push_back("assignment out of range");
  if (!out.empty()) return out;
  for (std::size_t x = 0; x < f.source->size(); ++x)
    for (std::size_t y = 0; y < f.source->size(); ++y)
      if (!catLeq(f.source->dist(x, y), f.target->dist(f(x), f(y))))
        out.push_back("expands (" + f.source->pointName(x) + "," + f.source->pointName(y) +
                      "): " + f.source->dist(x, y).str() + " to " +
                      f.target->dist(f(x), f(y)).str());
  return out;
}

bool isNonexpansive(const SpaceMap& f) { return validateMap(f).empty(); }

bool unitIsomorphic(const Space& s, std::size_t x, std::size_t y) {
  return s.dist(x, y).isUnit() && s.dist(y, x).isUnit();
}

bool sameSpace(const SpacePtr& a, const SpacePtr& b) {
  if (a.get() == b.get()) return true;
  return a && b && a->name() == b->name() && a->points() == b->points() &&
         a->distances() == b->distances();
}

}  // namespace vcat
