#include "vcat/modules.hpp"

namespace vcat {

namespace {

void requireSpaceFor(const SpacePtr& s, std::size_t n, const char* what) {
  if (!s) throw std::invalid_argument(std::string(what) + ": missing space");
  if (!s->lawsHold()) throw std::invalid_argument(std::string(what) + ": space " + s->name() + " violates its laws");
  if (s->size() != n)
    throw InvalidModule(std::string(what) + ": table size does not match " + s->name());
}

void requireSameSpace(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (a.get() != b.get() && !(a && b && a->name() == b->name() && a->distances() == b->distances() && a->points() == b->points()))
    throw SpaceMismatch(std::string(what) + ": operands live on different spaces");
}

}  // namespace

LeftModule::LeftModule(SpacePtr space, std::vector<QValue> values)
    : space_(std::move(space)), values_(std::move(values)) {
  requireSpaceFor(space_, values_.size(), "left module");
  for (const QValue& v : values_)
    if (v.base() != space_->base()) throw BaseMismatch("module value of the wrong base");
  for (std::size_t x = 0; x < values_.size(); ++x)
    for (std::size_t y = 0; y < values_.size(); ++y)
      if (!catLeq(tensor(values_[y], space_->dist(x, y)), values_[x]))
        throw InvalidModule("left module law fails at (" + space_->pointName(x) + "," +
                            space_->pointName(y) + ") on " + space_->name());
}

bool LeftModule::operator==(const LeftModule& o) const {
  return space_.get() == o.space_.get() && values_ == o.values_;
}

bool LeftModule::validTable(const Space& s, std::span<const QValue> values) {
  if (values.size() != s.size()) return false;
  for (std::size_t x = 0; x < values.size(); ++x)
    for (std::size_t y = 0; y < values.size(); ++y)
      if (!catLeq(tensor(values[y], s.dist(x, y)), values[x])) return false;
  return true;
}

RightModule::RightModule(SpacePtr space, std::vector<QValue> values)
    : space_(std::move(space)), values_(std::move(values)) {
  requireSpaceFor(space_, values_.size(), "right module");
  for (const QValue& v : values_)
    if (v.base() != space_->base()) throw BaseMismatch("module value of the wrong base");
  for (std::size_t x = 0; x < values_.size(); ++x)
    for (std::size_t y = 0; y < values_.size(); ++y)
      if (!catLeq(tensor(space_->dist(x, y), values_[x]), values_[y]))
        throw InvalidModule("right module law fails at (" + space_->pointName(x) + "," +
                            space_->pointName(y) + ") on " + space_->name());
}

bool RightModule::operator==(const RightModule& o) const {
  return space_.get() == o.space_.get() && values_ == o.values_;
}

bool RightModule::validTable(const Space& s, std::span<const QValue> values) {
  if (values.size() != s.size()) return false;
  for (std::size_t x = 0; x < values.size(); ++x)
    for (std::size_t y = 0; y < values.size(); ++y)
      if (!catLeq(tensor(s.dist(x, y), values[x]), values[y])) return false;
  return true;
}

LeftModule yoneda(const SpacePtr& s, std::size_t point) {
  std::vector<QValue> v;
  v.reserve(s->size());
  for (std::size_t x = 0; x < s->size(); ++x) v.push_back(s->dist(x, point));
  return LeftModule(s, std::move(v));
}

RightModule coyoneda(const SpacePtr& s, std::size_t point) {
  std::vector<QValue> v;
  v.reserve(s->size());
  for (std::size_t x = 0; x < s->size(); ++x) v.push_back(s->dist(point, x));
  return RightModule(s, std::move(v));
}

QValue presheafHom(const LeftModule& m, const LeftModule& n) {
  requireSameSpace(m.space(), n.space(), "presheafHom");
  std::vector<QValue> homs;
  homs.reserve(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) homs.push_back(hom(m.at(x), n.at(x)));
  return catMeet(homs, m.space()->base());
}

bool moduleLeq(const LeftModule& m, const LeftModule& n) {
  requireSameSpace(m.space(), n.space(), "moduleLeq");
  for (std::size_t x = 0; x < m.size(); ++x)
    if (!catLeq(m.at(x), n.at(x))) return false;
  return true;
}

QValue composeModules(const LeftModule& m, const RightModule& n) {
  requireSameSpace(m.space(), n.space(), "composeModules");
  std::vector<QValue> parts;
  parts.reserve(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) parts.push_back(tensor(m.at(x), n.at(x)));
  return catJoin(parts, m.space()->base());
}

QValue lanYonedaApply(const LeftModule& m, const RightModule& g) { return composeModules(m, g); }

QValue weightedLimitValues(std::span<const QValue> weight, std::span<const QValue> diagram,
                           Base b) {
  if (weight.size() != diagram.size())
    throw std::invalid_argument("weight and diagram sizes differ");
  std::vector<QValue> parts;
  parts.reserve(weight.size());
  for (std::size_t k = 0; k < weight.size(); ++k) parts.push_back(hom(weight[k], diagram[k]));
  return catMeet(parts, b);
}

QValue weightedColimitValues(std::span<const QValue> weight, std::span<const QValue> diagram,
                             Base b) {
  if (weight.size() != diagram.size())
    throw std::invalid_argument("weight and diagram sizes differ");
  std::vector<QValue> parts;
  parts.reserve(weight.size());
  for (std::size_t k = 0; k < weight.size(); ++k) parts.push_back(tensor(weight[k], diagram[k]));
  return catJoin(parts, b);
}

Weight::Weight(SpacePtr index_, bool covariant_, std::vector<QValue> values_)
    : index(std::move(index_)), covariant(covariant_), values(std::move(values_)) {
  if (!index) throw std::invalid_argument("weight: missing index space");
  if (values.size() != index->size()) throw std::invalid_argument("weight: size mismatch");
  for (std::size_t k = 0; k < values.size(); ++k)
    for (std::size_t l = 0; l < values.size(); ++l) {
      bool ok = covariant ? catLeq(tensor(index->dist(k, l), values[k]), values[l])
                          : catLeq(tensor(values[l], index->dist(k, l)), values[k]);
      if (!ok)
        throw InvalidModule("weight is not functorial at (" + index->pointName(k) + "," +
                            index->pointName(l) + ")");
    }
}

Diagram::Diagram(SpacePtr index_, SpacePtr target_, std::vector<QValue> grid_)
    : index(std::move(index_)), target(std::move(target_)), grid(std::move(grid_)) {
  if (!index || !target) throw std::invalid_argument("diagram: missing space");
  if (grid.size() != index->size() * target->size())
    throw std::invalid_argument("diagram: size mismatch");
  for (std::size_t k = 0; k < index->size(); ++k)
    if (!RightModule::validTable(*target, std::span<const QValue>(grid).subspan(
                                              k * target->size(), target->size())))
      throw InvalidModule("diagram column " + index->pointName(k) +
                          " is not a right module on " + target->name());
  for (std::size_t k = 0; k < index->size(); ++k)
    for (std::size_t l = 0; l < index->size(); ++l)
      for (std::size_t a = 0; a < target->size(); ++a)
        if (!catLeq(tensor(index->dist(k, l), at(k, a)), at(l, a)))
          throw InvalidModule("diagram is not functorial in the index at (" +
                              index->pointName(k) + "," + index->pointName(l) + ")");
}

QValue weightedLimit(const Weight& p, std::span<const QValue> diagram) {
  if (!p.covariant) throw std::invalid_argument("limits take covariant weights here");
  return weightedLimitValues(p.values, diagram, p.index->base());
}

QValue weightedColimit(const Weight& p, std::span<const QValue> diagram) {
  if (p.covariant) throw std::invalid_argument("colimits take contravariant weights here");
  return weightedColimitValues(p.values, diagram, p.index->base());
}

LeftModule kanExtend(const LeftModule& m, const SpaceMap& g) {
  if (g.source.get() != m.space().get())
    throw SpaceMismatch("kanExtend: module does not live on the map source");
  if (!isNonexpansive(g)) throw std::invalid_argument("kanExtend: map is not nonexpansive");
  const Space& b = *g.target;
  std::vector<QValue> out;
  out.reserve(b.size());
  for (std::size_t t = 0; t < b.size(); ++t) {
    std::vector<QValue> parts;
    parts.reserve(m.size());
    for (std::size_t x = 0; x < m.size(); ++x)
      parts.push_back(tensor(m.at(x), b.dist(t, g(x))));
    out.push_back(catJoin(parts, b.base()));
  }
  return LeftModule(g.target, std::move(out));
}

LeftModule restrictAlong(const LeftModule& m, const SpaceMap& g) {
  if (g.target.get() != m.space().get())
    throw SpaceMismatch("restrictAlong: module does not live on the map target");
  if (!isNonexpansive(g)) throw std::invalid_argument("restrictAlong: map is not nonexpansive");
  std::vector<QValue> out;
  out.reserve(g.source->size());
  for (std::size_t x = 0; x < g.source->size(); ++x) out.push_back(m.at(g(x)));
  return LeftModule(g.source, std::move(out));
}

RightModule rightAdjointCandidate(const LeftModule& m) {
  const Space& s = *m.space();
  std::vector<QValue> out;
  out.reserve(s.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    out.push_back(presheafHom(m, yoneda(m.space(), a)));
  return RightModule(m.space(), std::move(out));
}

bool isAdjointPair(const LeftModule& m, const RightModule& n) {
  requireSameSpace(m.space(), n.space(), "isAdjointPair");
  if (!composeModules(m, n).isUnit()) return false;
  const Space& s = *m.space();
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (!catLeq(tensor(n.at(y), m.at(x)), s.dist(x, y))) return false;
  return true;
}

QValue homViaAdjoint(const LeftModule& m, const LeftModule& n) {
  RightModule adj = rightAdjointCandidate(m);
  if (!isAdjointPair(m, adj))
    throw NotLeftAdjoint("homViaAdjoint: module has no right adjoint");
  std::vector<QValue> parts;
  parts.reserve(n.size());
  for (std::size_t x = 0; x < n.size(); ++x) parts.push_back(tensor(n.at(x), adj.at(x)));
  return catJoin(parts, n.space()->base());
}

}  // namespace vcat
