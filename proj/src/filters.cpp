#include "vcat/filters.hpp"

#include <algorithm>
#include <array>

#include "vcat/flatness.hpp"

namespace vcat {

namespace {

void requireSameSpace(const PrincipalFilter& a, const PrincipalFilter& b, const char* what) {
  if (a.space().get() != b.space().get())
    throw SpaceMismatch(std::string(what) + ": filters live on different spaces");
}

std::vector<QValue> column(const Space& s, std::size_t to) {
  std::vector<QValue> out;
  out.reserve(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) out.push_back(s.dist(x, to));
  return out;
}

// First generator point that every point of `from` reaches at unit
// distance, or nullopt.
std::optional<std::size_t> commonUnitSuccessor(const Space& s,
                                               std::span<const std::size_t> from,
                                               std::span<const std::size_t> candidates) {
  for (std::size_t w : candidates) {
    bool ok = true;
    for (std::size_t u : from)
      if (!s.dist(u, w).isUnit()) {
        ok = false;
        break;
      }
    if (ok) return w;
  }
  return std::nullopt;
}

}  // namespace

PrincipalFilter::PrincipalFilter(SpacePtr space, std::vector<std::size_t> generator)
    : space_(std::move(space)), gen_(std::move(generator)) {
  if (!space_) throw std::invalid_argument("filter: missing space");
  if (gen_.empty()) throw std::invalid_argument("filter: empty generator");
  std::sort(gen_.begin(), gen_.end());
  gen_.erase(std::unique(gen_.begin(), gen_.end()), gen_.end());
  if (gen_.back() >= space_->size()) throw std::invalid_argument("filter: generator out of range");
}

bool PrincipalFilter::operator==(const PrincipalFilter& o) const {
  return space_.get() == o.space_.get() && gen_ == o.gen_;
}

QValue limPlus(const PrincipalFilter& f, std::span<const QValue> t) {
  if (t.size() != f.space()->size()) throw std::invalid_argument("limPlus: table size mismatch");
  std::vector<QValue> vals;
  vals.reserve(f.generator().size());
  for (std::size_t x : f.generator()) vals.push_back(t[x]);
  return catMeet(vals, f.space()->base());
}

QValue limMinus(const PrincipalFilter& f, std::span<const QValue> t) {
  if (t.size() != f.space()->size()) throw std::invalid_argument("limMinus: table size mismatch");
  std::vector<QValue> vals;
  vals.reserve(f.generator().size());
  for (std::size_t x : f.generator()) vals.push_back(t[x]);
  return catJoin(vals, f.space()->base());
}

LeftModule mMinus(const PrincipalFilter& f) {
  const Space& s = *f.space();
  std::vector<QValue> out;
  out.reserve(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    std::vector<QValue> vals;
    vals.reserve(f.generator().size());
    for (std::size_t y : f.generator()) vals.push_back(s.dist(x, y));
    out.push_back(catJoin(vals, s.base()));
  }
  return LeftModule(f.space(), std::move(out));
}

LeftModule mPlus(const PrincipalFilter& f) {
  const Space& s = *f.space();
  std::vector<QValue> out;
  out.reserve(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    std::vector<QValue> vals;
    vals.reserve(f.generator().size());
    for (std::size_t y : f.generator()) vals.push_back(s.dist(x, y));
    out.push_back(catMeet(vals, s.base()));
  }
  return LeftModule(f.space(), std::move(out));
}

std::vector<std::size_t> gamma(const LeftModule& m, const QValue& eps) {
  if (eps.base() != m.space()->base()) throw BaseMismatch("gamma: tolerance base mismatch");
  const QValue zero =
      eps.base() == Base::RPlus ? QValue::rational(0) : QValue::boolean(false);
  if (!eps.isInf() && QValue::cmpNumeric(eps, zero) <= 0)
    throw PreconditionError("gamma: tolerance must be positive");
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < m.size(); ++x)
    if (QValue::cmpNumeric(m.at(x), eps) <= 0) out.push_back(x);
  return out;
}

PrincipalFilter filterOfModule(const LeftModule& m) {
  std::vector<std::size_t> z = zeroSet(m);
  if (z.empty())
    throw EmptyKernel("module never reaches the unit; its filter has no basis");
  return PrincipalFilter(m.space(), std::move(z));
}

bool isWeaklyFlat(const PrincipalFilter& f) {
  const Space& s = *f.space();
  for (std::size_t x : f.generator()) {
    bool ok = false;
    for (std::size_t y : f.generator())
      if (s.dist(x, y).isUnit()) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool isFlat(const PrincipalFilter& f) {
  const Space& s = *f.space();
  const auto& b = f.generator();
  for (std::size_t u : b)
    for (std::size_t v : b) {
      std::array<std::size_t, 2> pair{u, v};
      if (!commonUnitSuccessor(s, pair, b)) return false;
    }
  return true;
}

QValue diameter(const PrincipalFilter& f) {
  const Space& s = *f.space();
  std::vector<QValue> vals;
  for (std::size_t x : f.generator())
    for (std::size_t y : f.generator()) vals.push_back(s.dist(x, y));
  return catMeet(vals, s.base());
}

bool isCauchy(const PrincipalFilter& f) { return diameter(f).isUnit(); }

PrincipalFilter closure(const PrincipalFilter& f) {
  LeftModule m = mMinus(f);
  std::vector<std::size_t> gen;
  for (std::size_t x = 0; x < m.size(); ++x)
    if (m.at(x).isUnit()) gen.push_back(x);
  return PrincipalFilter(f.space(), std::move(gen));
}

bool filterMorphism(const PrincipalFilter& f1, const PrincipalFilter& f2) {
  requireSameSpace(f1, f2, "filterMorphism");
  PrincipalFilter cl = closure(f2);
  return std::includes(cl.generator().begin(), cl.generator().end(), f1.generator().begin(),
                       f1.generator().end());
}

bool zoiCheck(const PrincipalFilter& f, const LeftModule& m) {
  if (f.space().get() != m.space().get())
    throw SpaceMismatch("zoiCheck: filter and module live on different spaces");
  // Route 1: the filter refines the filter of the module. With an empty
  // unit set the module's family is improper and refinement fails.
  std::vector<std::size_t> z = zeroSet(m);
  bool refines =
      !z.empty() && std::includes(z.begin(), z.end(), f.generator().begin(), f.generator().end());
  // Route 2: the induced module dominates m pointwise.
  bool dominates = moduleLeq(mMinus(f), m);
  return refines == dominates;
}

bool fac22Check(const PrincipalFilter& f, const RightModule& n) {
  if (f.space().get() != n.space().get())
    throw SpaceMismatch("fac22Check: filter and module live on different spaces");
  const Base b = f.space()->base();
  LeftModule lower = mMinus(f);
  std::vector<QValue> parts;
  parts.reserve(n.size());
  for (std::size_t x = 0; x < n.size(); ++x) parts.push_back(tensor(lower.at(x), n.at(x)));
  QValue composite = catJoin(parts, b);
  QValue lim = limMinus(f, n.values());
  // The composite always factors below the filtered limit; equality needs
  // weak flatness.
  if (!catLeq(composite, lim)) return false;
  if (isWeaklyFlat(f) && composite != lim) return false;
  return true;
}

std::vector<std::size_t> representatives(const PrincipalFilter& f) {
  const Space& s = *f.space();
  std::vector<QValue> target;
  target.reserve(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) target.push_back(limPlus(f, column(s, a)));
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    bool match = true;
    for (std::size_t a = 0; a < s.size(); ++a)
      if (s.dist(x, a) != target[a]) {
        match = false;
        break;
      }
    if (match) out.push_back(x);
  }
  return out;
}

bool converges(const PrincipalFilter& f, std::size_t point) {
  const Space& s = *f.space();
  if (point >= s.size()) throw std::invalid_argument("converges: point out of range");
  // Route 1: refinement of the neighborhood filter, i.e. the generator
  // sits inside the unit set of the representable at the point.
  bool refines = true;
  for (std::size_t x : f.generator()) refines = refines && s.dist(x, point).isUnit();
  // Route 2: the induced module dominates the representable.
  bool dominates = moduleLeq(mMinus(f), yoneda(f.space(), point));
  if (refines != dominates)
    throw std::logic_error("converges: the two routes disagree");
  return refines;
}

PrincipalFilter directImage(const PrincipalFilter& f, const SpaceMap& g) {
  if (g.source.get() != f.space().get())
    throw SpaceMismatch("directImage: filter does not live on the map source");
  std::vector<std::size_t> gen;
  gen.reserve(f.generator().size());
  for (std::size_t x : f.generator()) gen.push_back(g(x));
  return PrincipalFilter(g.target, std::move(gen));
}

PrincipalFilter supFilters(std::span<const PrincipalFilter> fs) {
  if (fs.empty()) throw std::invalid_argument("supFilters: empty family");
  std::vector<std::size_t> gen;
  for (const PrincipalFilter& f : fs) {
    requireSameSpace(fs[0], f, "supFilters");
    gen.insert(gen.end(), f.generator().begin(), f.generator().end());
  }
  return PrincipalFilter(fs[0].space(), std::move(gen));
}

PrincipalFilter colimitClosed(std::span<const PrincipalFilter> fs) {
  return closure(supFilters(fs));
}

bool liminfFCheck(const PrincipalFilter& f, std::span<const PrincipalFilter> parts,
                  std::span<const QValue> t) {
  if (parts.empty()) throw PreconditionError("liminfFCheck: empty decomposition");
  if (!(supFilters(parts) == f))
    throw PreconditionError("liminfFCheck: filter is not the join of the parts");
  std::vector<QValue> partLims;
  partLims.reserve(parts.size());
  for (const PrincipalFilter& p : parts) partLims.push_back(limMinus(p, t));
  return limMinus(f, t) == catJoin(partLims, f.space()->base());
}

EvPeriodicSequence::EvPeriodicSequence(SpacePtr space_, std::vector<std::size_t> preperiod_,
                                       std::vector<std::size_t> cycle_)
    : space(std::move(space_)), preperiod(std::move(preperiod_)), cycle(std::move(cycle_)) {
  if (!space) throw std::invalid_argument("sequence: missing space");
  if (cycle.empty()) throw std::invalid_argument("sequence: empty cycle");
  for (std::size_t x : preperiod)
    if (x >= space->size()) throw std::invalid_argument("sequence: preperiod out of range");
  for (std::size_t x : cycle)
    if (x >= space->size()) throw std::invalid_argument("sequence: cycle out of range");
}

bool isForwardCauchy(const EvPeriodicSequence& s) {
  // Beyond the preperiod every ordered pair of cycle values recurs in both
  // orders, so the tail condition collapses to a unit clique.
  for (std::size_t u : s.cycle)
    for (std::size_t v : s.cycle)
      if (!s.space->dist(u, v).isUnit()) return false;
  return true;
}

PrincipalFilter tailFilter(const EvPeriodicSequence& s) {
  return PrincipalFilter(s.space, s.cycle);
}

EvPeriodicSequence separatingSequence(const PrincipalFilter& f, const LeftModule& m,
                                      const QValue& alpha) {
  if (f.space().get() != m.space().get())
    throw SpaceMismatch("separatingSequence: filter and module live on different spaces");
  const Space& s = *f.space();
  if (s.base() != Base::RPlus)
    throw PreconditionError("separatingSequence: metric base only");
  if (alpha.base() != Base::RPlus || alpha.isUnit())
    throw PreconditionError("separatingSequence: schedule seed must be positive");
  LeftModule lower = mMinus(f);

  // Witness point with the largest positive gap m(x) - mMinus(x).
  std::optional<std::size_t> witness;
  QValue bestGap = QValue::rational(0);
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (catLeq(lower.at(x), m.at(x))) continue;  // dominated here
    QValue gap = hom(lower.at(x), m.at(x));      // clamped difference
    if (!witness || QValue::cmpNumeric(gap, bestGap) > 0) {
      witness = x;
      bestGap = gap;
    }
  }
  if (!witness)
    throw PreconditionError("separatingSequence: the filter module dominates m everywhere");

  // Admissible schedule seed: strictly below the gap at the witness, so the
  // first step A(x, y0) + a < m(x) is satisfiable.
  QValue a = alpha;
  if (bestGap.isInf()) {
    if (a.isInf()) a = QValue::rational(1);
  } else if (QValue::cmpNumeric(a, halve(bestGap)) > 0) {
    a = halve(bestGap);
  }

  const auto& gen = f.generator();
  // y0: first generator point realizing limMinus of the witness row.
  std::size_t y0 = gen[0];
  for (std::size_t y : gen)
    if (QValue::cmpNumeric(s.dist(*witness, y), s.dist(*witness, y0)) < 0) y0 = y;

  // Greedy walk: step n moves to the first generator point within
  // a * 2^(-2-n). Once the tolerance drops below every positive distance
  // inside the generator the step function is fixed and the walk cycles.
  QValue minPositive = QValue::infinity();
  for (std::size_t u : gen)
    for (std::size_t v : gen) {
      const QValue& d = s.dist(u, v);
      if (!d.isUnit() && QValue::cmpNumeric(d, minPositive) < 0) minPositive = d;
    }

  std::vector<std::size_t> walk{y0};
  QValue tol = halve(halve(a));  // a * 2^-2
  bool unitRegime = QValue::cmpNumeric(tol, minPositive) < 0;
  std::vector<int> seenAt(s.size(), -1);
  std::vector<std::size_t> preperiod, cycle;
  for (std::size_t guard = 0; guard <= 4 * s.size() + 160; ++guard) {
    std::size_t cur = walk.back();
    if (unitRegime) {
      if (seenAt[cur] >= 0) {
        preperiod.assign(walk.begin(), walk.begin() + seenAt[cur]);
        cycle.assign(walk.begin() + seenAt[cur], walk.end() - 1);
        break;
      }
      seenAt[cur] = static_cast<int>(walk.size()) - 1;
    }
    std::size_t next = cur;
    for (std::size_t y : gen)
      if (catLeq(tol, s.dist(cur, y))) {  // d(cur, y) <= tol numerically
        next = y;
        break;
      }
    walk.push_back(next);
    tol = halve(tol);
    if (!unitRegime && QValue::cmpNumeric(tol, minPositive) < 0) {
      unitRegime = true;
      std::fill(seenAt.begin(), seenAt.end(), -1);
    }
  }
  if (cycle.empty())
    throw std::logic_error("separatingSequence: walk failed to close");
  return EvPeriodicSequence(f.space(), std::move(preperiod), std::move(cycle));
}

EvPeriodicSequence interpolateSequences(const EvPeriodicSequence& s1,
                                        const EvPeriodicSequence& s2,
                                        const PrincipalFilter& f) {
  if (s1.space.get() != f.space().get() || s2.space.get() != f.space().get())
    throw SpaceMismatch("interpolateSequences: inputs live on different spaces");
  if (!isForwardCauchy(s1) || !isForwardCauchy(s2))
    throw PreconditionError("interpolateSequences: inputs must be forward Cauchy");
  if (!isFlat(f)) throw PreconditionError("interpolateSequences: filter must be flat");
  if (!filterMorphism(tailFilter(s1), f) || !filterMorphism(tailFilter(s2), f))
    throw PreconditionError("interpolateSequences: tails do not map into the filter");
  const Space& s = *f.space();
  const auto& gen = f.generator();

  // Each tail value has a unit successor in the generator; directedness
  // folds those into one generator point below every tail value.
  std::vector<std::size_t> anchors;
  for (const auto* seq : {&s1, &s2})
    for (std::size_t u : seq->cycle) {
      bool found = false;
      for (std::size_t y : gen)
        if (s.dist(u, y).isUnit()) {
          anchors.push_back(y);
          found = true;
          break;
        }
      if (!found)
        throw std::logic_error("interpolateSequences: closure membership lost");
    }
  std::size_t w = anchors.at(0);
  for (std::size_t k = 1; k < anchors.size(); ++k) {
    std::array<std::size_t, 2> pair{w, anchors[k]};
    auto next = commonUnitSuccessor(s, pair, gen);
    if (!next) throw std::logic_error("interpolateSequences: directedness witness missing");
    w = *next;
  }
  // Verify the fold: every tail value reaches w at the unit.
  for (const auto* seq : {&s1, &s2})
    for (std::size_t u : seq->cycle)
      if (!s.dist(u, w).isUnit())
        throw std::logic_error("interpolateSequences: interpolant misses a tail value");
  return EvPeriodicSequence(f.space(), {}, {w});
}

bool charffilFiniteCheck(const SpacePtr& sp) {
  const Space& s = *sp;
  const std::size_t n = s.size();
  // Enumerate nonempty generators; for each closed flat filter find a
  // constant sequence whose tail closure reproduces it.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> gen;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) gen.push_back(i);
    PrincipalFilter f(sp, gen);
    if (!isFlat(f)) continue;
    if (!(closure(f) == f)) continue;
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) {
      EvPeriodicSequence constant(sp, {}, {y});
      if (!isForwardCauchy(constant)) continue;
      if (closure(tailFilter(constant)) == f) found = true;
    }
    if (!found) return false;
  }
  return true;
}

QValue wfHomDistance(const PrincipalFilter& f1, const PrincipalFilter& f2) {
  requireSameSpace(f1, f2, "wfHomDistance");
  QValue viaModules = presheafHom(mMinus(f1), mMinus(f2));
  QValue viaLimits = doubleLimitSupInf(f1, f2);
  if (viaModules != viaLimits)
    throw std::logic_error("wfHomDistance: module route and limit route disagree");
  return viaModules;
}

QValue doubleLimitSupInf(const PrincipalFilter& f1, const PrincipalFilter& f2) {
  requireSameSpace(f1, f2, "doubleLimitSupInf");
  const Space& s = *f1.space();
  // limPlus over f1 of (limMinus over f2 of the distance): catMeet of
  // catJoins on the generators.
  std::vector<QValue> outer;
  for (std::size_t x : f1.generator()) {
    std::vector<QValue> inner;
    for (std::size_t y : f2.generator()) inner.push_back(s.dist(x, y));
    outer.push_back(catJoin(inner, s.base()));
  }
  return catMeet(outer, s.base());
}

QValue doubleLimitInfSup(const PrincipalFilter& f1, const PrincipalFilter& f2) {
  requireSameSpace(f1, f2, "doubleLimitInfSup");
  const Space& s = *f1.space();
  std::vector<QValue> outer;
  for (std::size_t y : f2.generator()) {
    std::vector<QValue> inner;
    for (std::size_t x : f1.generator()) inner.push_back(s.dist(x, y));
    outer.push_back(catMeet(inner, s.base()));
  }
  return catJoin(outer, s.base());
}

}  // namespace vcat
