#include "vcat/completion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "vcat/flatness.hpp"

namespace vcat {

namespace {

using Mask = std::uint32_t;

constexpr std::size_t kMaxPointsForSubsets = 24;

void requireSmall(const Space& s, const char* what) {
  if (s.size() > kMaxPointsForSubsets)
    throw PreconditionError(std::string(what) + ": space too large for subset enumeration");
}

std::vector<std::size_t> maskBits(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

// The module generated by a subset: x maps to the join of the distances
// into the subset.  The empty subset generates the initial presheaf.
std::vector<QValue> maskModule(const Space& s, Mask m) {
  std::vector<QValue> out;
  out.reserve(s.size());
  std::vector<QValue> buf;
  for (std::size_t x = 0; x < s.size(); ++x) {
    buf.clear();
    for (std::size_t y = 0; y < s.size(); ++y)
      if (m & (Mask{1} << y)) buf.push_back(s.dist(x, y));
    out.push_back(catJoin(buf, s.base()));
  }
  return out;
}

Mask closureMask(const Space& s, Mask m) {
  std::vector<QValue> mod = maskModule(s, m);
  Mask out = 0;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (mod[x].isUnit()) out |= Mask{1} << x;
  return out;
}

bool directedMask(const Space& s, Mask m) {
  std::vector<std::size_t> bits = maskBits(m);
  for (std::size_t u : bits)
    for (std::size_t v : bits) {
      bool found = false;
      for (std::size_t w : bits)
        if (s.dist(u, w).isUnit() && s.dist(v, w).isUnit()) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return !bits.empty();
}

std::string subsetName(const Space& s, const std::vector<std::size_t>& bits) {
  std::string out = "{";
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) out += ",";
    out += s.pointName(bits[i]);
  }
  out += "}";
  return out;
}

Completion assemble(const SpacePtr& s, CompletionNotion notion,
                    const std::vector<Mask>& masks, const std::string& suffix) {
  std::vector<CompletionPoint> points;
  std::vector<LeftModule> modules;
  std::vector<std::string> names;
  points.reserve(masks.size());
  for (Mask m : masks) {
    CompletionPoint p;
    p.generator = maskBits(m);
    p.module = maskModule(*s, m);
    p.name = subsetName(*s, p.generator);
    names.push_back(p.name);
    modules.emplace_back(s, p.module);
    points.push_back(std::move(p));
  }
  const std::size_t k = masks.size();
  std::vector<QValue> dist;
  dist.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      dist.push_back(presheafHom(modules[i], modules[j]));
  SpacePtr result = makeSpace(s->name() + "_" + suffix, s->base(), names, dist);

  std::vector<std::size_t> assign;
  assign.reserve(s->size());
  for (std::size_t a = 0; a < s->size(); ++a) {
    Mask image = closureMask(*s, Mask{1} << a);
    auto it = std::find(masks.begin(), masks.end(), image);
    if (it == masks.end())
      throw std::logic_error("completion: embedded point missing from point set");
    assign.push_back(static_cast<std::size_t>(it - masks.begin()));
  }
  return Completion{s, notion, result, SpaceMap{s, result, assign}, std::move(points)};
}

// Lower and upper bound operators of the underlying order.
Mask downOf(const Space& s, Mask m) {
  Mask out = 0;
  for (std::size_t l = 0; l < s.size(); ++l) {
    bool all = true;
    for (std::size_t u = 0; u < s.size() && all; ++u)
      if (m & (Mask{1} << u)) all = s.dist(l, u).isUnit();
    if (all) out |= Mask{1} << l;
  }
  return out;
}

Mask upOf(const Space& s, Mask m) {
  Mask out = 0;
  for (std::size_t u = 0; u < s.size(); ++u) {
    bool all = true;
    for (std::size_t l = 0; l < s.size() && all; ++l)
      if (m & (Mask{1} << l)) all = s.dist(l, u).isUnit();
    if (all) out |= Mask{1} << u;
  }
  return out;
}

enum class FilterStyle { Weak, Directed };

FilterStyle styleOf(CompletionNotion n, const char* what) {
  switch (n) {
    case CompletionNotion::P1:
    case CompletionNotion::DownsetsBool:
      return FilterStyle::Weak;
    case CompletionNotion::P0:
    case CompletionNotion::P2:
    case CompletionNotion::IdealsBool:
      return FilterStyle::Directed;
    default:
      throw PreconditionError(std::string(what) +
                              ": notion has no associated filter class");
  }
}

// Representative search shared by the completeness predicates: the target
// row is the pointwise meet of the generator's rows; a representative is a
// point realizing it exactly.
std::vector<std::size_t> maskRepresentatives(const Space& s, Mask m) {
  const std::size_t n = s.size();
  std::vector<QValue> target;
  target.reserve(n);
  std::vector<QValue> buf;
  for (std::size_t a = 0; a < n; ++a) {
    buf.clear();
    for (std::size_t x = 0; x < n; ++x)
      if (m & (Mask{1} << x)) buf.push_back(s.dist(x, a));
    target.push_back(catMeet(buf, s.base()));
  }
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < n; ++r) {
    bool all = true;
    for (std::size_t a = 0; a < n && all; ++a) all = s.dist(r, a) == target[a];
    if (all) out.push_back(r);
  }
  return out;
}

std::optional<Mask> completenessWitness(const Space& s, FilterStyle style) {
  requireSmall(s, "isComplete");
  const Mask top = Mask{1} << s.size();
  for (Mask m = 1; m < top; ++m) {
    if (style == FilterStyle::Directed && !directedMask(s, m)) continue;
    if (maskRepresentatives(s, m).empty()) return m;
  }
  return std::nullopt;
}

}  // namespace

const char* notionName(CompletionNotion n) {
  switch (n) {
    case CompletionNotion::P0: return "p0";
    case CompletionNotion::P1: return "p1";
    case CompletionNotion::P2: return "p2";
    case CompletionNotion::FreeBool: return "free";
    case CompletionNotion::DownsetsBool: return "downsets";
    case CompletionNotion::IdealsBool: return "ideals";
    case CompletionNotion::DMN: return "dmn";
  }
  return "?";
}

std::optional<CompletionNotion> parseNotion(std::string_view text) {
  if (text == "p0") return CompletionNotion::P0;
  if (text == "p1") return CompletionNotion::P1;
  if (text == "p2") return CompletionNotion::P2;
  if (text == "free") return CompletionNotion::FreeBool;
  if (text == "downsets") return CompletionNotion::DownsetsBool;
  if (text == "ideals") return CompletionNotion::IdealsBool;
  if (text == "dmn") return CompletionNotion::DMN;
  return std::nullopt;
}

Completion complete(const SpacePtr& s, CompletionNotion notion) {
  requireSmall(*s, "complete");
  const bool boolOnly = notion == CompletionNotion::FreeBool ||
                        notion == CompletionNotion::DownsetsBool ||
                        notion == CompletionNotion::IdealsBool ||
                        notion == CompletionNotion::DMN;
  if (boolOnly && s->base() != Base::Bool)
    throw BaseMismatch(std::string("complete: notion ") + notionName(notion) +
                       " needs a Bool space");
  if (notion == CompletionNotion::DMN) return dedekindMacNeille(s);

  const Mask top = Mask{1} << s->size();
  std::vector<Mask> masks;
  Mask start = notion == CompletionNotion::FreeBool ? 0 : 1;
  for (Mask m = start; m < top; ++m) {
    if (closureMask(*s, m) != m) continue;
    switch (notion) {
      case CompletionNotion::P1:
      case CompletionNotion::DownsetsBool:
      case CompletionNotion::FreeBool:
        break;
      case CompletionNotion::P2:
      case CompletionNotion::IdealsBool:
        if (!directedMask(*s, m)) continue;
        break;
      case CompletionNotion::P0: {
        LeftModule mod(s, maskModule(*s, m));
        if (!isP0Flat(mod)) continue;
        break;
      }
      default:
        break;
    }
    masks.push_back(m);
  }
  return assemble(s, notion, masks, notionName(notion));
}

Completion dedekindMacNeille(const SpacePtr& p) {
  if (p->base() != Base::Bool) throw BaseMismatch("dedekindMacNeille: needs a Bool space");
  requireSmall(*p, "dedekindMacNeille");
  const Mask top = Mask{1} << p->size();
  std::vector<Mask> lowers;
  for (Mask seed = 0; seed < top; ++seed) {
    Mask u = upOf(*p, seed);
    Mask l = downOf(*p, u);
    if (std::find(lowers.begin(), lowers.end(), l) == lowers.end()) lowers.push_back(l);
  }
  std::sort(lowers.begin(), lowers.end());
  return assemble(p, CompletionNotion::DMN, lowers, "dmn");
}

bool isComplete(const SpacePtr& s, CompletionNotion notion) {
  return !completenessWitness(*s, styleOf(notion, "isComplete")).has_value();
}

SpaceMap extendMap(const SpaceMap& f, const Completion& c) {
  if (!sameSpace(f.source, c.source))
    throw SpaceMismatch("extendMap: map must start from the completed space");
  if (!isNonexpansive(f)) throw PreconditionError("extendMap: map is not nonexpansive");
  FilterStyle style = styleOf(c.notion, "extendMap");
  const Space& b = *f.target;
  if (auto w = completenessWitness(b, style)) {
    throw PreconditionError("extendMap: target " + b.name() + " is not complete, filter " +
                            subsetName(b, maskBits(*w)) + " has no representative");
  }
  std::vector<std::size_t> assign;
  assign.reserve(c.points.size());
  for (const CompletionPoint& p : c.points) {
    Mask image = 0;
    for (std::size_t z : p.generator) image |= Mask{1} << f(z);
    std::vector<std::size_t> reps = maskRepresentatives(b, image);
    if (reps.empty())
      throw std::logic_error("extendMap: complete target rejected filter " +
                             subsetName(b, maskBits(image)));
    assign.push_back(reps.front());
  }
  return SpaceMap{c.result, f.target, assign};
}

namespace {

// Memoized representative sets of subsets of the target space.
class RepCache {
 public:
  explicit RepCache(const Space& s) : space_(s) {}
  const std::vector<std::size_t>& of(Mask m) {
    auto it = memo_.find(m);
    if (it == memo_.end())
      it = memo_.emplace(m, maskRepresentatives(space_, m)).first;
    return it->second;
  }

 private:
  const Space& space_;
  std::map<Mask, std::vector<std::size_t>> memo_;
};

bool preservesRepresentatives(const Space& to, const std::vector<std::size_t>& g,
                              const std::vector<std::pair<Mask, std::vector<std::size_t>>>& reps,
                              RepCache& cache) {
  for (const auto& [mask, witnesses] : reps) {
    Mask image = 0;
    for (std::size_t x : maskBits(mask)) image |= Mask{1} << g[x];
    const std::vector<std::size_t>& targetReps = cache.of(image);
    for (std::size_t r : witnesses) {
      bool found = false;
      for (std::size_t t : targetReps)
        if (t == g[r] || unitIsomorphic(to, t, g[r])) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

bool mapsUnitIsomorphic(const Space& to, const std::vector<std::size_t>& g,
                        const std::vector<std::size_t>& h) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != h[i] && !unitIsomorphic(to, g[i], h[i])) return false;
  return true;
}

bool nonexpansiveAssign(const Space& from, const Space& to,
                        const std::vector<std::size_t>& g) {
  for (std::size_t x = 0; x < from.size(); ++x)
    for (std::size_t y = 0; y < from.size(); ++y)
      if (!catLeq(from.dist(x, y), to.dist(g[x], g[y]))) return false;
  return true;
}

}  // namespace

UniversalReport checkUniversalProperty(const SpacePtr& a, CompletionNotion notion,
                                       const SpacePtr& b, std::uint64_t budget) {
  UniversalReport report;
  FilterStyle style = styleOf(notion, "checkUniversalProperty");
  Completion c = complete(a, notion);
  if (auto w = completenessWitness(*b, style)) {
    report.failures.push_back("target " + b->name() + " is not complete, witness " +
                              subsetName(*b, maskBits(*w)));
    return report;
  }

  // Filters of the completion and their representative sets, computed once.
  std::vector<std::pair<Mask, std::vector<std::size_t>>> completionReps;
  {
    const Mask top = Mask{1} << c.result->size();
    for (Mask m = 1; m < top; ++m) {
      if (style == FilterStyle::Directed && !directedMask(*c.result, m)) continue;
      completionReps.emplace_back(m, maskRepresentatives(*c.result, m));
    }
  }
  RepCache cache(*b);

  std::uint64_t spent = 0;
  bool exhausted = false;
  auto charge = [&](std::uint64_t amount) {
    spent += amount;
    if (spent > budget) {
      report.budgetExceeded = true;
      exhausted = true;
    }
    return !exhausted;
  };

  const std::size_t na = a->size(), nc = c.result->size(), nb = b->size();

  // Agreement constraints for maps out of the completion: each embedded
  // point must land on the f-image of its preimages, up to unit isomorphism.
  std::vector<std::vector<std::size_t>> embedded(nc);
  for (std::size_t x = 0; x < na; ++x) embedded[c.embedding(x)].push_back(x);

  std::vector<std::size_t> f(na, 0);
  for (;;) {
    if (!charge(1)) return report;
    if (nonexpansiveAssign(*a, *b, f)) {
      report.mapsChecked += 1;

      std::vector<std::size_t> fbar;
      fbar.reserve(nc);
      bool extended = true;
      for (const CompletionPoint& p : c.points) {
        Mask image = 0;
        for (std::size_t z : p.generator) image |= Mask{1} << f[z];
        const std::vector<std::size_t>& reps = cache.of(image);
        if (reps.empty()) {
          report.failures.push_back("no representative for the image of " + p.name);
          extended = false;
          break;
        }
        fbar.push_back(reps.front());
      }
      if (!extended) return report;

      bool good = true;
      for (std::size_t x = 0; x < na && good; ++x) {
        std::size_t viaBar = fbar[c.embedding(x)];
        if (viaBar != f[x] && !unitIsomorphic(*b, viaBar, f[x])) good = false;
      }
      if (!good)
        report.failures.push_back("extension disagrees with the map on embedded points");
      if (!nonexpansiveAssign(*c.result, *b, fbar)) {
        report.failures.push_back("extension is not nonexpansive");
        good = false;
      }
      if (good && !preservesRepresentatives(*b, fbar, completionReps, cache)) {
        report.failures.push_back("extension fails to preserve representatives");
        good = false;
      }

      // Uniqueness: walk every map agreeing with f on embedded points and
      // nonexpansive (prefix violations prune whole subtrees, which loses
      // no qualifying map); at the leaves keep the representative
      // preserving ones and compare with the extension.
      std::vector<std::size_t> g(nc, 0);
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (exhausted) return;
        if (i == nc) {
          if (!charge(completionReps.size())) return;
          if (preservesRepresentatives(*b, g, completionReps, cache) &&
              !mapsUnitIsomorphic(*b, fbar, g)) {
            report.failures.push_back("a second distinct extension exists");
            good = false;
          }
          return;
        }
        for (std::size_t cand = 0; cand < nb && !exhausted; ++cand) {
          if (!charge(1)) return;
          bool fits = true;
          for (std::size_t x : embedded[i])
            if (cand != f[x] && !unitIsomorphic(*b, cand, f[x])) {
              fits = false;
              break;
            }
          for (std::size_t j = 0; j < i && fits; ++j)
            fits = catLeq(c.result->dist(i, j), b->dist(cand, g[j])) &&
                   catLeq(c.result->dist(j, i), b->dist(g[j], cand));
          if (!fits) continue;
          g[i] = cand;
          self(self, i + 1);
        }
      };
      rec(rec, 0);
      if (exhausted) return report;
      if (good) report.extensionsVerified += 1;
    }
    std::size_t i = 0;
    while (i < na && ++f[i] == nb) f[i++] = 0;
    if (i == na) break;
  }
  return report;
}

Quotient zeroQuotient(const SpacePtr& s) {
  const std::size_t n = s->size();
  Quotient q;
  q.classOf.assign(n, 0);
  std::vector<std::size_t> repOf;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t k = 0; k < repOf.size() && !placed; ++k)
      if (unitIsomorphic(*s, repOf[k], i)) {
        q.classOf[i] = k;
        q.members[k].push_back(i);
        placed = true;
      }
    if (!placed) {
      q.classOf[i] = repOf.size();
      repOf.push_back(i);
      q.members.push_back({i});
    }
  }
  const std::size_t k = repOf.size();
  std::vector<std::string> names;
  for (std::size_t c = 0; c < k; ++c) names.push_back(s->pointName(repOf[c]));
  std::vector<QValue> dist;
  dist.reserve(k * k);
  for (std::size_t ci = 0; ci < k; ++ci)
    for (std::size_t cj = 0; cj < k; ++cj) {
      QValue d = s->dist(repOf[ci], repOf[cj]);
      for (std::size_t x : q.members[ci])
        for (std::size_t y : q.members[cj])
          if (!(s->dist(x, y) == d))
            throw std::logic_error("zeroQuotient: class distance is not well defined");
      dist.push_back(d);
    }
  q.space = makeSpace(s->name() + "_q", s->base(), names, dist);
  return q;
}

SpacePtr hausdorffConstruction(const SpacePtr& s) {
  if (!s->isSymmetric())
    throw PreconditionError("hausdorffConstruction: space is not symmetric");
  requireSmall(*s, "hausdorffConstruction");
  Quotient q = zeroQuotient(s);
  const std::size_t k = q.space->size();
  const Mask top = Mask{1} << k;

  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> classSets;
  for (Mask m = 1; m < top; ++m) {
    std::vector<std::size_t> classes = maskBits(m);
    std::vector<std::size_t> sourceBits;
    for (std::size_t c : classes)
      sourceBits.insert(sourceBits.end(), q.members[c].begin(), q.members[c].end());
    std::sort(sourceBits.begin(), sourceBits.end());
    names.push_back(subsetName(*s, sourceBits));
    classSets.push_back(std::move(classes));
  }

  std::vector<QValue> dist;
  dist.reserve(classSets.size() * classSets.size());
  std::vector<QValue> inner, outer;
  for (const auto& X : classSets)
    for (const auto& Y : classSets) {
      outer.clear();
      for (std::size_t x : X) {
        inner.clear();
        for (std::size_t y : Y) inner.push_back(q.space->dist(x, y));
        outer.push_back(catJoin(inner, s->base()));
      }
      dist.push_back(catMeet(outer, s->base()));
    }
  return makeSpace(s->name() + "_haus", s->base(), names, dist);
}

SpacePtr boolEncode(const SpacePtr& p) {
  if (p->base() != Base::Bool) throw BaseMismatch("boolEncode: needs a Bool space");
  std::vector<QValue> dist;
  dist.reserve(p->size() * p->size());
  for (std::size_t i = 0; i < p->size(); ++i)
    for (std::size_t j = 0; j < p->size(); ++j)
      dist.push_back(p->dist(i, j).truth() ? QValue::unit(Base::RPlus)
                                           : QValue::infinity());
  return makeSpace(p->name() + "_rplus", Base::RPlus, p->points(), dist);
}

bool bridgeCheck(const SpacePtr& p, CompletionNotion notion) {
  if (notion != CompletionNotion::P1 && notion != CompletionNotion::P2)
    throw PreconditionError("bridgeCheck: only p1 and p2 are compared across bases");
  SpacePtr viaEncode = complete(boolEncode(p), notion).result;
  SpacePtr viaBool = boolEncode(complete(p, notion).result);
  return sameUpToNames(viaEncode, viaBool);
}

bool sameUpToNames(const SpacePtr& a, const SpacePtr& b) {
  if (a->size() != b->size() || a->base() != b->base()) return false;
  std::vector<std::size_t> to;
  to.reserve(a->size());
  for (std::size_t i = 0; i < a->size(); ++i) {
    auto j = b->indexOf(a->pointName(i));
    if (!j) return false;
    to.push_back(*j);
  }
  for (std::size_t i = 0; i < a->size(); ++i)
    for (std::size_t j = 0; j < a->size(); ++j)
      if (!(a->dist(i, j) == b->dist(to[i], to[j]))) return false;
  return true;
}

namespace {

bool extendIso(const Space& a, const Space& b, std::vector<std::size_t>& image,
               std::vector<bool>& used, std::size_t i) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j]) continue;
    bool fits = a.dist(i, i) == b.dist(j, j);
    for (std::size_t k = 0; k < i && fits; ++k)
      fits = a.dist(i, k) == b.dist(j, image[k]) && a.dist(k, i) == b.dist(image[k], j);
    if (!fits) continue;
    image[i] = j;
    used[j] = true;
    if (extendIso(a, b, image, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool spacesIsomorphic(const SpacePtr& a, const SpacePtr& b) {
  if (a->size() != b->size() || a->base() != b->base()) return false;
  std::vector<std::size_t> image(a->size(), 0);
  std::vector<bool> used(a->size(), false);
  return extendIso(*a, *b, image, used, 0);
}

}  // namespace vcat
