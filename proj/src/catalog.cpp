#include "vcat/catalog.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "vcat/filters.hpp"
#include "vcat/flatness.hpp"

namespace vcat {
namespace {

const char* kPointNames[] = {"a", "b", "c", "d", "e", "f"};

std::vector<std::string> pointNames(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(kPointNames[i]);
  return out;
}

// Syntactic encoding of a distance entry, for isomorphism keys.
std::array<long long, 3> entryKey(const QValue& v) {
  if (v.base() == Base::Bool) return {2, v.truth() ? 1 : 0, 0};
  if (v.isInf()) return {1, 0, 0};
  return {0, v.num(), v.den()};
}

using MatKey = std::vector<std::array<long long, 3>>;

MatKey permutedKey(const std::vector<QValue>& d, std::size_t n,
                   const std::vector<std::size_t>& perm) {
  MatKey k;
  k.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k.push_back(entryKey(d[perm[i] * n + perm[j]]));
  return k;
}

// The candidate is kept iff it is the lexicographically least member of its
// isomorphism orbit, so each class is emitted exactly once.
bool isCanonical(const std::vector<QValue>& d, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  MatKey own = permutedKey(d, n, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (permutedKey(d, n, perm) < own) return false;
  return true;
}

bool triangleHolds(const std::vector<QValue>& d, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (!catLeq(tensor(d[i * n + k], d[k * n + j]), d[i * n + j])) return false;
      }
    }
  return true;
}

std::string joinedValues(std::span<const QValue> vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += vs[i].str();
  }
  return out;
}

std::string moduleLabel(const LeftModule& m) {
  return m.space()->name() + "[" + joinedValues(m.values()) + "]";
}

std::string filterLabel(const PrincipalFilter& f) {
  std::string out = f.space()->name() + "{";
  for (std::size_t i = 0; i < f.generator().size(); ++i) {
    if (i) out += ",";
    out += f.space()->pointName(f.generator()[i]);
  }
  return out + "}";
}

// Tallies checks; failure descriptions are built lazily and capped.
struct Tally {
  SuiteResult res;

  explicit Tally(std::string name) { res.name = std::move(name); }

  void ok(bool good) {
    ++res.checks;
    if (!good) ++res.failures;
  }

  template <class F>
  void ok(bool good, F&& describe) {
    ++res.checks;
    if (!good) {
      ++res.failures;
      if (res.notes.size() < 8) res.notes.push_back(describe());
    }
  }

  void note(std::string s) {
    if (res.notes.size() < 16) res.notes.push_back(std::move(s));
  }
};

std::vector<PrincipalFilter> allFilters(const SpacePtr& s) {
  std::vector<PrincipalFilter> out;
  const std::size_t n = s->size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> gen;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) gen.push_back(i);
    out.emplace_back(s, std::move(gen));
  }
  return out;
}

SpacePtr onePointSpace() {
  return makeSpace("pt", Base::RPlus, {"p"}, {QValue::rational(0)});
}

std::vector<QValue> positiveTolerances(const Space& s) {
  // Positive finite occurring distances, half the least of them, and one
  // value above the largest, which together decide every threshold the
  // space can realize.
  std::set<std::string> seen;
  std::vector<QValue> eps;
  QValue least, greatest;
  bool any = false;
  for (const QValue& v : s.distances()) {
    if (v.isInf() || v.isUnit()) continue;
    if (seen.insert(v.str()).second) eps.push_back(v);
    if (!any || QValue::cmpNumeric(v, least) < 0) least = v;
    if (!any || QValue::cmpNumeric(v, greatest) > 0) greatest = v;
    any = true;
  }
  if (any) {
    eps.push_back(halve(least));
    eps.push_back(tensor(greatest, QValue::rational(1)));
  } else {
    eps.push_back(QValue::rational(1));
  }
  return eps;
}

}  // namespace

std::vector<QValue> catalogGrid() {
  return {QValue::rational(0), QValue::rational(1), QValue::rational(2), QValue::infinity()};
}

std::vector<SpacePtr> enumerateSpaces(const CatalogParams& p) {
  const std::vector<QValue> grid = p.grid.empty() ? catalogGrid() : p.grid;
  for (const QValue& g : grid)
    if (g.base() != Base::RPlus) throw BaseMismatch("enumerateSpaces: grid must be metric valued");

  std::vector<SpacePtr> out;
  for (std::size_t n = 1; n <= p.maxPoints && n < 6; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);

    std::vector<QValue> d(n * n, QValue::rational(0));
    std::size_t emitted = 0;

    // Depth-first fill with early triangle rejection on completed triples.
    std::function<void(std::size_t)> fill = [&](std::size_t slot) {
      if (slot == slots.size()) {
        if (!isCanonical(d, n)) return;
        out.push_back(makeSpace("r" + std::to_string(n) + "_" + std::to_string(emitted++),
                                Base::RPlus, pointNames(n), d));
        return;
      }
      auto [i, j] = slots[slot];
      for (const QValue& v : grid) {
        if (p.symmetricOnly && j < i && d[j * n + i] != v) continue;
        d[i * n + j] = v;
        bool fine = true;
        for (std::size_t k = 0; k < n && fine; ++k) {
          if (k == i || k == j) continue;
          // Only triangles all of whose sides are already assigned.
          auto assigned = [&](std::size_t a, std::size_t b) {
            if (a == b) return true;
            for (std::size_t t = 0; t <= slot; ++t)
              if (slots[t].first == a && slots[t].second == b) return true;
            return false;
          };
          if (assigned(i, k) && assigned(k, j) &&
              QValue::cmpNumeric(d[i * n + j], tensor(d[i * n + k], d[k * n + j])) > 0)
            fine = false;
          if (fine && assigned(i, k) && assigned(j, k) &&
              QValue::cmpNumeric(d[i * n + k], tensor(d[i * n + j], d[j * n + k])) > 0)
            fine = false;
          if (fine && assigned(k, i) && assigned(k, j) &&
              QValue::cmpNumeric(d[k * n + j], tensor(d[k * n + i], d[i * n + j])) > 0)
            fine = false;
        }
        if (fine) fill(slot + 1);
      }
      d[i * n + j] = QValue::rational(0);
    };
    fill(0);
  }
  return out;
}

std::vector<SpacePtr> enumerateBoolSpaces(std::size_t maxPoints) {
  std::vector<SpacePtr> out;
  for (std::size_t n = 1; n <= maxPoints && n < 6; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);
    std::size_t emitted = 0;
    for (std::uint64_t bits = 0; bits < (1ull << slots.size()); ++bits) {
      std::vector<QValue> d(n * n, QValue::boolean(true));
      for (std::size_t t = 0; t < slots.size(); ++t)
        d[slots[t].first * n + slots[t].second] = QValue::boolean((bits >> t) & 1);
      if (!triangleHolds(d, n)) continue;  // transitivity
      if (!isCanonical(d, n)) continue;
      out.push_back(makeSpace("b" + std::to_string(n) + "_" + std::to_string(emitted++),
                              Base::Bool, pointNames(n), d));
    }
  }
  return out;
}

SpacePtr exampleT3() {
  const auto q = [](long long v) { return QValue::rational(v); };
  return makeSpace("t3", Base::RPlus, {"a", "b", "c"},
                   {q(0), q(1), q(2), q(2), q(0), q(1), q(5), q(4), q(0)});
}

SpacePtr exampleZ2() {
  const QValue z = QValue::rational(0);
  return makeSpace("z2", Base::RPlus, {"p", "q"}, {z, z, z, z});
}

SpacePtr exampleAntichain2() {
  const QValue t = QValue::boolean(true), f = QValue::boolean(false);
  return makeSpace("antichain2", Base::Bool, {"x", "y"}, {t, f, f, t});
}

SuiteResult suiteQuantaleLaws(std::uint64_t seed) {
  Tally t("quantale-laws");
  std::mt19937_64 rng(seed);

  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<long long> numD(0, 24), denD(1, 8);
  auto sample = [&]() {
    int k = kind(rng);
    if (k == 0) return QValue::infinity();
    if (k <= 2) return QValue::rational(0);
    return QValue::rational(numD(rng), denD(rng));
  };
  auto sampleBool = [&]() { return QValue::boolean(rng() & 1); };

  for (int iter = 0; iter < 10'000; ++iter) {
    for (Base b : {Base::RPlus, Base::Bool}) {
      auto pick = [&]() { return b == Base::RPlus ? sample() : sampleBool(); };
      QValue x = pick(), y = pick(), z = pick();

      t.ok(catLeq(tensor(z, x), y) == catLeq(z, hom(x, y)), [&] {
        return "residuation failed at z=" + z.str() + " x=" + x.str() + " y=" + y.str();
      });
      t.ok(tensor(x, y) == tensor(y, x));
      t.ok(tensor(tensor(x, y), z) == tensor(x, tensor(y, z)));
      t.ok(tensor(QValue::unit(b), x) == x);
      t.ok(catLeq(x, terminal(b)));
      t.ok(catLeq(QValue::initial(b), x));

      std::array<QValue, 2> pair{y, z};
      t.ok(tensor(x, catJoin(pair, b)) ==
               catJoin(std::array<QValue, 2>{tensor(x, y), tensor(x, z)}, b),
           [&] { return "tensor does not distribute over join at x=" + x.str(); });
      // hom into a meet is the meet of homs.
      t.ok(hom(x, catMeet(pair, b)) == catMeet(std::array<QValue, 2>{hom(x, y), hom(x, z)}, b));

      if (b == Base::RPlus) {
        std::vector<QValue> fam{x, y, z};
        t.ok(checkFacR(x, std::span<const QValue>(fam).subspan(1)));
        t.ok(checkFacR(sample(), fam));
        if (auto r2 = checkFacR2(sample(), fam)) t.ok(*r2);
        if (!x.isInf()) t.ok(tensor(halve(x), halve(x)) == x);
        t.ok(catMeet(fam, b) == numericMax(fam));
        t.ok(catJoin(fam, b) == numericMin(fam));
      }
    }
  }

  std::span<const QValue> none;
  t.ok(catMeet(none, Base::RPlus) == terminal(Base::RPlus));
  t.ok(catJoin(none, Base::RPlus) == QValue::infinity());
  t.ok(catMeet(none, Base::Bool) == QValue::boolean(true));
  t.ok(catJoin(none, Base::Bool) == QValue::boolean(false));
  t.ok(hom(QValue::infinity(), QValue::rational(3)) == QValue::rational(0));
  t.ok(hom(QValue::rational(3), QValue::infinity()) == QValue::infinity());
  return t.res;
}

SuiteResult suiteFlatnessOracle(const SuiteOptions& o) {
  Tally t("flatness-oracle");
  OracleOptions opt;
  opt.budget = o.budget;
  try {
    for (const SpacePtr& s : enumerateSpaces(o.catalog)) {
      for (const LeftModule& m : enumerateGridLeftModules(s, defaultGrid(Base::RPlus))) {
        const bool closed[3] = {isP0Flat(m), isP1Flat(m), isP2Flat(m)};
        const FlatnessClass cls[3] = {FlatnessClass::P0, FlatnessClass::P1, FlatnessClass::P2};
        for (int i = 0; i < 3; ++i) {
          OracleResult r = flatnessOracle(m, cls[i], opt);
          t.ok(r.flat == closed[i], [&] {
            return flatnessClassName(cls[i]) + " disagrees on " + moduleLabel(m) + ": closed " +
                   (closed[i] ? "flat" : "not flat") + ", oracle " +
                   (r.flat ? "flat" : "not flat") +
                   (r.witness.empty() ? "" : " (" + r.witness + ")");
          });
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    t.res.budgetExceeded = true;
    t.note(e.what());
  }
  return t.res;
}

SuiteResult suiteFlatnessHierarchy(const SuiteOptions& o) {
  Tally t("flatness-hierarchy");
  for (const SpacePtr& s : enumerateSpaces(o.catalog)) {
    std::vector<LeftModule> mods = enumerateGridLeftModules(s, defaultGrid(Base::RPlus));
    std::vector<const LeftModule*> p1flat;
    for (const LeftModule& m : mods) {
      bool f0 = isP0Flat(m), f1 = isP1Flat(m), f2 = isP2Flat(m);
      t.ok(!f0 || f2, [&] { return "p0 without p2: " + moduleLabel(m); });
      t.ok(!f2 || f1, [&] { return "p2 without p1: " + moduleLabel(m); });
      // On finite carriers a directed unit set has a greatest element, so
      // the two strong classes coincide.
      t.ok(f0 == f2, [&] { return "p0/p2 split on a finite carrier: " + moduleLabel(m); });
      if (f1) p1flat.push_back(&m);
    }
    for (std::size_t a = 0; a < s->size(); ++a) {
      LeftModule y = yoneda(s, a);
      t.ok(isP0Flat(y) && isP1Flat(y) && isP2Flat(y),
           [&] { return "representable not flat: " + moduleLabel(y); });
    }
    // Pointwise join (numeric infimum) of flat presheaves stays flat.
    for (std::size_t i = 0; i < p1flat.size(); ++i)
      for (std::size_t j = i + 1; j < p1flat.size(); ++j) {
        std::vector<QValue> mix;
        mix.reserve(s->size());
        for (std::size_t x = 0; x < s->size(); ++x)
          mix.push_back(catJoin(std::array<QValue, 2>{p1flat[i]->at(x), p1flat[j]->at(x)},
                                Base::RPlus));
        t.ok(LeftModule::validTable(*s, mix), [&] {
          return "join of valid modules invalid on " + s->name();
        });
        t.ok(isP1Flat(LeftModule(s, mix)), [&] {
          return "join of flats not flat: " + moduleLabel(*p1flat[i]) + " with " +
                 moduleLabel(*p1flat[j]);
        });
      }
  }

  // Preorder side: valid tables are exactly indicator tables of lower sets,
  // and the ladder matches nonempty / directed / principal lower sets.
  for (const SpacePtr& s : enumerateBoolSpaces(std::min<std::size_t>(o.maxBoolPoints, 3))) {
    const std::size_t n = s->size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<QValue> tab;
      for (std::size_t x = 0; x < n; ++x) tab.push_back(QValue::boolean(mask & (1u << x)));
      bool lower = true;
      for (std::size_t x = 0; x < n && lower; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (s->dist(x, y).truth() && (mask & (1u << y)) && !(mask & (1u << x))) {
            lower = false;
            break;
          }
      t.ok(LeftModule::validTable(*s, tab) == lower,
           [&] { return "lower set mismatch on " + s->name(); });
      if (!lower) continue;
      LeftModule m(s, tab);
      t.ok(isP1Flat(m) == (mask != 0));
      bool directed = mask != 0;
      for (std::size_t x = 0; x < n && directed; ++x)
        for (std::size_t y = 0; y < n && directed; ++y) {
          if (!(mask & (1u << x)) || !(mask & (1u << y))) continue;
          bool bound = false;
          for (std::size_t z = 0; z < n && !bound; ++z)
            bound = (mask & (1u << z)) && s->dist(x, z).truth() && s->dist(y, z).truth();
          directed = bound;
        }
      t.ok(isP2Flat(m) == directed, [&] { return "directedness mismatch on " + moduleLabel(m); });
      bool principal = false;
      for (std::size_t z = 0; z < n && !principal; ++z) {
        if (!(mask & (1u << z))) continue;
        bool same = true;
        for (std::size_t x = 0; x < n && same; ++x)
          same = ((mask >> x) & 1) == (s->dist(x, z).truth() ? 1 : 0);
        principal = same;
      }
      t.ok(isP0Flat(m) == principal,
           [&] { return "principality mismatch on " + moduleLabel(m); });
    }
  }
  return t.res;
}

SuiteResult suiteReflection(const SuiteOptions& o) {
  Tally t("reflection");
  std::vector<SpacePtr> spaces = enumerateSpaces(o.catalog);
  for (const SpacePtr& s : enumerateBoolSpaces(std::min<std::size_t>(o.maxBoolPoints, 3)))
    spaces.push_back(s);

  for (const SpacePtr& s : spaces) {
    const Base b = s->base();
    std::vector<LeftModule> mods = enumerateGridLeftModules(s, defaultGrid(b));
    std::vector<RightModule> rmods = oracleRightModulePool(s, defaultGrid(b));
    std::vector<PrincipalFilter> filters = allFilters(s);

    for (const LeftModule& m : mods) {
      if (zeroSet(m).empty()) continue;
      LeftModule back = mMinus(filterOfModule(m));
      t.ok(moduleLeq(back, m),
           [&] { return "counit not a morphism at " + moduleLabel(m); });
      t.ok((back == m) == isP1Flat(m),
           [&] { return "counit iso misclassifies " + moduleLabel(m); });
    }

    // Both assignments are monotone.
    for (const LeftModule& m1 : mods) {
      if (zeroSet(m1).empty()) continue;
      for (const LeftModule& m2 : mods) {
        if (zeroSet(m2).empty() || !moduleLeq(m1, m2)) continue;
        std::vector<std::size_t> z1 = zeroSet(m1), z2 = zeroSet(m2);
        t.ok(std::includes(z2.begin(), z2.end(), z1.begin(), z1.end()), [&] {
          return "module morphism does not shrink unit sets: " + moduleLabel(m1) + " vs " +
                 moduleLabel(m2);
        });
      }
    }
    for (const PrincipalFilter& f1 : filters)
      for (const PrincipalFilter& f2 : filters) {
        if (!std::includes(f2.generator().begin(), f2.generator().end(), f1.generator().begin(),
                           f1.generator().end()))
          continue;
        t.ok(moduleLeq(mMinus(f1), mMinus(f2)), [&] {
          return "filter inclusion not reflected: " + filterLabel(f1) + " vs " + filterLabel(f2);
        });
      }

    for (const PrincipalFilter& f : filters) {
      t.ok(isWeaklyFlat(f), [&] { return "principal filter not weakly flat: " + filterLabel(f); });
      PrincipalFilter cl = closure(f);
      t.ok(std::includes(cl.generator().begin(), cl.generator().end(), f.generator().begin(),
                         f.generator().end()),
           [&] { return "closure lost generator points: " + filterLabel(f); });
      t.ok(closure(cl) == cl, [&] { return "closure not idempotent: " + filterLabel(f); });

      for (const LeftModule& m : mods)
        t.ok(zoiCheck(f, m), [&] {
          return "containment routes disagree: " + filterLabel(f) + " " + moduleLabel(m);
        });
      for (const RightModule& n : rmods)
        t.ok(fac22Check(f, n), [&] { return "factorization routes disagree: " + filterLabel(f); });

      if (f.generator().size() >= 2) {
        const auto& gen = f.generator();
        for (std::uint32_t split = 1; split < (1u << gen.size()) - 1; ++split) {
          if (split & 1) continue;  // fix the first point's side, halving the count
          std::vector<std::size_t> left, right;
          for (std::size_t i = 0; i < gen.size(); ++i)
            ((split >> i) & 1 ? left : right).push_back(gen[i]);
          std::array<PrincipalFilter, 2> parts{PrincipalFilter(s, left),
                                               PrincipalFilter(s, right)};
          for (std::size_t a = 0; a < s->size(); ++a) {
            std::vector<QValue> col;
            for (std::size_t x = 0; x < s->size(); ++x) col.push_back(s->dist(x, a));
            t.ok(liminfFCheck(f, parts, col),
                 [&] { return "limit decomposition failed: " + filterLabel(f); });
          }
          if (!mods.empty())
            t.ok(liminfFCheck(f, parts, mods.front().values()),
                 [&] { return "limit decomposition failed: " + filterLabel(f); });
        }
      }
    }
  }
  return t.res;
}

SuiteResult suiteFilterHierarchy(const SuiteOptions& o) {
  Tally t("filter-hierarchy");
  std::vector<SpacePtr> spaces = enumerateSpaces(o.catalog);
  for (const SpacePtr& s : enumerateBoolSpaces(std::min<std::size_t>(o.maxBoolPoints, 3)))
    spaces.push_back(s);

  for (const SpacePtr& s : spaces) {
    const bool sym = s->isSymmetric();
    std::vector<QValue> eps = s->base() == Base::RPlus ? positiveTolerances(*s)
                                                       : std::vector<QValue>{QValue::boolean(true)};
    std::vector<PrincipalFilter> filters = allFilters(s);

    for (const PrincipalFilter& f : filters) {
      const bool wf = isWeaklyFlat(f), fl = isFlat(f), cy = isCauchy(f);
      t.ok(!cy || fl, [&] { return "cauchy not flat: " + filterLabel(f); });
      t.ok(!fl || wf, [&] { return "flat not weakly flat: " + filterLabel(f); });
      t.ok(cy == (diameter(f) == QValue::unit(s->base())),
           [&] { return "diameter misclassifies " + filterLabel(f); });
      if (sym) t.ok(!fl || cy, [&] { return "symmetric flat not cauchy: " + filterLabel(f); });

      t.ok(isP1Flat(mMinus(f)),
           [&] { return "induced module of a filter not p1: " + filterLabel(f); });
      if (fl)
        t.ok(isP2Flat(mMinus(f)),
             [&] { return "induced module of a flat filter not p2: " + filterLabel(f); });

      // Tolerance-quantified definitions agree with the closed forms.
      const auto& gen = f.generator();
      bool cauchyDef = true, flatDef = true;
      for (const QValue& e : eps) {
        for (std::size_t x : gen)
          for (std::size_t y : gen)
            if (QValue::cmpNumeric(s->dist(x, y), e) > 0) cauchyDef = false;
        for (std::uint32_t sub = 1; sub < (1u << gen.size()); ++sub) {
          bool bounded = false;
          for (std::size_t yi = 0; yi < gen.size() && !bounded; ++yi) {
            bool all = true;
            for (std::size_t xi = 0; xi < gen.size() && all; ++xi)
              if ((sub >> xi) & 1)
                all = QValue::cmpNumeric(s->dist(gen[xi], gen[yi]), e) <= 0;
            bounded = all;
          }
          if (!bounded) flatDef = false;
        }
      }
      if (s->base() == Base::RPlus) {
        t.ok(cy == cauchyDef, [&] { return "cauchy routes disagree: " + filterLabel(f); });
        t.ok(fl == flatDef, [&] { return "flat routes disagree: " + filterLabel(f); });
      }

      for (std::size_t r : representatives(f))
        t.ok(converges(f, r), [&] {
          return "representative is not a limit: " + filterLabel(f) + " at " + s->pointName(r);
        });
    }

    if (sym && s->base() == Base::RPlus) {
      for (const LeftModule& m : enumerateGridLeftModules(s, defaultGrid(Base::RPlus)))
        t.ok(isP2Flat(m) == isP0Flat(m),
             [&] { return "p0/p2 differ on symmetric " + moduleLabel(m); });
      for (const PrincipalFilter& f1 : filters)
        for (const PrincipalFilter& f2 : filters) {
          if (closure(f1) != f1 || closure(f2) != f2 || !isCauchy(f1) || !isCauchy(f2)) continue;
          if (wfHomDistance(f1, f2).isUnit() && wfHomDistance(f2, f1).isUnit())
            t.ok(f1 == f2, [&] {
              return "distinct closed cauchy filters at mutual distance unit: " + filterLabel(f1) +
                     " " + filterLabel(f2);
            });
        }
    }
  }
  return t.res;
}

SuiteResult suiteWfHom(const SuiteOptions& o) {
  Tally t("filter-distance");
  std::vector<SpacePtr> spaces = enumerateSpaces(o.catalog);
  for (const SpacePtr& s : enumerateBoolSpaces(std::min<std::size_t>(o.maxBoolPoints, 3)))
    spaces.push_back(s);

  for (const SpacePtr& s : spaces) {
    std::vector<PrincipalFilter> filters = allFilters(s);
    std::vector<std::vector<QValue>> table(filters.size(),
                                           std::vector<QValue>(filters.size()));
    for (std::size_t i = 0; i < filters.size(); ++i)
      for (std::size_t j = 0; j < filters.size(); ++j) {
        QValue d;
        try {
          d = wfHomDistance(filters[i], filters[j]);
        } catch (const std::logic_error& e) {
          t.ok(false, [&] { return std::string("route mismatch: ") + e.what(); });
          d = QValue::initial(s->base());
        }
        table[i][j] = d;
        t.ok(d == presheafHom(mMinus(filters[i]), mMinus(filters[j])));
        t.ok(d == doubleLimitSupInf(filters[i], filters[j]));
        if (isCauchy(filters[i]))
          t.ok(d == doubleLimitInfSup(filters[i], filters[j]), [&] {
            return "cauchy swap failed: " + filterLabel(filters[i]) + " to " +
                   filterLabel(filters[j]);
          });
      }
    for (std::size_t i = 0; i < filters.size(); ++i) {
      t.ok(table[i][i].isUnit());
      for (std::size_t j = 0; j < filters.size(); ++j)
        for (std::size_t k = 0; k < filters.size(); ++k)
          t.ok(catLeq(tensor(table[i][j], table[j][k]), table[i][k]),
               [&] { return "filter triangle failed on " + s->name(); });
    }
  }
  return t.res;
}

SuiteResult suiteCompletionInstances() {
  Tally t("completion-instances");
  SpacePtr t3 = exampleT3(), z2 = exampleZ2(), anti = exampleAntichain2();

  // Independent recount of closed and directed subsets, straight from the
  // distance matrix.
  auto closureBits = [](const Space& s, std::uint32_t mask) {
    std::uint32_t out = 0;
    for (std::size_t z = 0; z < s.size(); ++z) {
      std::vector<QValue> ds;
      for (std::size_t y = 0; y < s.size(); ++y)
        if (mask & (1u << y)) ds.push_back(s.dist(z, y));
      if (catJoin(ds, s.base()).isUnit()) out |= 1u << z;
    }
    return out;
  };
  auto countClosed = [&](const SpacePtr& s, bool needDirected) {
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 1; mask < (1u << s->size()); ++mask) {
      std::uint32_t cl = closureBits(*s, mask);
      if (needDirected) {
        bool directed = true;
        for (std::size_t x = 0; x < s->size() && directed; ++x)
          for (std::size_t y = 0; y < s->size() && directed; ++y) {
            if (!(cl & (1u << x)) || !(cl & (1u << y))) continue;
            bool bound = false;
            for (std::size_t z = 0; z < s->size() && !bound; ++z)
              bound = (cl & (1u << z)) && s->dist(x, z).isUnit() && s->dist(y, z).isUnit();
            directed = bound;
          }
        if (!directed) continue;
      }
      seen.insert(cl);
    }
    return seen.size();
  };

  Completion t3p1 = complete(t3, CompletionNotion::P1);
  t.ok(t3p1.result->size() == 7, [&] {
    return "three point chain example: expected 7 closed classes, got " +
           std::to_string(t3p1.result->size());
  });
  t.ok(countClosed(t3, false) == 7);
  t.ok(t3p1.result->indexOf("{a,b}").has_value());
  t.ok(isComplete(t3p1.result, CompletionNotion::P1));

  Completion t3p2 = complete(t3, CompletionNotion::P2);
  t.ok(t3p2.result->size() == 3);
  t.ok(countClosed(t3, true) == 3);
  t.ok(spacesIsomorphic(t3p2.result, t3));

  t.ok(complete(z2, CompletionNotion::P1).result->size() == 1);
  t.ok(complete(z2, CompletionNotion::P2).result->size() == 1);
  t.ok(countClosed(z2, false) == 1);

  // Two incomparable elements.
  Completion free4 = complete(anti, CompletionNotion::FreeBool);
  t.ok(free4.result->size() == 4);
  {
    std::size_t down = 0;
    for (std::uint32_t mask = 0; mask < 4; ++mask) {
      bool lower = true;
      for (std::size_t x = 0; x < 2 && lower; ++x)
        for (std::size_t y = 0; y < 2; ++y)
          if (anti->dist(x, y).truth() && (mask & (1u << y)) && !(mask & (1u << x))) lower = false;
      if (lower) ++down;
    }
    t.ok(down == 4);
  }
  t.ok(complete(anti, CompletionNotion::DownsetsBool).result->size() == 3);
  Completion ideals = complete(anti, CompletionNotion::IdealsBool);
  t.ok(ideals.result->size() == 2);
  t.ok(spacesIsomorphic(ideals.result, anti));
  Completion antiDmn = dedekindMacNeille(anti);
  t.ok(antiDmn.result->size() == 4);
  t.ok(complete(anti, CompletionNotion::P0).result->size() == 2);
  {
    // Adjointness recounted from first principles over all indicator pairs.
    std::size_t adjoint = 0;
    for (std::uint32_t mm = 0; mm < 4; ++mm) {
      std::vector<QValue> mv{QValue::boolean(mm & 1), QValue::boolean(mm & 2)};
      if (!LeftModule::validTable(*anti, mv)) continue;
      LeftModule m(anti, mv);
      bool any = false;
      for (std::uint32_t nn = 0; nn < 4 && !any; ++nn) {
        std::vector<QValue> nv{QValue::boolean(nn & 1), QValue::boolean(nn & 2)};
        if (!RightModule::validTable(*anti, nv)) continue;
        any = isAdjointPair(m, RightModule(anti, nv));
      }
      if (any) ++adjoint;
    }
    t.ok(adjoint == 2, [&] { return "adjoint recount got " + std::to_string(adjoint); });
  }

  // Two element chain: both stable cuts are principal.
  SpacePtr chain2 = makeSpace("chain2", Base::Bool, {"x", "y"},
                              {QValue::boolean(true), QValue::boolean(true),
                               QValue::boolean(false), QValue::boolean(true)});
  Completion chainDmn = dedekindMacNeille(chain2);
  t.ok(chainDmn.result->size() == 2, [&] {
    return "chain cuts: expected 2, got " + std::to_string(chainDmn.result->size());
  });

  // Cross-check the cut construction against a definitional stable-set scan
  // on every small preorder.
  for (const SpacePtr& p : enumerateBoolSpaces(3)) {
    auto upOf = [&](std::uint32_t set) {
      std::uint32_t u = 0;
      for (std::size_t b = 0; b < p->size(); ++b) {
        bool all = true;
        for (std::size_t a = 0; a < p->size() && all; ++a)
          if (set & (1u << a)) all = p->dist(a, b).truth();
        if (all) u |= 1u << b;
      }
      return u;
    };
    auto downOf = [&](std::uint32_t set) {
      std::uint32_t l = 0;
      for (std::size_t a = 0; a < p->size(); ++a) {
        bool all = true;
        for (std::size_t b = 0; b < p->size() && all; ++b)
          if (set & (1u << b)) all = p->dist(a, b).truth();
        if (all) l |= 1u << a;
      }
      return l;
    };
    std::size_t stable = 0;
    for (std::uint32_t set = 0; set < (1u << p->size()); ++set)
      if (downOf(upOf(set)) == set) ++stable;
    t.ok(dedekindMacNeille(p).result->size() == stable,
         [&] { return "cut count mismatch on " + p->name(); });
  }
  return t.res;
}

SuiteResult suiteFiniteCauchyComplete(const SuiteOptions& o) {
  Tally t("cauchy-complete");
  for (const SpacePtr& s : enumerateSpaces(o.catalog)) {
    Quotient q = zeroQuotient(s);
    Completion c2 = complete(s, CompletionNotion::P2);
    Completion c0 = complete(s, CompletionNotion::P0);
    t.ok(c2.result->size() == q.space->size(),
         [&] { return "directed completion size differs from quotient on " + s->name(); });
    t.ok(spacesIsomorphic(c2.result, q.space),
         [&] { return "directed completion not the quotient on " + s->name(); });
    t.ok(spacesIsomorphic(c0.result, q.space),
         [&] { return "absolute completion not the quotient on " + s->name(); });
    t.ok(isComplete(s, CompletionNotion::P2),
         [&] { return "finite space not directed-complete: " + s->name(); });
  }
  return t.res;
}

SuiteResult suiteHausdorff(const SuiteOptions& o) {
  Tally t("hausdorff");
  CatalogParams sym = o.catalog;
  sym.symmetricOnly = true;
  for (const SpacePtr& s : enumerateSpaces(sym)) {
    SpacePtr h = hausdorffConstruction(s);
    Completion c = complete(s, CompletionNotion::P1);
    t.ok(h->size() == c.result->size(),
         [&] { return "size mismatch on " + s->name(); });
    t.ok(sameUpToNames(h, c.result), [&] {
      return "subset space differs from the completion on " + s->name();
    });
  }
  return t.res;
}

SuiteResult suiteUniversalProperty(const SuiteOptions& o) {
  Tally t("universal-property");
  std::vector<SpacePtr> targets{onePointSpace(), exampleZ2(),
                                complete(exampleT3(), CompletionNotion::P1).result};
  CatalogParams small = o.catalog;
  small.maxPoints = std::min<std::size_t>(small.maxPoints, 3);
  for (const SpacePtr& a : enumerateSpaces(small)) {
    for (CompletionNotion notion : {CompletionNotion::P1, CompletionNotion::P2}) {
      for (const SpacePtr& b : targets) {
        UniversalReport r = checkUniversalProperty(a, notion, b, o.budget);
        if (r.budgetExceeded) {
          t.res.budgetExceeded = true;
          t.note("budget ran out at " + a->name() + " into " + b->name());
          return t.res;
        }
        t.ok(r.ok(), [&] {
          return a->name() + std::string(" into ") + b->name() + " (" + notionName(notion) +
                 "): " + (r.failures.empty() ? "no detail" : r.failures.front());
        });
        t.res.checks += r.extensionsVerified;
      }
    }
  }

  // Order-theoretic instance: ideals of the antichain into the four element
  // lattice of its lower sets.
  SpacePtr anti = exampleAntichain2();
  SpacePtr lattice = complete(anti, CompletionNotion::FreeBool).result;
  UniversalReport r = checkUniversalProperty(anti, CompletionNotion::IdealsBool, lattice, o.budget);
  t.ok(r.ok() && !r.budgetExceeded,
       [&] { return r.failures.empty() ? std::string("ideal budget") : r.failures.front(); });
  return t.res;
}

SuiteResult suiteBridge(const SuiteOptions& o) {
  Tally t("bool-bridge");
  for (const SpacePtr& p : enumerateBoolSpaces(o.maxBoolPoints)) {
    t.ok(bridgeCheck(p, CompletionNotion::P1),
         [&] { return "one-sided bridge failed on " + p->name(); });
    t.ok(bridgeCheck(p, CompletionNotion::P2),
         [&] { return "directed bridge failed on " + p->name(); });
    t.ok(sameUpToNames(complete(p, CompletionNotion::P1).result,
                       complete(p, CompletionNotion::DownsetsBool).result),
         [&] { return "lower-set alias differs on " + p->name(); });
    t.ok(sameUpToNames(complete(p, CompletionNotion::P2).result,
                       complete(p, CompletionNotion::IdealsBool).result),
         [&] { return "ideal alias differs on " + p->name(); });
  }
  return t.res;
}

SuiteResult suiteConstructive(const SuiteOptions& o) {
  Tally t("constructive");
  const QValue alpha = QValue::rational(1);
  for (const SpacePtr& s : enumerateSpaces(o.catalog)) {
    t.ok(charffilFiniteCheck(s),
         [&] { return "tail filter characterization failed on " + s->name(); });

    std::vector<PrincipalFilter> filters = allFilters(s);
    std::vector<LeftModule> mods = enumerateGridLeftModules(s, defaultGrid(Base::RPlus));

    for (const PrincipalFilter& f : filters) {
      for (const LeftModule& m : mods) {
        if (moduleLeq(mMinus(f), m)) continue;
        bool good = true;
        std::string why;
        try {
          EvPeriodicSequence z = separatingSequence(f, m, alpha);
          if (!isForwardCauchy(z)) { good = false; why = "sequence not forward cauchy"; }
          else if (!filterMorphism(tailFilter(z), f)) { good = false; why = "tail escapes the filter"; }
          else if (moduleLeq(mMinus(tailFilter(z)), m)) { good = false; why = "tail stopped separating"; }
        } catch (const std::exception& e) {
          good = false;
          why = e.what();
        }
        t.ok(good, [&] {
          return "separating sequence failed for " + filterLabel(f) + " against " +
                 moduleLabel(m) + ": " + why;
        });
      }

      if (isFlat(f)) {
        for (std::size_t u : f.generator())
          for (std::size_t v : f.generator()) {
            EvPeriodicSequence s1(s, {}, {u}), s2(s, {}, {v});
            bool good = true;
            std::string why;
            try {
              EvPeriodicSequence z = interpolateSequences(s1, s2, f);
              if (!isForwardCauchy(z)) { good = false; why = "not forward cauchy"; }
              else if (!filterMorphism(tailFilter(s1), tailFilter(z))) { good = false; why = "first tail lost"; }
              else if (!filterMorphism(tailFilter(s2), tailFilter(z))) { good = false; why = "second tail lost"; }
              else if (!filterMorphism(tailFilter(z), f)) { good = false; why = "tail escapes the filter"; }
            } catch (const std::exception& e) {
              good = false;
              why = e.what();
            }
            t.ok(good, [&] {
              return "interpolation failed inside " + filterLabel(f) + ": " + why;
            });
          }
      }
    }

    // Eventually periodic data: the clique closed form against the
    // definitional pair-set route, and the tail generator.
    const std::size_t n = s->size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> cyc;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) cyc.push_back(i);
      for (int variant = 0; variant < 2; ++variant) {
        std::vector<std::size_t> pre;
        if (variant == 1) pre.push_back(0);
        EvPeriodicSequence seq(s, pre, cyc);
        bool def = true;
        for (std::size_t i : cyc)
          for (std::size_t j : cyc)
            if (!s->dist(i, j).isUnit()) def = false;
        t.ok(isForwardCauchy(seq) == def,
             [&] { return "forward cauchy routes disagree on " + s->name(); });
        t.ok(tailFilter(seq).generator() == cyc);
      }
    }
  }

  for (const SpacePtr& p : enumerateBoolSpaces(std::min<std::size_t>(o.maxBoolPoints, 3)))
    t.ok(charffilFiniteCheck(p),
         [&] { return "tail filter characterization failed on " + p->name(); });
  return t.res;
}

SuiteResult suiteCompleteness(const SuiteOptions& o) {
  Tally t("completeness");
  auto faithful = [&](const Completion& c, Tally& tt) {
    const Space& a = *c.source;
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y)
        tt.ok(c.result->dist(c.embedding(x), c.embedding(y)) == a.dist(x, y), [&] {
          return "embedding distorts " + a.name() + " under " + std::string(notionName(c.notion));
        });
  };

  for (const SpacePtr& s : enumerateSpaces(o.catalog)) {
    Completion c1 = complete(s, CompletionNotion::P1);
    Completion c2 = complete(s, CompletionNotion::P2);
    Completion c0 = complete(s, CompletionNotion::P0);
    faithful(c1, t);
    faithful(c2, t);
    faithful(c0, t);
    t.ok(isComplete(c1.result, CompletionNotion::P1),
         [&] { return "one-sided completion not complete: " + s->name(); });
    t.ok(isComplete(c2.result, CompletionNotion::P2),
         [&] { return "directed completion not complete: " + s->name(); });

    auto names = [](const Completion& c) {
      std::set<std::string> out;
      for (const CompletionPoint& p : c.points) out.insert(p.name);
      return out;
    };
    std::set<std::string> n0 = names(c0), n2 = names(c2), n1 = names(c1);
    t.ok(std::includes(n2.begin(), n2.end(), n0.begin(), n0.end()),
         [&] { return "absolute points escape the directed completion: " + s->name(); });
    t.ok(std::includes(n1.begin(), n1.end(), n2.begin(), n2.end()),
         [&] { return "directed points escape the one-sided completion: " + s->name(); });
  }

  for (const SpacePtr& p : enumerateBoolSpaces(std::min<std::size_t>(o.maxBoolPoints, 3))) {
    for (CompletionNotion n :
         {CompletionNotion::FreeBool, CompletionNotion::DownsetsBool, CompletionNotion::IdealsBool})
      faithful(complete(p, n), t);
    faithful(dedekindMacNeille(p), t);
    SpacePtr lattice = complete(p, CompletionNotion::FreeBool).result;
    if (lattice->size() <= 12)
      t.ok(isComplete(lattice, CompletionNotion::DownsetsBool),
           [&] { return "lower-set lattice not complete: " + p->name(); });
  }
  return t.res;
}

SuiteResult suiteKanExtension(const SuiteOptions& o) {
  Tally t("kan-extension");
  std::vector<SpacePtr> catalog = enumerateSpaces(o.catalog);
  std::vector<std::pair<SpacePtr, SpacePtr>> pairs{{exampleZ2(), exampleT3()},
                                                   {exampleT3(), exampleZ2()},
                                                   {exampleT3(), exampleT3()}};
  for (std::size_t i = 0; i < catalog.size() && i < 8; ++i) {
    pairs.emplace_back(catalog[i], catalog[i]);
    pairs.emplace_back(catalog[i], exampleT3());
  }

  for (const auto& [src, dst] : pairs) {
    // Yoneda embedding is isometric.
    for (std::size_t a = 0; a < src->size(); ++a)
      for (std::size_t b = 0; b < src->size(); ++b)
        t.ok(presheafHom(yoneda(src, a), yoneda(src, b)) == src->dist(a, b),
             [&] { return "embedding distance off on " + src->name(); });

    std::vector<LeftModule> mods = enumerateGridLeftModules(src, defaultGrid(Base::RPlus));
    const std::size_t nMaps = [&] {
      std::size_t total = 1;
      for (std::size_t i = 0; i < src->size(); ++i) total *= dst->size();
      return total;
    }();
    for (std::size_t code = 0; code < nMaps; ++code) {
      std::vector<std::size_t> assign(src->size());
      std::size_t rest = code;
      for (std::size_t i = 0; i < src->size(); ++i) {
        assign[i] = rest % dst->size();
        rest /= dst->size();
      }
      SpaceMap g{src, dst, assign};
      if (!isNonexpansive(g)) continue;

      for (const LeftModule& m : mods) {
        LeftModule lan = kanExtend(m, g);
        t.ok(moduleLeq(m, restrictAlong(lan, g)),
             [&] { return "adjunction unit fails for " + moduleLabel(m); });
        for (FlatnessClass cls : {FlatnessClass::P0, FlatnessClass::P1, FlatnessClass::P2}) {
          bool flat = cls == FlatnessClass::P1   ? isP1Flat(m)
                      : cls == FlatnessClass::P2 ? isP2Flat(m)
                                                 : isP0Flat(m);
          if (flat)
            t.ok(kanPreservesFlatness(m, g, cls), [&] {
              return "extension dropped " + flatnessClassName(cls) + " on " + moduleLabel(m);
            });
        }
      }

      for (const PrincipalFilter& f : allFilters(src))
        t.ok(kanExtend(mMinus(f), g) == mMinus(directImage(f, g)), [&] {
          return "image filter module mismatch for " + filterLabel(f);
        });

      // Left extensions commute with pointwise joins.
      for (std::size_t i = 0; i + 1 < mods.size() && i < 10; ++i) {
        std::vector<QValue> mix;
        for (std::size_t x = 0; x < src->size(); ++x)
          mix.push_back(
              catJoin(std::array<QValue, 2>{mods[i].at(x), mods[i + 1].at(x)}, Base::RPlus));
        LeftModule joined(src, mix);
        LeftModule lhs = kanExtend(joined, g);
        LeftModule a = kanExtend(mods[i], g), b = kanExtend(mods[i + 1], g);
        std::vector<QValue> rhs;
        for (std::size_t x = 0; x < dst->size(); ++x)
          rhs.push_back(catJoin(std::array<QValue, 2>{a.at(x), b.at(x)}, Base::RPlus));
        t.ok(lhs.values() == rhs, [&] { return "extension not cocontinuous on " + src->name(); });
      }
    }

    // Identity extension is the identity.
    std::vector<std::size_t> idAssign(src->size());
    for (std::size_t i = 0; i < src->size(); ++i) idAssign[i] = i;
    SpaceMap idMap{src, src, idAssign};
    for (const LeftModule& m : mods)
      t.ok(kanExtend(m, idMap) == m);

    // Adjoint route to the presheaf distance, where it exists.
    for (const LeftModule& m : mods) {
      if (!isP0Flat(m)) continue;
      for (const LeftModule& n : mods)
        t.ok(homViaAdjoint(m, n) == presheafHom(m, n),
             [&] { return "adjoint route differs for " + moduleLabel(m); });
    }
  }
  return t.res;
}

SuiteResult suiteCommutation(const SuiteOptions&) {
  Tally t("commutation");
  const QValue q0 = QValue::rational(0), q1 = QValue::rational(1), q2 = QValue::rational(2);
  SpacePtr a = makeSpace("base2", Base::RPlus, {"a", "b"}, {q0, q1, q2, q0});
  std::vector<SpacePtr> indexes{
      makeSpace("idx_sym", Base::RPlus, {"k", "l"}, {q0, q1, q1, q0}),
      makeSpace("idx_one", Base::RPlus, {"k", "l"}, {q0, q1, QValue::infinity(), q0})};
  std::vector<QValue> grid = defaultGrid(Base::RPlus);

  for (const SpacePtr& k : indexes) {
    std::vector<LeftModule> weightsA = enumerateGridLeftModules(a, grid);
    std::vector<RightModule> weightsK = enumerateGridRightModules(k, grid);

    std::vector<Diagram> diagrams;
    const std::size_t cells = k->size() * a->size();
    std::vector<std::size_t> pick(cells, 0);
    while (true) {
      std::vector<QValue> g;
      g.reserve(cells);
      for (std::size_t c = 0; c < cells; ++c) g.push_back(grid[pick[c]]);
      try {
        diagrams.emplace_back(k, a, g);
      } catch (const InvalidModule&) {
      }
      std::size_t c = 0;
      while (c < cells && ++pick[c] == grid.size()) pick[c++] = 0;
      if (c == cells) break;
    }

    for (const LeftModule& f : weightsA)
      for (const RightModule& p : weightsK) {
        Weight pw(k, true, p.values());
        for (const Diagram& g : diagrams) {
          // Limit first, through the structured api.
          std::vector<QValue> limA;
          for (std::size_t x = 0; x < a->size(); ++x) {
            std::vector<QValue> col;
            for (std::size_t kk = 0; kk < k->size(); ++kk) col.push_back(g.at(kk, x));
            limA.push_back(weightedLimit(pw, col));
          }
          QValue viaLimit = weightedColimitValues(f.values(), limA, Base::RPlus);

          // Colimit first, through the raw fold.
          std::vector<QValue> colK;
          for (std::size_t kk = 0; kk < k->size(); ++kk) {
            std::vector<QValue> row;
            for (std::size_t x = 0; x < a->size(); ++x) row.push_back(g.at(kk, x));
            colK.push_back(weightedColimitValues(f.values(), row, Base::RPlus));
          }
          QValue viaColimit = weightedLimitValues(p.values(), colK, Base::RPlus);

          bool commutes = viaLimit == viaColimit;
          if (isP2Flat(f))
            t.ok(commutes, [&] {
              return "flat weight failed to commute: f=" + joinedValues(f.values()) +
                     " p=" + joinedValues(p.values()) + " g=" + joinedValues(g.grid);
            });
          // Representable limit weights commute against every colimit.
          bool representable = false;
          for (std::size_t kk = 0; kk < k->size() && !representable; ++kk)
            representable = p.values() == coyoneda(k, kk).values();
          if (representable)
            t.ok(commutes, [&] {
              return "representable weight failed to commute: f=" + joinedValues(f.values()) +
                     " p=" + joinedValues(p.values());
            });
        }
      }
  }
  return t.res;
}

SuiteResult suiteCoflat(const SuiteOptions& o) {
  Tally t("coflat");
  OracleOptions opt;
  opt.budget = o.budget;

  SpacePtr pt = onePointSpace();
  CoflatReport unitRep = coflatOracle(Weight(pt, true, {QValue::rational(0)}), opt);
  t.ok(unitRep.allPreserved && unitRep.conicalPreserved,
       [&] { return "unit weight not coflat: " + unitRep.witness; });
  CoflatReport infRep = coflatOracle(Weight(pt, true, {QValue::infinity()}), opt);
  t.ok(infRep.conicalPreserved,
       [&] { return "initial weight broke a conical sample: " + infRep.witness; });

  const QValue q0 = QValue::rational(0), q1 = QValue::rational(1);
  SpacePtr two = makeSpace("pair", Base::RPlus, {"k", "l"}, {q0, q1, q1, q0});
  for (std::size_t p = 0; p < two->size(); ++p) {
    CoflatReport rep = coflatOracle(Weight(two, true, coyoneda(two, p).values()), opt);
    t.ok(rep.allPreserved,
         [&] { return "representable weight not coflat: " + rep.witness; });
  }
  return t.res;
}

std::vector<SuiteResult> runAllSuites(const SuiteOptions& o) {
  std::vector<SuiteResult> out;
  out.push_back(suiteQuantaleLaws(o.catalog.seed));
  out.push_back(suiteFlatnessOracle(o));
  out.push_back(suiteFlatnessHierarchy(o));
  out.push_back(suiteReflection(o));
  out.push_back(suiteFilterHierarchy(o));
  out.push_back(suiteWfHom(o));
  out.push_back(suiteCompletionInstances());
  out.push_back(suiteFiniteCauchyComplete(o));
  out.push_back(suiteHausdorff(o));
  out.push_back(suiteUniversalProperty(o));
  out.push_back(suiteBridge(o));
  out.push_back(suiteConstructive(o));
  out.push_back(suiteCompleteness(o));
  out.push_back(suiteKanExtension(o));
  out.push_back(suiteCommutation(o));
  out.push_back(suiteCoflat(o));
  return out;
}

}  // namespace vcat
