#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <vector>

#include "doctest.h"
#include "vcat/catalog.hpp"
#include "vcat/filters.hpp"

using namespace vcat;

namespace {

std::vector<QValue> vals(std::initializer_list<long long> xs) {
  std::vector<QValue> out;
  for (long long x : xs) out.push_back(QValue::rational(x));
  return out;
}

}  // namespace

TEST_CASE("principal filters normalize their generator") {
  SpacePtr t3 = exampleT3();
  PrincipalFilter f(t3, {1, 0, 1});
  CHECK(f.generator() == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(PrincipalFilter(t3, {}), std::invalid_argument);
  CHECK_THROWS_AS(PrincipalFilter(t3, {7}), std::invalid_argument);
}

TEST_CASE("filtered limits collapse onto the generator") {
  SpacePtr t3 = exampleT3();
  PrincipalFilter ab(t3, {0, 1});
  std::vector<QValue> colC{t3->dist(0, 2), t3->dist(1, 2), t3->dist(2, 2)};
  CHECK(limPlus(ab, colC) == QValue::rational(2));
  CHECK(limMinus(ab, colC) == QValue::rational(1));

  CHECK(mMinus(ab).values() == vals({0, 0, 4}));
  CHECK(mPlus(ab).values() == vals({1, 2, 5}));
}

TEST_CASE("sublevel sets and induced filters") {
  SpacePtr t3 = exampleT3();
  LeftModule m(t3, vals({0, 0, 4}));
  CHECK(gamma(m, QValue::rational(1)) == std::vector<std::size_t>{0, 1});
  CHECK(gamma(yoneda(t3, 1), QValue::rational(1, 2)) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(gamma(m, QValue::rational(0)), PreconditionError);
  CHECK_THROWS_AS(gamma(m, QValue::boolean(true)), BaseMismatch);

  CHECK(filterOfModule(m).generator() == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(filterOfModule(LeftModule(t3, vals({1, 2, 3}))), EmptyKernel);
}

TEST_CASE("flatness ladder on filters") {
  SpacePtr t3 = exampleT3();
  PrincipalFilter ab(t3, {0, 1}), b(t3, {1});

  CHECK(isWeaklyFlat(ab));
  CHECK(!isFlat(ab));
  CHECK(!isCauchy(ab));
  CHECK(diameter(ab) == QValue::rational(2));

  CHECK(isFlat(b));
  CHECK(isCauchy(b));
  CHECK(diameter(b) == QValue::rational(0));

  SpacePtr z2 = exampleZ2();
  PrincipalFilter pq(z2, {0, 1});
  CHECK(isCauchy(pq));
}

TEST_CASE("closures and filter morphisms") {
  SpacePtr t3 = exampleT3(), z2 = exampleZ2();
  CHECK(closure(PrincipalFilter(t3, {1})).generator() == std::vector<std::size_t>{1});
  CHECK(closure(PrincipalFilter(z2, {0})).generator() == std::vector<std::size_t>{0, 1});

  CHECK(filterMorphism(PrincipalFilter(t3, {0}), PrincipalFilter(t3, {0, 1})));
  CHECK(!filterMorphism(PrincipalFilter(t3, {2}), PrincipalFilter(t3, {1})));
}

TEST_CASE("containment and factorization identities hold both ways") {
  SpacePtr t3 = exampleT3();
  LeftModule m(t3, vals({0, 0, 4}));
  for (std::uint32_t mask = 1; mask < 8; ++mask) {
    std::vector<std::size_t> gen;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1u << i)) gen.push_back(i);
    PrincipalFilter f(t3, gen);
    CHECK(zoiCheck(f, m));
    CHECK(fac22Check(f, coyoneda(t3, 0)));
  }
}

TEST_CASE("representatives and convergence") {
  SpacePtr t3 = exampleT3(), z2 = exampleZ2();
  CHECK(representatives(PrincipalFilter(t3, {0, 1})).empty());
  CHECK(representatives(PrincipalFilter(t3, {1})) == std::vector<std::size_t>{1});
  CHECK(representatives(PrincipalFilter(z2, {0, 1})) == std::vector<std::size_t>{0, 1});

  CHECK(converges(PrincipalFilter(t3, {1}), 1));
  CHECK(!converges(PrincipalFilter(t3, {0, 1}), 1));
  CHECK(converges(PrincipalFilter(z2, {0}), 1));
}

TEST_CASE("images, joins and the limit decomposition") {
  SpacePtr t3 = exampleT3(), z2 = exampleZ2();
  SpaceMap collapse{t3, z2, {0, 0, 0}};
  CHECK(directImage(PrincipalFilter(t3, {0, 1}), collapse).generator() ==
        std::vector<std::size_t>{0});

  std::array<PrincipalFilter, 2> parts{PrincipalFilter(t3, {0}), PrincipalFilter(t3, {1})};
  PrincipalFilter sup = supFilters(parts);
  CHECK(sup.generator() == std::vector<std::size_t>{0, 1});
  CHECK(colimitClosed(parts).generator() == std::vector<std::size_t>{0, 1});

  std::vector<QValue> colC{t3->dist(0, 2), t3->dist(1, 2), t3->dist(2, 2)};
  CHECK(liminfFCheck(sup, parts, colC));
}

TEST_CASE("every proper filter on a small carrier is principal") {
  // Families of subsets of a 4 element carrier, encoded as bitmasks over
  // the 16 subsets. Nonempty, upward closed, meet closed families must be
  // exactly the supersets of their intersection.
  const int kSets = 16;
  for (std::uint32_t fam = 1; fam < (1u << kSets); ++fam) {
    bool upward = true, meets = true;
    for (int s = 0; s < kSets && upward; ++s) {
      if (!(fam & (1u << s))) continue;
      for (int sup = 0; sup < kSets; ++sup)
        if ((s & sup) == s && !(fam & (1u << sup))) upward = false;
    }
    for (int s = 0; s < kSets && meets; ++s)
      for (int u = 0; u < kSets && meets; ++u)
        if ((fam & (1u << s)) && (fam & (1u << u)) && !(fam & (1u << (s & u)))) meets = false;
    if (!upward || !meets) continue;

    int core = 15;
    for (int s = 0; s < kSets; ++s)
      if (fam & (1u << s)) core &= s;
    for (int s = 0; s < kSets; ++s) {
      bool member = (fam & (1u << s)) != 0;
      bool containsCore = (core & s) == core;
      CHECK(member == containsCore);
    }
  }
}

TEST_CASE("eventually periodic sequences") {
  SpacePtr t3 = exampleT3();
  EvPeriodicSequence swing(t3, {2}, {0, 1});
  CHECK(!isForwardCauchy(swing));
  CHECK(tailFilter(swing).generator() == std::vector<std::size_t>{0, 1});

  EvPeriodicSequence settle(t3, {0}, {1});
  CHECK(isForwardCauchy(settle));
  CHECK(tailFilter(settle).generator() == std::vector<std::size_t>{1});

  CHECK_THROWS_AS(EvPeriodicSequence(t3, {}, {}), std::invalid_argument);
}

TEST_CASE("separating sequences witness failed domination") {
  SpacePtr t3 = exampleT3();
  PrincipalFilter ab(t3, {0, 1});
  LeftModule yb = yoneda(t3, 1);
  REQUIRE(!moduleLeq(mMinus(ab), yb));

  EvPeriodicSequence z = separatingSequence(ab, yb, QValue::rational(1));
  CHECK(isForwardCauchy(z));
  CHECK(filterMorphism(tailFilter(z), ab));
  CHECK(!moduleLeq(mMinus(tailFilter(z)), yb));

  CHECK_THROWS_AS(separatingSequence(PrincipalFilter(t3, {1}), yb, QValue::rational(1)),
                  PreconditionError);
}

TEST_CASE("interpolation inside a flat filter") {
  SpacePtr z2 = exampleZ2();
  PrincipalFilter pq(z2, {0, 1});
  REQUIRE(isFlat(pq));
  EvPeriodicSequence s1(z2, {}, {0}), s2(z2, {}, {1});
  EvPeriodicSequence z = interpolateSequences(s1, s2, pq);
  CHECK(isForwardCauchy(z));
  CHECK(filterMorphism(tailFilter(s1), tailFilter(z)));
  CHECK(filterMorphism(tailFilter(s2), tailFilter(z)));
  CHECK(filterMorphism(tailFilter(z), pq));
}

TEST_CASE("tail filters characterize closed flat filters") {
  CHECK(charffilFiniteCheck(exampleT3()));
  CHECK(charffilFiniteCheck(exampleZ2()));
}

TEST_CASE("filter distances") {
  SpacePtr t3 = exampleT3();
  PrincipalFilter ab(t3, {0, 1}), b(t3, {1});
  CHECK(wfHomDistance(ab, b) == QValue::rational(1));
  CHECK(wfHomDistance(b, ab) == QValue::rational(0));
  CHECK(doubleLimitSupInf(ab, b) == QValue::rational(1));
  CHECK(doubleLimitInfSup(b, ab) == QValue::rational(0));
}

TEST_CASE("a uniformly small filter class excludes neighborhood filters") {
  // One zero arrow between distinct points: the neighborhood filter of x
  // converges to x, yet its upper module does not vanish, so requiring
  // that would reject it.
  SpacePtr s = makeSpace("oneway", Base::RPlus, {"x", "y"},
                         {QValue::rational(0), QValue::rational(1), QValue::rational(0),
                          QValue::rational(0)});
  PrincipalFilter vx = filterOfModule(yoneda(s, 0));
  CHECK(vx.generator() == std::vector<std::size_t>{0, 1});
  CHECK(isWeaklyFlat(vx));
  CHECK(converges(vx, 0));
  QValue upper = limPlus(vx, mPlus(vx).values());
  CHECK(!upper.isUnit());
}
