#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>

#include "doctest.h"
#include "vcat/catalog.hpp"
#include "vcat/modules.hpp"
#include "vcat/space.hpp"

using namespace vcat;

namespace {

const QValue q0 = QValue::rational(0);

std::vector<QValue> vals(std::initializer_list<long long> xs) {
  std::vector<QValue> out;
  for (long long x : xs) out.push_back(QValue::rational(x));
  return out;
}

}  // namespace

TEST_CASE("space construction and validation") {
  SpacePtr t3 = exampleT3();
  CHECK(t3->size() == 3);
  CHECK(t3->lawsHold());
  CHECK(validateSpace(*t3).empty());
  CHECK(t3->dist(0, 1) == QValue::rational(1));
  CHECK(t3->dist(2, 0) == QValue::rational(5));
  CHECK(t3->indexOf("b") == 1);
  CHECK(!t3->indexOf("zz").has_value());
  CHECK(!t3->isSymmetric());
  CHECK(exampleZ2()->isSymmetric());

  SpacePtr bad = makeSpace("bad", Base::RPlus, {"a", "b"},
                           {QValue::rational(1), q0, q0, q0});
  CHECK(!bad->lawsHold());
  CHECK(!validateSpace(*bad).empty());

  // Triangle violation: the direct hop beats the detour.
  SpacePtr tri = makeSpace("tri", Base::RPlus, {"a", "b", "c"},
                           {q0, QValue::rational(1), QValue::rational(9), QValue::rational(1), q0,
                            QValue::rational(1), QValue::rational(9), QValue::rational(1), q0});
  CHECK(!tri->lawsHold());

  CHECK_THROWS_AS(makeSpace("dup", Base::RPlus, {"a", "a"}, {q0, q0, q0, q0}),
                  std::invalid_argument);
}

TEST_CASE("unit isomorphism and the preorder shadow") {
  SpacePtr z2 = exampleZ2(), t3 = exampleT3();
  CHECK(unitIsomorphic(*z2, 0, 1));
  CHECK(!unitIsomorphic(*t3, 0, 1));

  SpacePtr pre = underlyingPreorder(*t3);
  CHECK(pre->base() == Base::Bool);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(pre->dist(i, j).truth() == (i == j));
  CHECK(sameUpToNames(underlyingPreorder(*pre), pre));
}

TEST_CASE("space maps and sameSpace") {
  SpacePtr t3 = exampleT3();
  SpaceMap constB{t3, t3, {1, 1, 1}};
  CHECK(isNonexpansive(constB));
  SpaceMap swap{t3, t3, {1, 0, 2}};
  CHECK(!isNonexpansive(swap));  // d(b, a) = 2 exceeds d(a, b) = 1
  CHECK(validateMap(SpaceMap{t3, t3, {0, 1}}).size() > 0);

  CHECK(sameSpace(t3, t3));
  CHECK(sameSpace(t3, exampleT3()));
  CHECK(!sameSpace(t3, exampleZ2()));
}

TEST_CASE("modules validate their law") {
  SpacePtr t3 = exampleT3();
  CHECK(LeftModule::validTable(*t3, vals({0, 0, 4})));
  CHECK(!LeftModule::validTable(*t3, vals({0, 3, 0})));
  CHECK_THROWS_AS(LeftModule(t3, vals({0, 3, 0})), InvalidModule);

  LeftModule yb = yoneda(t3, 1);
  CHECK(yb.values() == vals({1, 0, 4}));
  RightModule cb = coyoneda(t3, 1);
  CHECK(cb.values() == vals({2, 0, 1}));
}

TEST_CASE("presheaf distances satisfy the embedding identity") {
  SpacePtr t3 = exampleT3();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(presheafHom(yoneda(t3, a), yoneda(t3, b)) == t3->dist(a, b));

  LeftModule m(t3, vals({0, 0, 4}));
  CHECK(presheafHom(m, yoneda(t3, 1)) == QValue::rational(1));
  CHECK(presheafHom(yoneda(t3, 1), m) == QValue::rational(0));
  CHECK(moduleLeq(yoneda(t3, 1), m));
  CHECK(!moduleLeq(m, yoneda(t3, 1)));
}

TEST_CASE("composites and adjoints") {
  SpacePtr t3 = exampleT3();
  LeftModule m(t3, vals({0, 0, 4}));
  CHECK(composeModules(m, coyoneda(t3, 0)) == QValue::rational(0));

  RightModule cand = rightAdjointCandidate(m);
  CHECK(cand.values() == vals({2, 1, 2}));
  CHECK(!isAdjointPair(m, cand));
  CHECK(isAdjointPair(yoneda(t3, 1), coyoneda(t3, 1)));

  CHECK(homViaAdjoint(yoneda(t3, 1), yoneda(t3, 0)) == QValue::rational(2));
  CHECK_THROWS_AS(homViaAdjoint(m, yoneda(t3, 0)), NotLeftAdjoint);
}

TEST_CASE("weighted limits and colimits") {
  std::span<const QValue> none;
  CHECK(weightedLimitValues(none, none, Base::RPlus) == q0);
  CHECK(weightedColimitValues(none, none, Base::RPlus).isInf());

  SpacePtr idx = makeSpace("idx", Base::RPlus, {"k", "l"},
                           {q0, QValue::rational(1), QValue::rational(1), q0});
  Weight p(idx, true, vals({0, 1}));
  std::vector<QValue> column = vals({2, 3});
  CHECK(weightedLimit(p, column) == QValue::rational(2));
  CHECK(weightedColimit(Weight(idx, false, vals({0, 1})), column) == QValue::rational(2));

  CHECK_THROWS_AS(Weight(idx, true, vals({0, 9})), InvalidModule);
  CHECK_THROWS_AS(Diagram(idx, exampleT3(),
                          vals({0, 0, 0, 9, 9, 9})),
                  InvalidModule);
}

TEST_CASE("kan extension and restriction") {
  SpacePtr t3 = exampleT3(), z2 = exampleZ2();
  SpaceMap constB{t3, t3, {1, 1, 1}};
  LeftModule ra = restrictAlong(yoneda(t3, 0), constB);
  CHECK(ra.values() == vals({2, 2, 2}));

  SpaceMap collapse{t3, z2, {0, 0, 0}};
  CHECK(isNonexpansive(collapse));
  LeftModule lan = kanExtend(LeftModule(t3, vals({0, 0, 4})), collapse);
  CHECK(lan.values() == vals({0, 0}));

  // Unit of the extension adjunction.
  LeftModule m(t3, vals({0, 0, 4}));
  CHECK(moduleLeq(m, restrictAlong(kanExtend(m, constB), constB)));
}

TEST_CASE("lan along yoneda is the module composite") {
  SpacePtr t3 = exampleT3();
  LeftModule m(t3, vals({0, 0, 4}));
  for (std::size_t a = 0; a < 3; ++a)
    CHECK(lanYonedaApply(m, coyoneda(t3, a)) == composeModules(m, coyoneda(t3, a)));
}
