#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>

#include "doctest.h"
#include "vcat/catalog.hpp"
#include "vcat/flatness.hpp"

using namespace vcat;

namespace {

std::vector<QValue> vals(std::initializer_list<long long> xs) {
  std::vector<QValue> out;
  for (long long x : xs) out.push_back(QValue::rational(x));
  return out;
}

}  // namespace

TEST_CASE("closed forms on the three point example") {
  SpacePtr t3 = exampleT3();
  LeftModule m(t3, vals({0, 0, 4}));

  CHECK(zeroSet(m) == std::vector<std::size_t>{0, 1});
  CHECK(isP1Flat(m));
  CHECK(!isP2Flat(m));
  CHECK(!isP0Flat(m));

  // Unit set {a} but too small beyond it.
  LeftModule n(t3, vals({0, 1, 1}));
  CHECK(!isP1Flat(n));

  for (std::size_t a = 0; a < 3; ++a) {
    LeftModule y = yoneda(t3, a);
    CHECK(isP1Flat(y));
    CHECK(isP2Flat(y));
    CHECK(isP0Flat(y));
  }
}

TEST_CASE("single preservation probes") {
  SpacePtr t3 = exampleT3();
  LeftModule m(t3, vals({0, 0, 4}));

  CHECK(preservesTerminal(m));
  CHECK(!preservesTerminal(LeftModule(t3, vals({1, 2, 3}))));
  CHECK(preservesCotensor(m, QValue::rational(1), coyoneda(t3, 0)));

  std::array<RightModule, 2> pair{coyoneda(t3, 0), coyoneda(t3, 1)};
  CHECK(!preservesFiniteMeet(m, pair));

  LeftModule yb = yoneda(t3, 1);
  CHECK(preservesFiniteMeet(yb, pair));
}

TEST_CASE("oracle agrees with the closed forms here") {
  SpacePtr t3 = exampleT3();
  OracleOptions opt;

  LeftModule m(t3, vals({0, 0, 4}));
  OracleResult p1 = flatnessOracle(m, FlatnessClass::P1, opt);
  CHECK(p1.flat);
  CHECK(p1.checks > 0);

  OracleResult p2 = flatnessOracle(m, FlatnessClass::P2, opt);
  CHECK(!p2.flat);
  CHECK(!p2.witness.empty());

  OracleResult n1 = flatnessOracle(LeftModule(t3, vals({0, 1, 1})), FlatnessClass::P1, opt);
  CHECK(!n1.flat);
  CHECK(!n1.witness.empty());

  OracleResult yb = flatnessOracle(yoneda(t3, 1), FlatnessClass::P0, opt);
  CHECK(yb.flat);
}

TEST_CASE("oracle budget is enforced") {
  OracleOptions opt;
  opt.budget = 1;
  CHECK_THROWS_AS(flatnessOracle(yoneda(exampleT3(), 0), FlatnessClass::P2, opt), BudgetExceeded);
}

TEST_CASE("grids and module pools") {
  CHECK(defaultGrid(Base::RPlus).size() == 5);
  CHECK(defaultGrid(Base::Bool).size() == 2);

  // Mutual zero distances force constant tables.
  SpacePtr z2 = exampleZ2();
  std::vector<QValue> grid{QValue::rational(0), QValue::rational(1)};
  CHECK(enumerateGridLeftModules(z2, grid).size() == 2);

  SpacePtr t3 = exampleT3();
  std::vector<RightModule> pool = oracleRightModulePool(t3, defaultGrid(Base::RPlus));
  for (std::size_t a = 0; a < 3; ++a) {
    bool found = false;
    for (const RightModule& n : pool) found = found || n.values() == coyoneda(t3, a).values();
    CHECK(found);
  }
}

TEST_CASE("kan extension preserves flatness classes") {
  SpacePtr t3 = exampleT3(), z2 = exampleZ2();
  SpaceMap collapse{t3, z2, {0, 0, 0}};
  CHECK(kanPreservesFlatness(yoneda(t3, 1), collapse, FlatnessClass::P2));
  CHECK(kanPreservesFlatness(LeftModule(t3, vals({0, 0, 4})), collapse, FlatnessClass::P1));
  CHECK_THROWS_AS(kanPreservesFlatness(LeftModule(t3, vals({0, 1, 1})), collapse,
                                       FlatnessClass::P1),
                  std::invalid_argument);
}

TEST_CASE("coflat sampling") {
  SpacePtr pt = makeSpace("pt", Base::RPlus, {"p"}, {QValue::rational(0)});
  OracleOptions opt;
  CoflatReport unitRep = coflatOracle(Weight(pt, true, {QValue::rational(0)}), opt);
  CHECK(unitRep.allPreserved);
  CHECK(unitRep.conicalPreserved);
  CoflatReport infRep = coflatOracle(Weight(pt, true, {QValue::infinity()}), opt);
  CHECK(infRep.conicalPreserved);
}
