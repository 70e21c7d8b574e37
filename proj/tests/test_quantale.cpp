#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <vector>

#include "doctest.h"
#include "vcat/quantale.hpp"

using namespace vcat;

namespace {

std::vector<QValue> metricGrid() {
  return {QValue::rational(0), QValue::rational(1, 3), QValue::rational(1),
          QValue::rational(7, 2), QValue::infinity()};
}

}  // namespace

TEST_CASE("rationals are exact and reduced") {
  QValue x = QValue::rational(2, 6);
  CHECK(x.num() == 1);
  CHECK(x.den() == 3);
  CHECK(tensor(QValue::rational(1, 3), QValue::rational(1, 6)) == QValue::rational(1, 2));
  CHECK(QValue::rational(3, 2).str() == "3/2");
  CHECK(QValue::rational(4, 2).str() == "2");
  CHECK(QValue::infinity().str() == "inf");
  CHECK(QValue::boolean(true).str() == "1");
  CHECK_THROWS_AS(QValue::rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(QValue::rational(-1, 2), std::invalid_argument);
}

TEST_CASE("arithmetic overflows loudly instead of wrapping") {
  const long long big = 4'611'686'018'427'387'904LL;  // 2^62
  QValue huge = QValue::rational(big);
  CHECK_THROWS_AS(tensor(huge, huge), Overflow);
  CHECK(tensor(huge, QValue::infinity()).isInf());
}

TEST_CASE("hom is the residual of tensor") {
  CHECK(hom(QValue::rational(0), QValue::rational(5)) == QValue::rational(5));
  CHECK(hom(QValue::rational(5), QValue::rational(0)) == QValue::rational(0));
  CHECK(hom(QValue::rational(3), QValue::rational(5)) == QValue::rational(2));
  CHECK(hom(QValue::infinity(), QValue::rational(3)) == QValue::rational(0));
  CHECK(hom(QValue::infinity(), QValue::infinity()) == QValue::rational(0));
  CHECK(hom(QValue::rational(3), QValue::infinity()).isInf());

  for (const QValue& z : metricGrid())
    for (const QValue& x : metricGrid())
      for (const QValue& y : metricGrid())
        CHECK(catLeq(tensor(z, x), y) == catLeq(z, hom(x, y)));

  for (bool zb : {false, true})
    for (bool xb : {false, true})
      for (bool yb : {false, true}) {
        QValue z = QValue::boolean(zb), x = QValue::boolean(xb), y = QValue::boolean(yb);
        CHECK(catLeq(tensor(z, x), y) == catLeq(z, hom(x, y)));
      }
}

TEST_CASE("meet and join respect the reversed metric order") {
  std::vector<QValue> xs{QValue::rational(2), QValue::rational(1, 2), QValue::rational(3)};
  CHECK(catMeet(xs, Base::RPlus) == QValue::rational(3));
  CHECK(catJoin(xs, Base::RPlus) == QValue::rational(1, 2));
  CHECK(numericMax(xs) == QValue::rational(3));
  CHECK(numericMin(xs) == QValue::rational(1, 2));

  std::span<const QValue> none;
  CHECK(catMeet(none, Base::RPlus) == QValue::rational(0));
  CHECK(catJoin(none, Base::RPlus).isInf());
  CHECK(catMeet(none, Base::Bool) == QValue::boolean(true));
  CHECK(catJoin(none, Base::Bool) == QValue::boolean(false));
  CHECK_THROWS_AS(numericMin(none), std::invalid_argument);
  CHECK_THROWS_AS(numericMax(none), std::invalid_argument);

  // The tensor distributes over joins.
  for (const QValue& v : metricGrid())
    for (const QValue& a : metricGrid())
      for (const QValue& b : metricGrid()) {
        std::array<QValue, 2> pair{a, b};
        std::array<QValue, 2> tensored{tensor(v, a), tensor(v, b)};
        CHECK(tensor(v, catJoin(pair, Base::RPlus)) == catJoin(tensored, Base::RPlus));
      }
}

TEST_CASE("factorization through infima and suprema") {
  std::vector<QValue> pair{QValue::rational(3), QValue::rational(5)};
  CHECK(checkFacR(QValue::rational(2), pair));
  CHECK(hom(QValue::rational(2), QValue::rational(3)) == QValue::rational(1));

  auto r2 = checkFacR2(QValue::rational(5), pair);
  REQUIRE(r2.has_value());
  CHECK(*r2);

  std::vector<QValue> withInf{QValue::rational(2), QValue::infinity()};
  auto r2inf = checkFacR2(QValue::rational(1), withInf);
  REQUIRE(r2inf.has_value());
  CHECK(*r2inf);

  for (const QValue& v : metricGrid())
    for (const QValue& a : metricGrid())
      for (const QValue& b : metricGrid()) {
        std::vector<QValue> fam{a, b};
        CHECK(checkFacR(v, fam));
        if (auto r = checkFacR2(v, fam)) CHECK(*r);
      }

  std::vector<QValue> empty;
  CHECK_THROWS_AS(checkFacR(QValue::rational(1), empty), std::invalid_argument);
}

TEST_CASE("halving is exact") {
  CHECK(halve(QValue::rational(1, 3)) == QValue::rational(1, 6));
  CHECK(halve(QValue::infinity()).isInf());
  QValue x = QValue::rational(7, 2);
  CHECK(tensor(halve(x), halve(x)) == x);
  CHECK_THROWS_AS(halve(QValue::boolean(true)), BaseMismatch);
}

TEST_CASE("base mixing is rejected") {
  CHECK_THROWS_AS(tensor(QValue::rational(1), QValue::boolean(true)), BaseMismatch);
  CHECK_THROWS_AS(hom(QValue::boolean(false), QValue::rational(0)), BaseMismatch);
}

TEST_CASE("law harness rejects a wrong residual") {
  // A plausible but wrong residual: forgets that an infinite source admits
  // every arrow. The adjointness sweep must catch it.
  auto brokenHom = [](const QValue& x, const QValue& y) {
    if (y.isInf() || x.isInf()) return QValue::infinity();
    return hom(x, y);
  };
  bool caught = false;
  for (const QValue& z : metricGrid())
    for (const QValue& x : metricGrid())
      for (const QValue& y : metricGrid())
        if (catLeq(tensor(z, x), y) != catLeq(z, brokenHom(x, y))) caught = true;
  CHECK(caught);
}
