#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>

#include "doctest.h"
#include "vcat/catalog.hpp"
#include "vcat/completion.hpp"

using namespace vcat;

namespace {

std::size_t pointNamed(const SpacePtr& s, const std::string& name) {
  for (std::size_t i = 0; i < s->size(); ++i)
    if (s->pointName(i) == name) return i;
  FAIL("no point named ", name, " in ", s->name());
  return 0;
}

SpacePtr onePoint() {
  return makeSpace("pt", Base::RPlus, {"*"}, {QValue::rational(0)});
}

SpacePtr chain2Bool() {
  return makeSpace("chain2", Base::Bool, {"a", "b"},
                   {QValue::boolean(true), QValue::boolean(true), QValue::boolean(false),
                    QValue::boolean(true)});
}

}  // namespace

TEST_CASE("notion names round trip") {
  for (CompletionNotion n :
       {CompletionNotion::P0, CompletionNotion::P1, CompletionNotion::P2,
        CompletionNotion::FreeBool, CompletionNotion::DownsetsBool,
        CompletionNotion::IdealsBool, CompletionNotion::DMN})
    CHECK(parseNotion(notionName(n)) == n);
  CHECK(!parseNotion("p3").has_value());
}

TEST_CASE("the full completion of the asymmetric chain") {
  SpacePtr t3 = exampleT3();
  Completion c = complete(t3, CompletionNotion::P1);
  CHECK(c.result->size() == 7);
  CHECK(c.result->name() == "t3_p1");

  std::size_t ab = pointNamed(c.result, "{a,b}");
  std::size_t b = pointNamed(c.result, "{b}");
  CHECK(c.result->dist(ab, b) == QValue::rational(1));
  CHECK(c.result->dist(b, ab) == QValue::rational(0));

  CHECK(c.embedding.source == t3);
  CHECK(c.embedding.target == c.result);
  CHECK(c.embedding.assign[0] == pointNamed(c.result, "{a}"));
  CHECK(isNonexpansive(c.embedding));

  for (const CompletionPoint& p : c.points) CHECK(!p.generator.empty());
}

TEST_CASE("completeness of sources and results") {
  SpacePtr t3 = exampleT3(), z2 = exampleZ2();
  CHECK(!isComplete(t3, CompletionNotion::P1));
  CHECK(isComplete(t3, CompletionNotion::P2));
  CHECK(isComplete(complete(t3, CompletionNotion::P1).result, CompletionNotion::P1));
  CHECK(isComplete(z2, CompletionNotion::P1));
}

TEST_CASE("directed completion changes nothing on a finite metric space") {
  SpacePtr t3 = exampleT3();
  Completion c = complete(t3, CompletionNotion::P2);
  CHECK(c.result->size() == 3);
  CHECK(spacesIsomorphic(t3, c.result));
}

TEST_CASE("indiscernible points merge in the completion") {
  SpacePtr z2 = exampleZ2();
  CHECK(complete(z2, CompletionNotion::P1).result->size() == 1);
  CHECK(complete(z2, CompletionNotion::P2).result->size() == 1);
}

TEST_CASE("zero quotient collapses mutual zeros only") {
  Quotient q = zeroQuotient(exampleZ2());
  CHECK(q.space->size() == 1);
  CHECK(q.classOf == std::vector<std::size_t>{0, 0});
  CHECK(q.members.size() == 1);

  SpacePtr oneway = makeSpace("oneway", Base::RPlus, {"x", "y"},
                              {QValue::rational(0), QValue::rational(0), QValue::rational(1),
                               QValue::rational(0)});
  CHECK(zeroQuotient(oneway).space->size() == 2);
}

TEST_CASE("the subset construction matches the full completion on symmetric spaces") {
  SpacePtr sym = makeSpace("sym2", Base::RPlus, {"a", "b"},
                           {QValue::rational(0), QValue::rational(1), QValue::rational(1),
                            QValue::rational(0)});
  SpacePtr h = hausdorffConstruction(sym);
  CHECK(h->size() == 3);
  std::size_t a = pointNamed(h, "{a}");
  std::size_t ab = pointNamed(h, "{a,b}");
  CHECK(h->dist(a, ab) == QValue::rational(0));
  CHECK(h->dist(ab, a) == QValue::rational(1));
  CHECK(sameUpToNames(h, complete(sym, CompletionNotion::P1).result));
}

TEST_CASE("extending the embedding along its own completion is the identity") {
  SpacePtr t3 = exampleT3();
  Completion c = complete(t3, CompletionNotion::P1);
  SpaceMap ext = extendMap(c.embedding, c);
  REQUIRE(ext.assign.size() == c.result->size());
  for (std::size_t i = 0; i < ext.assign.size(); ++i) CHECK(ext.assign[i] == i);

  SpaceMap ident{t3, t3, {0, 1, 2}};
  CHECK_THROWS_AS(extendMap(ident, c), PreconditionError);
}

TEST_CASE("universal property on a small instance") {
  UniversalReport r =
      checkUniversalProperty(exampleZ2(), CompletionNotion::P1, onePoint(), 50'000'000);
  CHECK(r.ok());
  CHECK(r.mapsChecked >= 1);
  CHECK(r.extensionsVerified >= r.mapsChecked);
  CHECK(!r.budgetExceeded);
}

TEST_CASE("order completions of small preorders") {
  SpacePtr anti = exampleAntichain2();
  Completion freeC = complete(anti, CompletionNotion::FreeBool);
  CHECK(freeC.result->size() == 4);
  CHECK(std::any_of(freeC.points.begin(), freeC.points.end(),
                    [](const CompletionPoint& p) { return p.name == "{}"; }));

  CHECK(complete(anti, CompletionNotion::DownsetsBool).result->size() == 3);
  Completion ideals = complete(anti, CompletionNotion::IdealsBool);
  CHECK(ideals.result->size() == 2);
  CHECK(spacesIsomorphic(ideals.result, anti));

  CHECK(complete(anti, CompletionNotion::DMN).result->size() == 4);
  CHECK(dedekindMacNeille(chain2Bool()).result->size() == 2);
}

TEST_CASE("order notions reject the metric base") {
  CHECK_THROWS_AS(complete(exampleT3(), CompletionNotion::FreeBool), BaseMismatch);
  CHECK_THROWS_AS(dedekindMacNeille(exampleZ2()), BaseMismatch);
}

TEST_CASE("encoding preorders as metric spaces") {
  SpacePtr anti = exampleAntichain2();
  SpacePtr enc = boolEncode(anti);
  CHECK(enc->base() == Base::RPlus);
  CHECK(enc->dist(0, 0) == QValue::rational(0));
  CHECK(enc->dist(0, 1) == QValue::infinity());

  CHECK(bridgeCheck(anti, CompletionNotion::P1));
  CHECK(bridgeCheck(anti, CompletionNotion::P2));
  CHECK(bridgeCheck(chain2Bool(), CompletionNotion::P1));
  CHECK(bridgeCheck(chain2Bool(), CompletionNotion::P2));
}

TEST_CASE("alignment predicates") {
  SpacePtr t3 = exampleT3();
  CHECK(sameUpToNames(t3, t3));
  CHECK(!sameUpToNames(t3, exampleZ2()));
  CHECK(spacesIsomorphic(exampleZ2(), exampleZ2()));
  CHECK(!spacesIsomorphic(exampleZ2(), onePoint()));
}
