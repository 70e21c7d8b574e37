#pragma once

#include <span>

#include "vcat/space.hpp"

namespace vcat {

struct InvalidModule : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotLeftAdjoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Left module (presheaf) on A: one value per point with
// tensor(M(y), d(x, y)) -> M(x). Tables are validated eagerly on
// construction; derived constructions re-validate as a theorem check.
class LeftModule {
 public:
  LeftModule(SpacePtr space, std::vector<QValue> values);

  const SpacePtr& space() const { return space_; }
  const QValue& at(std::size_t i) const { return values_[i]; }
  const std::vector<QValue>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool operator==(const LeftModule& o) const;

  static bool validTable(const Space& s, std::span<const QValue> values);

 private:
  SpacePtr space_;
  std::vector<QValue> values_;
};

// Right module (covariant presheaf): tensor(d(x, y), N(x)) -> N(y).
class RightModule {
 public:
  RightModule(SpacePtr space, std::vector<QValue> values);

  const SpacePtr& space() const { return space_; }
  const QValue& at(std::size_t i) const { return values_[i]; }
  const std::vector<QValue>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool operator==(const RightModule& o) const;

  static bool validTable(const Space& s, std::span<const QValue> values);

 private:
  SpacePtr space_;
  std::vector<QValue> values_;
};

LeftModule yoneda(const SpacePtr& s, std::size_t point);     // d(-, a)
RightModule coyoneda(const SpacePtr& s, std::size_t point);  // d(a, -)

// Presheaf-category distance: categorical meet over points of
// hom(M(x), N(x)) (numeric supremum of clamped differences on the metric
// base). The arrow relation moduleLeq(M, N) holds iff this is the unit.
QValue presheafHom(const LeftModule& m, const LeftModule& n);
bool moduleLeq(const LeftModule& m, const LeftModule& n);

// Composite of modules I -> A -> I: categorical join over points of
// tensor(M(x), N(x)) (numeric infimum of sums on the metric base).
QValue composeModules(const LeftModule& m, const RightModule& n);

// The colimit functor induced by the embedding of A into its presheaves,
// applied to a covariant diagram. Shares the composite implementation.
QValue lanYonedaApply(const LeftModule& m, const RightModule& g);

// Raw weighted (co)limit of a V-valued diagram over a common index set.
// weightedLimitValues  = catMeet_k hom(P(k), G(k)), empty -> terminal.
// weightedColimitValues = catJoin_k tensor(P(k), G(k)), empty -> initial.
QValue weightedLimitValues(std::span<const QValue> weight, std::span<const QValue> diagram,
                           Base b);
QValue weightedColimitValues(std::span<const QValue> weight, std::span<const QValue> diagram,
                             Base b);

// A weight on a named index space, flagged covariant (functor K -> V) or
// contravariant (presheaf on K). Validated on construction.
struct Weight {
  Weight(SpacePtr index, bool covariant, std::vector<QValue> values);

  SpacePtr index;
  bool covariant;
  std::vector<QValue> values;
};

// A two-variable diagram on index x target, functorial in both variables:
// every column is a right module on the target space and every row respects
// the index space (covariantly).
struct Diagram {
  Diagram(SpacePtr index, SpacePtr target, std::vector<QValue> grid);

  const QValue& at(std::size_t k, std::size_t a) const { return grid[k * target->size() + a]; }

  SpacePtr index;
  SpacePtr target;
  std::vector<QValue> grid;  // index-major
};

QValue weightedLimit(const Weight& p, std::span<const QValue> diagram);
QValue weightedColimit(const Weight& p, std::span<const QValue> diagram);

// Left Kan extension of M along G, as a module on the target:
// b |-> catJoin_x tensor(M(x), d_B(b, G x)).
LeftModule kanExtend(const LeftModule& m, const SpaceMap& g);

// Precomposition with G: x |-> M(G x).
LeftModule restrictAlong(const LeftModule& m, const SpaceMap& g);

// The only possible right adjoint of M as a module I -> A:
// a |-> presheafHom(M, yoneda(a)).
RightModule rightAdjointCandidate(const LeftModule& m);

// Adjunction check: composeModules(m, n) is the unit, and
// tensor(N(y), M(x)) -> d(x, y) for all x, y.
bool isAdjointPair(const LeftModule& m, const RightModule& n);

// Presheaf distance computed through the right adjoint of M; throws
// NotLeftAdjoint when M has none.
QValue homViaAdjoint(const LeftModule& m, const LeftModule& n);

}  // namespace vcat
