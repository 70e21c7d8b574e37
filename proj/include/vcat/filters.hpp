#pragma once

#include "vcat/modules.hpp"

namespace vcat {

struct EmptyKernel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A filter of subsets on a finite carrier, kept in principal form: the
// family of all supersets of a nonempty generator. On finite carriers every
// proper filter is of this shape (the generator is the intersection of the
// family); the suites test that lemma separately.
class PrincipalFilter {
 public:
  PrincipalFilter(SpacePtr space, std::vector<std::size_t> generator);

  const SpacePtr& space() const { return space_; }
  const std::vector<std::size_t>& generator() const { return gen_; }
  bool operator==(const PrincipalFilter& o) const;

 private:
  SpacePtr space_;
  std::vector<std::size_t> gen_;  // sorted, deduplicated, nonempty
};

// Filtered limits of a point-indexed value table t. With a principal filter
// the two classical limits collapse onto the generator:
//   limPlus  = catMeet over the generator (numeric sup on the metric base),
//   limMinus = catJoin over the generator (numeric inf).
QValue limPlus(const PrincipalFilter& f, std::span<const QValue> t);
QValue limMinus(const PrincipalFilter& f, std::span<const QValue> t);

// The two modules a filter induces: mMinus(x) = limMinus of d(x, -) and
// mPlus(x) = limPlus of d(x, -).
LeftModule mMinus(const PrincipalFilter& f);
LeftModule mPlus(const PrincipalFilter& f);

// Sublevel set of a module at a positive tolerance.
std::vector<std::size_t> gamma(const LeftModule& m, const QValue& eps);

// The filter a module induces, generated by its unit set. Throws
// EmptyKernel when the unit set is empty (the family is then improper).
PrincipalFilter filterOfModule(const LeftModule& m);

// Flatness ladder for filters. Closed forms on principal filters:
//   weakly flat: every generator point reaches some generator point at the
//     unit distance (trivially true, via the identity arrow);
//   flat: the generator is directed under the unit-arrow relation;
//   Cauchy: all ordered generator pairs sit at the unit distance.
bool isWeaklyFlat(const PrincipalFilter& f);
bool isFlat(const PrincipalFilter& f);
bool isCauchy(const PrincipalFilter& f);

// Worst pairwise distance inside the generator; the unit exactly for Cauchy
// filters. This is the quantity whose vanishing defines the rejected
// "uniformly small" filter class, kept for documentation tests.
QValue diameter(const PrincipalFilter& f);

// Generator of the induced closed filter: all points at limMinus-distance
// unit from the generator. Idempotent, contains the generator.
PrincipalFilter closure(const PrincipalFilter& f);

// Arrow f1 -> f2 between weakly flat filters: the generator of f1 lies in
// the closure of f2.
bool filterMorphism(const PrincipalFilter& f1, const PrincipalFilter& f2);

// Containment and reflection identities, each computed along two routes and
// returning whether the routes agree (they must; suites assert it).
bool zoiCheck(const PrincipalFilter& f, const LeftModule& m);
bool fac22Check(const PrincipalFilter& f, const RightModule& n);

// All points whose distance row realizes limPlus of every column; empty
// when the filter has no limit in the carrier. Unit-isomorphic witnesses
// are interchangeable downstream.
std::vector<std::size_t> representatives(const PrincipalFilter& f);

// Convergence to a point, computed both as filter refinement of the
// neighborhood filter and as module domination; throws on route mismatch.
bool converges(const PrincipalFilter& f, std::size_t point);

PrincipalFilter directImage(const PrincipalFilter& f, const SpaceMap& g);

// Join of filters (union of generators) and its closure.
PrincipalFilter supFilters(std::span<const PrincipalFilter> fs);
PrincipalFilter colimitClosed(std::span<const PrincipalFilter> fs);

// limMinus distributes over a generator decomposition; returns whether the
// identity holds for the given parts (precondition: f = supFilters(parts)).
bool liminfFCheck(const PrincipalFilter& f, std::span<const PrincipalFilter> parts,
                  std::span<const QValue> t);

// An eventually periodic sequence of points: finite preperiod then a
// nonempty cycle repeated forever.
struct EvPeriodicSequence {
  EvPeriodicSequence(SpacePtr space, std::vector<std::size_t> preperiod,
                     std::vector<std::size_t> cycle);

  SpacePtr space;
  std::vector<std::size_t> preperiod;
  std::vector<std::size_t> cycle;
};

// Forward Cauchy on eventually periodic data: the cycle is a unit clique.
bool isForwardCauchy(const EvPeriodicSequence& s);

// Filter of tails: generated by the cycle's value set.
PrincipalFilter tailFilter(const EvPeriodicSequence& s);

// Given a filter whose induced module fails to dominate m at some point,
// builds a forward Cauchy sequence inside the generator whose tail filter
// maps into f yet still fails to dominate m. The tolerance schedule is
// alpha * 2^(-2-n); alpha is clamped to half the best witness gap when the
// seed exceeds it. Throws PreconditionError when domination holds.
EvPeriodicSequence separatingSequence(const PrincipalFilter& f, const LeftModule& m,
                                      const QValue& alpha);

// Given two forward Cauchy sequences whose tails map into a flat filter,
// produces one sequence receiving morphisms from both tails and mapping
// into the filter.
EvPeriodicSequence interpolateSequences(const EvPeriodicSequence& s1,
                                        const EvPeriodicSequence& s2,
                                        const PrincipalFilter& f);

// Every closed flat filter is the closure of the tail filter of a constant
// sequence; returns whether that holds for all of them on this space.
bool charffilFiniteCheck(const SpacePtr& s);

// Distance between weakly flat filters: the presheaf hom of the induced
// modules, equal to the sup-inf double limit of the distance table.
// Computed along both routes; throws on mismatch.
QValue wfHomDistance(const PrincipalFilter& f1, const PrincipalFilter& f2);

// The two double limits, separately, for the suites.
QValue doubleLimitSupInf(const PrincipalFilter& f1, const PrincipalFilter& f2);
QValue doubleLimitInfSup(const PrincipalFilter& f1, const PrincipalFilter& f2);

}  // namespace vcat
