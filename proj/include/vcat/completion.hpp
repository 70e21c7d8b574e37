#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcat/filters.hpp"
#include "vcat/modules.hpp"
#include "vcat/space.hpp"

namespace vcat {

enum class CompletionNotion { P0, P1, P2, FreeBool, DownsetsBool, IdealsBool, DMN };

const char* notionName(CompletionNotion n);
std::optional<CompletionNotion> parseNotion(std::string_view text);

// One point of a completion: a canonical generator subset of the source
// (sorted point indices) together with the module it generates.  For cut
// completions the generator is the lower set of the cut.
struct CompletionPoint {
  std::string name;
  std::vector<std::size_t> generator;
  std::vector<QValue> module;
};

struct Completion {
  SpacePtr source;
  CompletionNotion notion;
  SpacePtr result;
  SpaceMap embedding;                 // source -> result
  std::vector<CompletionPoint> points;  // parallel to result->points()
};

// Materialize a completion of a finite space.  P0/P1/P2 work over either
// base; the order-theoretic notions (FreeBool, DownsetsBool, IdealsBool,
// DMN) require the Bool base.  Points are enumerated deterministically and
// named by their sorted generator subset, and distances between points are
// presheaf homs of the generated modules.
Completion complete(const SpacePtr& s, CompletionNotion notion);

// Dedekind-MacNeille cuts (lower set, upper set), each Galois-stable.
// Points are ordered by inclusion of lower sets.  This is computed for
// cross-reference only; no identification with the other notions is
// asserted.
Completion dedekindMacNeille(const SpacePtr& p);

// A space is complete for a notion when every filter of the matching class
// (P1-style: every principal filter; P2-style: the directed ones) admits a
// representative point.  Only P1/P2 and their Bool aliases are meaningful.
bool isComplete(const SpacePtr& s, CompletionNotion notion);

// The canonical extension of f: A -> B along the completion of A: each
// completion point maps to the representative of the direct image of its
// generator filter.  Throws PreconditionError naming a witness filter when
// B is not complete for the notion.
SpaceMap extendMap(const SpaceMap& f, const Completion& c);

struct UniversalReport {
  std::size_t mapsChecked = 0;
  std::size_t extensionsVerified = 0;
  bool budgetExceeded = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// For every nonexpansive f: A -> B (B complete for the notion), check that
// extendMap(f) satisfies its contracts and is the unique representative
// preserving nonexpansive map agreeing with f on the embedded points, up to
// pointwise unit isomorphism.  Enumeration work is capped by budget.
UniversalReport checkUniversalProperty(const SpacePtr& a, CompletionNotion notion,
                                       const SpacePtr& b, std::uint64_t budget);

struct Quotient {
  SpacePtr space;
  std::vector<std::size_t> classOf;              // source point -> class index
  std::vector<std::vector<std::size_t>> members;  // class index -> source points
};

// Identify points at mutual unit distance.  Class distances are inherited
// from representatives (well defined, asserted).
Quotient zeroQuotient(const SpacePtr& s);

// For a symmetric space: quotient out zero pairs, then form all nonempty
// subsets of the quotient with the asymmetric sup-inf distance.  Point names
// are chosen so the result aligns with complete(s, P1) by name.
SpacePtr hausdorffConstruction(const SpacePtr& s);

// Encode a preorder as a metric space: related pairs at distance 0, all
// other pairs at infinity.
SpacePtr boolEncode(const SpacePtr& p);

// Completing the encoded preorder and encoding the completed preorder must
// agree (notions P1 and P2).
bool bridgeCheck(const SpacePtr& p, CompletionNotion notion);

// Entrywise equality of distance tables after aligning points by name.
bool sameUpToNames(const SpacePtr& a, const SpacePtr& b);

// Existence of a distance preserving bijection (brute force; small spaces).
bool spacesIsomorphic(const SpacePtr& a, const SpacePtr& b);

}  // namespace vcat
