#pragma once

#include <cstdint>

#include "vcat/modules.hpp"

namespace vcat {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight classes ordered by strength: P0 (colimits absolute / left adjoint),
// P2 (finite index sets), P1 (empty or singleton index).
enum class FlatnessClass { P0, P1, P2 };

std::string flatnessClassName(FlatnessClass c);

// Points where the module takes the unit value.
std::vector<std::size_t> zeroSet(const LeftModule& m);

// Colimit-functor preservation checks, one shape each.
bool preservesTerminal(const LeftModule& m);
bool preservesCotensor(const LeftModule& m, const QValue& v, const RightModule& n);
bool preservesFiniteMeet(const LeftModule& m, std::span<const RightModule> ns);

// Closed forms on finite carriers. P1: the unit set is nonempty and the
// module is the pointwise join of the distances into it. P2: additionally
// the unit set is directed under the unit-arrow relation. P0: the module
// together with its canonical candidate forms an adjoint pair.
bool isP1Flat(const LeftModule& m);
bool isP2Flat(const LeftModule& m);
bool isP0Flat(const LeftModule& m);

std::vector<QValue> defaultGrid(Base b);  // RPlus {0,1/2,1,2,inf}; Bool {0,1}

struct OracleOptions {
  std::vector<QValue> grid;   // weight and diagram values; empty -> defaultGrid
  int maxIndexSize = 2;
  std::uint64_t budget = 50'000'000;  // identity evaluations before erroring
};

struct OracleResult {
  bool flat = false;
  std::uint64_t checks = 0;
  std::string witness;  // first failing instance, human readable
};

// Definitional check: enumerates weighted limits of the given class built
// from grid-valued weights and grid-valued or representable right modules,
// and tests that the colimit functor of m preserves each one. Exceeds of
// the budget throw, never silently pass.
OracleResult flatnessOracle(const LeftModule& m, FlatnessClass cls, const OracleOptions& opt);

struct CoflatReport {
  bool allPreserved = true;       // every sampled colimit shape
  bool conicalPreserved = true;   // unit-weighted colimits only
  std::uint64_t checks = 0;
  std::string witness;
};

// Dual sampling: does the limit functor of the weight preserve enumerated
// colimits of presheaves on its index space?
CoflatReport coflatOracle(const Weight& p, const OracleOptions& opt);

// Kan extension along a nonexpansive map keeps the flatness class (checked
// via the closed forms; the input must be flat for the class).
bool kanPreservesFlatness(const LeftModule& m, const SpaceMap& g, FlatnessClass cls);

// Enumeration helpers shared by oracles and sweeps.
std::vector<LeftModule> enumerateGridLeftModules(const SpacePtr& s, std::span<const QValue> grid);
std::vector<RightModule> enumerateGridRightModules(const SpacePtr& s, std::span<const QValue> grid);
// Grid right modules plus all representables, deduplicated.
std::vector<RightModule> oracleRightModulePool(const SpacePtr& s, std::span<const QValue> grid);

}  // namespace vcat
