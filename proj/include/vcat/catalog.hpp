#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcat/completion.hpp"
#include "vcat/space.hpp"

namespace vcat {

struct CatalogParams {
  std::size_t maxPoints = 3;
  std::vector<QValue> grid;  // empty means {0, 1, 2, inf}
  bool symmetricOnly = false;
  std::uint64_t seed = 1;
};

std::vector<QValue> catalogGrid();

// All triangle-valid distance assignments over the grid, one space per
// isomorphism class, in a deterministic order.
std::vector<SpacePtr> enumerateSpaces(const CatalogParams& p);

// All preorders on up to maxPoints elements, one per isomorphism class.
std::vector<SpacePtr> enumerateBoolSpaces(std::size_t maxPoints);

// Fixed instances used across suites, tests and goldens.
SpacePtr exampleT3();
SpacePtr exampleZ2();
SpacePtr exampleAntichain2();

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool budgetExceeded = false;
  std::vector<std::string> notes;  // first few failure details
  bool passed() const { return failures == 0 && !budgetExceeded; }
};

struct SuiteOptions {
  CatalogParams catalog;
  std::size_t maxBoolPoints = 4;
  std::uint64_t budget = 50'000'000;
};

SuiteResult suiteQuantaleLaws(std::uint64_t seed);
SuiteResult suiteFlatnessOracle(const SuiteOptions& o);
SuiteResult suiteFlatnessHierarchy(const SuiteOptions& o);
SuiteResult suiteReflection(const SuiteOptions& o);
SuiteResult suiteFilterHierarchy(const SuiteOptions& o);
SuiteResult suiteWfHom(const SuiteOptions& o);
SuiteResult suiteCompletionInstances();
SuiteResult suiteFiniteCauchyComplete(const SuiteOptions& o);
SuiteResult suiteHausdorff(const SuiteOptions& o);
SuiteResult suiteUniversalProperty(const SuiteOptions& o);
SuiteResult suiteBridge(const SuiteOptions& o);
SuiteResult suiteConstructive(const SuiteOptions& o);
// Supplementary sweeps beyond the numbered list.
SuiteResult suiteCompleteness(const SuiteOptions& o);
SuiteResult suiteKanExtension(const SuiteOptions& o);
SuiteResult suiteCommutation(const SuiteOptions& o);
SuiteResult suiteCoflat(const SuiteOptions& o);

std::vector<SuiteResult> runAllSuites(const SuiteOptions& o);

}  // namespace vcat
