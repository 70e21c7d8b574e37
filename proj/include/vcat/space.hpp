#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vcat/quantale.hpp"

namespace vcat {

struct SpaceMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A finite category enriched in the active base: named points plus an exact
// distance matrix. Construction checks shape (unique names, base-consistent
// entries); the unit-diagonal and triangle laws are reported by
// validateSpace so invalid candidates can be examined.
class Space {
 public:
  Space(std::string name, Base base, std::vector<std::string> points,
        std::vector<QValue> dist);

  const std::string& name() const { return name_; }
  Base base() const { return base_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& pointName(std::size_t i) const { return points_[i]; }
  std::optional<std::size_t> indexOf(const std::string& point) const;

  const QValue& dist(std::size_t from, std::size_t to) const {
    return dist_[from * points_.size() + to];
  }
  const std::vector<QValue>& distances() const { return dist_; }

  bool lawsHold() const { return lawsHold_; }
  bool isSymmetric() const;

 private:
  std::string name_;
  Base base_;
  std::vector<std::string> points_;
  std::vector<QValue> dist_;
  bool lawsHold_;
};

using SpacePtr = std::shared_ptr<const Space>;

SpacePtr makeSpace(std::string name, Base base, std::vector<std::string> points,
                   std::vector<QValue> dist);

// Human-readable law violations (unit diagonal, triangle), naming the
// offending points. Empty means the space is lawful.
std::vector<std::string> validateSpace(const Space& s);

// Arrow relation at the unit: dist_bool(x, y) = 1 iff dist(x, y) is the
// unit. Idempotent on Bool input.
SpacePtr underlyingPreorder(const Space& s);

// A function on points. Nonexpansiveness is a reported property, not a
// construction invariant, so candidate maps can be enumerated and filtered.
struct SpaceMap {
  SpacePtr source;
  SpacePtr target;
  std::vector<std::size_t> assign;

  std::size_t operator()(std::size_t i) const { return assign[i]; }
};

std::vector<std::string> validateMap(const SpaceMap& f);
bool isNonexpansive(const SpaceMap& f);

// Points at mutual unit distance are interchangeable; this is the
// equivalence the quotient and the extension contracts use.
bool unitIsomorphic(const Space& s, std::size_t x, std::size_t y);

// Same object, or an exact copy (name, points, distances).
bool sameSpace(const SpacePtr& a, const SpacePtr& b);

}  // namespace vcat
