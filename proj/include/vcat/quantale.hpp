#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcat {

// The two base quantales: extended non-negative rationals under addition
// (generalized metric spaces) and the booleans under conjunction (preorders).
enum class Base : std::uint8_t { RPlus, Bool };

std::string baseName(Base b);

struct BaseMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Overflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// An element of the active base quantale. Metric values are exact reduced
// int64 fractions; +infinity is a first-class value. No floating point
// anywhere; arithmetic throws Overflow instead of wrapping.
//
// Order conventions, fixed once for the whole library:
//   * catLeq(x, y) means "there is an arrow x -> y". For the metric base
//     this is the REVERSED numeric order (x >= y); for Bool it is 0 <= 1.
//   * catMeet is the categorical product: numeric max for the metric base,
//     "and" for Bool. catJoin is the coproduct: numeric min, "or".
//   * Formulas stated with numeric infima over metric values therefore call
//     catJoin, and numeric suprema call catMeet. Sites implementing sup-inf
//     style expressions say which one they mean.
class QValue {
 public:
  QValue() : base_(Base::RPlus), inf_(false), num_(0), den_(1) {}

  static QValue rational(long long num, long long den = 1);
  static QValue infinity();
  static QValue boolean(bool v);
  static QValue unit(Base b);      // RPlus 0, Bool 1; also the terminal object
  static QValue initial(Base b);   // RPlus inf, Bool 0

  Base base() const { return base_; }
  bool isInf() const { return inf_; }
  long long num() const { return num_; }
  long long den() const { return den_; }

  bool isUnit() const;
  bool truth() const;  // Bool only

  bool operator==(const QValue& o) const;
  bool operator!=(const QValue& o) const { return !(*this == o); }

  // Numeric comparison (infinity greatest); both values must share a base.
  static int cmpNumeric(const QValue& a, const QValue& b);

  // Strict total order usable as a container comparator (base, then value).
  static bool totalLess(const QValue& a, const QValue& b);

  std::string str() const;

 private:
  QValue(Base base, bool inf, long long num, long long den)
      : base_(base), inf_(inf), num_(num), den_(den) {}

  Base base_;
  bool inf_;
  long long num_;
  long long den_;
};

QValue terminal(Base b);  // = unit for both bases

// Monoidal structure and its right adjoint: tensor(z, x) is "z then x", and
// hom(x, y) is the largest z with an arrow tensor(z, x) -> y.
QValue tensor(const QValue& a, const QValue& b);
QValue hom(const QValue& x, const QValue& y);

bool catLeq(const QValue& x, const QValue& y);

// Finite categorical meet/join; the base argument decides the empty case
// (terminal resp. initial element).
QValue catMeet(std::span<const QValue> xs, Base b);
QValue catJoin(std::span<const QValue> xs, Base b);

// Numeric min/max over nonempty metric families, used by sup-inf formulas.
QValue numericMin(std::span<const QValue> xs);
QValue numericMax(std::span<const QValue> xs);

// hom(v, -) applied to a nonempty family's numeric infimum factors through
// the members. Returns whether the identity holds (it always does; the
// sweep asserts it). Metric base only. Throws on an empty family.
bool checkFacR(const QValue& v, std::span<const QValue> as);

// Dual factorization through a numeric supremum. Needs the side condition
// "sup = inf only if some member is inf"; when that fails the identity is
// inapplicable and nullopt is returned instead of a verdict.
std::optional<bool> checkFacR2(const QValue& v, std::span<const QValue> as);

QValue halve(const QValue& x);  // exact division by 2, metric base

}  // namespace vcat
