#include "vcat/quantale.hpp"

#include <numeric>

namespace vcat {

namespace {

using i128 = __int128;

long long checkedNarrow(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw Overflow(std::string("rational overflow in ") + what);
  return static_cast<long long>(v);
}

// Reduced fraction from 128-bit intermediates.
QValue makeRational(i128 num, i128 den, const char* what) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (num < 0) throw std::invalid_argument("negative metric value");
  i128 g = num;
  i128 d = den;
  while (d != 0) {
    i128 t = g % d;
    g = d;
    d = t;
  }
  if (g == 0) g = 1;
  return QValue::rational(checkedNarrow(num / g, what), checkedNarrow(den / g, what));
}

void requireSameBase(const QValue& a, const QValue& b, const char* what) {
  if (a.base() != b.base()) throw BaseMismatch(std::string("mixed bases in ") + what);
}

}  // namespace

std::string baseName(Base b) { return b == Base::RPlus ? "rplus" : "bool"; }

QValue QValue::rational(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  if (num < 0) throw std::invalid_argument("metric values are non-negative");
  long long g = std::gcd(num, den);
  if (g == 0) g = 1;
  return QValue(Base::RPlus, false, num / g, den / g);
}

QValue QValue::infinity() { return QValue(Base::RPlus, true, 0, 1); }

QValue QValue::boolean(bool v) { return QValue(Base::Bool, false, v ? 1 : 0, 1); }

QValue QValue::unit(Base b) {
  return b == Base::RPlus ? QValue::rational(0) : QValue::boolean(true);
}

QValue QValue::initial(Base b) {
  return b == Base::RPlus ? QValue::infinity() : QValue::boolean(false);
}

QValue terminal(Base b) { return QValue::unit(b); }

bool QValue::isUnit() const { return *this == unit(base_); }

bool QValue::truth() const {
  if (base_ != Base::Bool) throw BaseMismatch("truth() needs a boolean value");
  return num_ != 0;
}

bool QValue::operator==(const QValue& o) const {
  return base_ == o.base_ && inf_ == o.inf_ && (inf_ || (num_ == o.num_ && den_ == o.den_));
}

int QValue::cmpNumeric(const QValue& a, const QValue& b) {
  requireSameBase(a, b, "cmpNumeric");
  if (a.inf_ || b.inf_) {
    if (a.inf_ && b.inf_) return 0;
    return a.inf_ ? 1 : -1;
  }
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool QValue::totalLess(const QValue& a, const QValue& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  return cmpNumeric(a, b) < 0;
}

std::string QValue::str() const {
  if (base_ == Base::Bool) return num_ ? "1" : "0";
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QValue tensor(const QValue& a, const QValue& b) {
  requireSameBase(a, b, "tensor");
  if (a.base() == Base::Bool) return QValue::boolean(a.truth() && b.truth());
  if (a.isInf() || b.isInf()) return QValue::infinity();
  i128 num = static_cast<i128>(a.num()) * b.den() + static_cast<i128>(b.num()) * a.den();
  i128 den = static_cast<i128>(a.den()) * b.den();
  return makeRational(num, den, "tensor");
}

QValue hom(const QValue& x, const QValue& y) {
  requireSameBase(x, y, "hom");
  if (x.base() == Base::Bool) return QValue::boolean(!x.truth() || y.truth());
  // Largest z with z + x numerically >= y: the clamped difference. An
  // infinite x satisfies any bound, so the result collapses to 0.
  if (x.isInf()) return QValue::rational(0);
  if (y.isInf()) return QValue::infinity();
  i128 num = static_cast<i128>(y.num()) * x.den() - static_cast<i128>(x.num()) * y.den();
  if (num <= 0) return QValue::rational(0);
  i128 den = static_cast<i128>(x.den()) * y.den();
  return makeRational(num, den, "hom");
}

bool catLeq(const QValue& x, const QValue& y) {
  requireSameBase(x, y, "catLeq");
  int c = QValue::cmpNumeric(x, y);
  return x.base() == Base::RPlus ? c >= 0 : c <= 0;
}

QValue catMeet(std::span<const QValue> xs, Base b) {
  QValue acc = terminal(b);
  for (const QValue& x : xs) {
    requireSameBase(acc, x, "catMeet");
    int c = QValue::cmpNumeric(x, acc);
    if (b == Base::RPlus ? c > 0 : c < 0) acc = x;
  }
  return acc;
}

QValue catJoin(std::span<const QValue> xs, Base b) {
  QValue acc = QValue::initial(b);
  for (const QValue& x : xs) {
    requireSameBase(acc, x, "catJoin");
    int c = QValue::cmpNumeric(x, acc);
    if (b == Base::RPlus ? c < 0 : c > 0) acc = x;
  }
  return acc;
}

QValue numericMin(std::span<const QValue> xs) {
  if (xs.empty()) throw std::invalid_argument("numericMin of an empty family");
  QValue acc = xs[0];
  for (const QValue& x : xs.subspan(1))
    if (QValue::cmpNumeric(x, acc) < 0) acc = x;
  return acc;
}

QValue numericMax(std::span<const QValue> xs) {
  if (xs.empty()) throw std::invalid_argument("numericMax of an empty family");
  QValue acc = xs[0];
  for (const QValue& x : xs.subspan(1))
    if (QValue::cmpNumeric(x, acc) > 0) acc = x;
  return acc;
}

bool checkFacR(const QValue& v, std::span<const QValue> as) {
  if (as.empty()) throw std::invalid_argument("checkFacR needs a nonempty family");
  if (v.base() != Base::RPlus) throw BaseMismatch("checkFacR is metric-only");
  QValue lhs = hom(v, numericMin(as));
  std::vector<QValue> homs;
  homs.reserve(as.size());
  for (const QValue& a : as) homs.push_back(hom(v, a));
  return lhs == numericMin(homs);
}

std::optional<bool> checkFacR2(const QValue& v, std::span<const QValue> as) {
  if (as.empty()) throw std::invalid_argument("checkFacR2 needs a nonempty family");
  if (v.base() != Base::RPlus) throw BaseMismatch("checkFacR2 is metric-only");
  QValue sup = numericMax(as);
  if (sup.isInf()) {
    bool witness = false;
    for (const QValue& a : as) witness = witness || a.isInf();
    if (!witness) return std::nullopt;  // side condition violated
  }
  QValue lhs = hom(sup, v);
  std::vector<QValue> homs;
  homs.reserve(as.size());
  for (const QValue& a : as) homs.push_back(hom(a, v));
  return lhs == numericMin(homs);
}

QValue halve(const QValue& x) {
  if (x.base() != Base::RPlus) throw BaseMismatch("halve is metric-only");
  if (x.isInf()) return x;
  i128 den = static_cast<i128>(x.den()) * 2;
  return makeRational(x.num(), den, "halve");
}

}  // namespace vcat
