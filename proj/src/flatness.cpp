#include "vcat/flatness.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace vcat {

namespace {

// Odometer over grid^n. Calls f with each table; f may reject it.
template <typename F>
void forEachTable(std::span<const QValue> grid, std::size_t n, F&& f) {
  if (grid.empty()) return;
  std::vector<std::size_t> idx(n, 0);
  std::vector<QValue> table(n, grid[0]);
  while (true) {
    f(table);
    std::size_t k = 0;
    while (k < n) {
      if (++idx[k] < grid.size()) {
        table[k] = grid[idx[k]];
        break;
      }
      idx[k] = 0;
      table[k] = grid[0];
      ++k;
    }
    if (k == n) break;
  }
}

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t cap = 0;
  void spend(std::uint64_t n = 1) {
    used += n;
    if (used > cap)
      throw BudgetExceeded("flatness oracle budget exceeded after " + std::to_string(used) +
                           " checks");
  }
};

std::string describeModule(const RightModule& n) {
  std::string out = "[";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) out += ",";
    out += n.at(i).str();
  }
  return out + "]";
}

}  // namespace

std::string flatnessClassName(FlatnessClass c) {
  switch (c) {
    case FlatnessClass::P0: return "p0";
    case FlatnessClass::P1: return "p1";
    case FlatnessClass::P2: return "p2";
  }
  return "?";
}

std::vector<std::size_t> zeroSet(const LeftModule& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.at(i).isUnit()) out.push_back(i);
  return out;
}

bool preservesTerminal(const LeftModule& m) {
  return catJoin(m.values(), m.space()->base()).isUnit();
}

bool preservesCotensor(const LeftModule& m, const QValue& v, const RightModule& n) {
  const Base b = m.space()->base();
  std::vector<QValue> lhsParts, colimParts;
  lhsParts.reserve(m.size());
  colimParts.reserve(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    lhsParts.push_back(tensor(m.at(x), hom(v, n.at(x))));
    colimParts.push_back(tensor(m.at(x), n.at(x)));
  }
  return catJoin(lhsParts, b) == hom(v, catJoin(colimParts, b));
}

bool preservesFiniteMeet(const LeftModule& m, std::span<const RightModule> ns) {
  const Base b = m.space()->base();
  std::vector<QValue> pointMeet, lhsParts, rhsParts, column;
  lhsParts.reserve(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    column.clear();
    for (const RightModule& n : ns) column.push_back(n.at(x));
    lhsParts.push_back(tensor(m.at(x), catMeet(column, b)));
  }
  QValue lhs = catJoin(lhsParts, b);
  rhsParts.reserve(ns.size());
  for (const RightModule& n : ns) rhsParts.push_back(composeModules(m, n));
  return lhs == catMeet(rhsParts, b);
}

bool isP1Flat(const LeftModule& m) {
  std::vector<std::size_t> z = zeroSet(m);
  if (z.empty()) return false;
  const Space& s = *m.space();
  std::vector<QValue> parts;
  for (std::size_t x = 0; x < m.size(); ++x) {
    parts.clear();
    for (std::size_t y : z) parts.push_back(s.dist(x, y));
    if (m.at(x) != catJoin(parts, s.base())) return false;
  }
  return true;
}

bool isP2Flat(const LeftModule& m) {
  if (!isP1Flat(m)) return false;
  const Space& s = *m.space();
  std::vector<std::size_t> z = zeroSet(m);
  for (std::size_t u : z)
    for (std::size_t v : z) {
      bool bounded = false;
      for (std::size_t w : z)
        if (s.dist(u, w).isUnit() && s.dist(v, w).isUnit()) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

bool isP0Flat(const LeftModule& m) { return isAdjointPair(m, rightAdjointCandidate(m)); }

std::vector<QValue> defaultGrid(Base b) {
  if (b == Base::Bool) return {QValue::boolean(false), QValue::boolean(true)};
  return {QValue::rational(0), QValue::rational(1, 2), QValue::rational(1), QValue::rational(2),
          QValue::infinity()};
}

std::vector<LeftModule> enumerateGridLeftModules(const SpacePtr& s, std::span<const QValue> grid) {
  std::vector<LeftModule> out;
  forEachTable(grid, s->size(), [&](const std::vector<QValue>& t) {
    if (LeftModule::validTable(*s, t)) out.emplace_back(s, t);
  });
  return out;
}

std::vector<RightModule> enumerateGridRightModules(const SpacePtr& s, std::span<const QValue> grid) {
  std::vector<RightModule> out;
  forEachTable(grid, s->size(), [&](const std::vector<QValue>& t) {
    if (RightModule::validTable(*s, t)) out.emplace_back(s, t);
  });
  return out;
}

std::vector<RightModule> oracleRightModulePool(const SpacePtr& s, std::span<const QValue> grid) {
  std::vector<RightModule> pool = enumerateGridRightModules(s, grid);
  for (std::size_t a = 0; a < s->size(); ++a) pool.push_back(coyoneda(s, a));
  std::sort(pool.begin(), pool.end(), [](const RightModule& a, const RightModule& b) {
    return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(),
                                        b.values().end(), QValue::totalLess);
  });
  pool.erase(std::unique(pool.begin(), pool.end(),
                         [](const RightModule& a, const RightModule& b) {
                           return a.values() == b.values();
                         }),
             pool.end());
  return pool;
}

OracleResult flatnessOracle(const LeftModule& m, FlatnessClass cls, const OracleOptions& opt) {
  const Base b = m.space()->base();
  std::vector<QValue> grid = opt.grid.empty() ? defaultGrid(b) : opt.grid;
  std::vector<RightModule> pool = oracleRightModulePool(m.space(), grid);
  Budget budget{0, opt.budget};
  OracleResult res;
  auto fail = [&](std::string w) {
    res.flat = false;
    res.witness = std::move(w);
    res.checks = budget.used;
  };

  // Empty index: the terminal presheaf must go to the terminal value.
  budget.spend();
  if (!preservesTerminal(m)) {
    fail("terminal: join of module values is not the unit");
    return res;
  }

  // Singleton index: cotensors of pool members by grid values.
  for (const QValue& v : grid)
    for (const RightModule& n : pool) {
      budget.spend();
      if (!preservesCotensor(m, v, n)) {
        fail("cotensor v=" + v.str() + " n=" + describeModule(n));
        res.checks = budget.used;
        return res;
      }
    }

  if (cls != FlatnessClass::P1) {
    // Two-object index. The preservation identity never reads the index
    // distance matrix, and weight/diagram functoriality constraints relax
    // as index distances grow toward the initial element, so the codiscrete
    // index admits every pair the other index matrices admit. Enumerating
    // it alone runs the union of all two-object checks.
    //
    // A pair (v, n) only enters through the cotensor table hom(v, n(-)) and
    // the scalar hom(v, colim n); identical pairs are checked once.
    struct Cot {
      std::vector<QValue> table;
      QValue scalar;
    };
    std::vector<Cot> cots;
    for (const QValue& v : grid)
      for (const RightModule& n : pool) {
        Cot c;
        c.table.reserve(m.size());
        for (std::size_t x = 0; x < m.size(); ++x) c.table.push_back(hom(v, n.at(x)));
        std::vector<QValue> colimParts;
        colimParts.reserve(m.size());
        for (std::size_t x = 0; x < m.size(); ++x)
          colimParts.push_back(tensor(m.at(x), n.at(x)));
        c.scalar = hom(v, catJoin(colimParts, b));
        cots.push_back(std::move(c));
      }
    std::sort(cots.begin(), cots.end(), [](const Cot& a, const Cot& c) {
      for (std::size_t i = 0; i < a.table.size(); ++i) {
        if (QValue::totalLess(a.table[i], c.table[i])) return true;
        if (QValue::totalLess(c.table[i], a.table[i])) return false;
      }
      return QValue::totalLess(a.scalar, c.scalar);
    });
    cots.erase(std::unique(cots.begin(), cots.end(),
                           [](const Cot& a, const Cot& c) {
                             return a.table == c.table && a.scalar == c.scalar;
                           }),
               cots.end());

    std::vector<QValue> meetTable(m.size(), QValue::unit(b)), lhsParts(m.size(), QValue::unit(b));
    for (std::size_t i = 0; i < cots.size(); ++i)
      for (std::size_t j = i; j < cots.size(); ++j) {
        budget.spend();
        for (std::size_t x = 0; x < m.size(); ++x) {
          const QValue& p = cots[i].table[x];
          const QValue& q = cots[j].table[x];
          meetTable[x] = (b == Base::RPlus ? QValue::cmpNumeric(p, q) >= 0
                                           : QValue::cmpNumeric(p, q) <= 0)
                             ? p
                             : q;
          lhsParts[x] = tensor(m.at(x), meetTable[x]);
        }
        QValue lhs = catJoin(lhsParts, b);
        std::array<QValue, 2> scalars{cots[i].scalar, cots[j].scalar};
        QValue rhs = catMeet(scalars, b);
        if (lhs != rhs) {
          fail("pair limit: tables " + std::to_string(i) + "," + std::to_string(j) + " give " +
               lhs.str() + " vs " + rhs.str());
          return res;
        }
      }

    if (cls == FlatnessClass::P0) {
      // Absoluteness samples: representable limit functors on the index
      // applied after the colimit of m, against the same pair pool.
      for (std::size_t i = 0; i < cots.size(); ++i)
        for (std::size_t j = i; j < cots.size(); ++j) {
          budget.spend();
          for (std::size_t x = 0; x < m.size(); ++x) {
            const QValue& p = cots[i].table[x];
            const QValue& q = cots[j].table[x];
            meetTable[x] = (b == Base::RPlus ? QValue::cmpNumeric(p, q) >= 0
                                             : QValue::cmpNumeric(p, q) <= 0)
                               ? p
                               : q;
            lhsParts[x] = tensor(m.at(x), meetTable[x]);
          }
          std::array<QValue, 2> scalars{cots[i].scalar, cots[j].scalar};
          if (catMeet(scalars, b) != catJoin(lhsParts, b)) {
            fail("absoluteness sample failed at pair " + std::to_string(i) + "," +
                 std::to_string(j));
            return res;
          }
        }
    }
  }

  res.flat = true;
  res.checks = budget.used;
  return res;
}

CoflatReport coflatOracle(const Weight& p, const OracleOptions& opt) {
  if (!p.covariant) throw std::invalid_argument("coflatOracle expects a limit weight");
  const Base b = p.index->base();
  std::vector<QValue> grid = opt.grid.empty() ? defaultGrid(b) : opt.grid;
  std::vector<RightModule> pool = oracleRightModulePool(p.index, grid);
  Budget budget{0, opt.budget};
  CoflatReport rep;

  auto limitOf = [&](const RightModule& n) {
    std::vector<QValue> parts;
    parts.reserve(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) parts.push_back(hom(p.values[k], n.at(k)));
    return catMeet(parts, b);
  };

  // Colimit of a one- or two-member family of presheaves on the index,
  // weighted by grid scalars: join_l tensor(w_l, d_l).
  auto checkFamily = [&](std::span<const QValue> ws, std::span<const RightModule* const> ds) {
    budget.spend();
    std::vector<QValue> colim(p.index->size(), QValue::initial(b));
    for (std::size_t k = 0; k < p.index->size(); ++k) {
      std::vector<QValue> parts;
      for (std::size_t l = 0; l < ws.size(); ++l)
        parts.push_back(tensor(ws[l], ds[l]->at(k)));
      colim[k] = catJoin(parts, b);
    }
    if (!RightModule::validTable(*p.index, colim)) return true;  // not a presheaf, skip
    QValue lhs = limitOf(RightModule(p.index, colim));
    std::vector<QValue> rhsParts;
    for (std::size_t l = 0; l < ws.size(); ++l)
      rhsParts.push_back(tensor(ws[l], limitOf(*ds[l])));
    QValue rhs = catJoin(rhsParts, b);
    bool ok = lhs == rhs;
    if (!ok) {
      bool conical = true;
      for (const QValue& w : ws) conical = conical && w.isUnit();
      rep.allPreserved = false;
      if (conical) rep.conicalPreserved = false;
      if (rep.witness.empty())
        rep.witness = "weights " + (ws.empty() ? std::string("(empty)") : ws[0].str()) +
                      " give " + lhs.str() + " vs " + rhs.str();
    }
    return ok;
  };

  // Empty colimit: the initial presheaf.
  {
    budget.spend();
    std::vector<QValue> init(p.index->size(), QValue::initial(b));
    QValue lhs = limitOf(RightModule(p.index, init));
    QValue rhs = QValue::initial(b);
    if (lhs != rhs) {
      rep.allPreserved = false;
      if (rep.witness.empty())
        rep.witness = "empty colimit gives " + lhs.str() + " vs " + rhs.str();
    }
  }
  for (const QValue& w : grid)
    for (const RightModule& d : pool) {
      const RightModule* ds[1] = {&d};
      std::array<QValue, 1> ws{w};
      checkFamily(ws, ds);
    }
  for (const QValue& w1 : grid)
    for (const QValue& w2 : grid)
      for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
          const RightModule* ds[2] = {&pool[i], &pool[j]};
          std::array<QValue, 2> ws{w1, w2};
          checkFamily(ws, ds);
        }
  rep.checks = budget.used;
  return rep;
}

bool kanPreservesFlatness(const LeftModule& m, const SpaceMap& g, FlatnessClass cls) {
  auto flatFor = [&](const LeftModule& x) {
    switch (cls) {
      case FlatnessClass::P0: return isP0Flat(x);
      case FlatnessClass::P1: return isP1Flat(x);
      case FlatnessClass::P2: return isP2Flat(x);
    }
    return false;
  };
  if (!flatFor(m)) throw std::invalid_argument("kanPreservesFlatness: input module is not flat");
  return flatFor(kanExtend(m, g));
}

}  // namespace vcat
