#include "vcat/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace vcat {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> readLines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::ifstream openFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::size_t pointIndex(const Space& s, const std::string& name, std::size_t line) {
  auto i = s.indexOf(name);
  if (!i) throw ParseError(line, "unknown point '" + name + "' on space " + s.name());
  return *i;
}

void requireHeader(const Line& line, const std::string& keyword, std::size_t arity) {
  if (line.tokens[0] != keyword)
    throw ParseError(line.number, "expected '" + keyword + "', got '" + line.tokens[0] + "'");
  if (line.tokens.size() != arity)
    throw ParseError(line.number, "'" + keyword + "' header has wrong number of fields");
}

// Header "NAME on SPACE": checks the referenced space name matches.
void requireOnSpace(const Line& line, const Space& s) {
  if (line.tokens[2] != "on")
    throw ParseError(line.number, "expected 'on', got '" + line.tokens[2] + "'");
  if (line.tokens[3] != s.name())
    throw ParseError(line.number, "file references space '" + line.tokens[3] +
                                      "' but was given '" + s.name() + "'");
}

}  // namespace

QValue parseQValue(const std::string& token, Base base, std::size_t line) {
  try {
    if (base == Base::Bool) {
      if (token == "0") return QValue::boolean(false);
      if (token == "1") return QValue::boolean(true);
      throw ParseError(line, "bool value must be 0 or 1, got '" + token + "'");
    }
    if (token == "inf") return QValue::infinity();
    std::size_t slash = token.find('/');
    std::string numPart = slash == std::string::npos ? token : token.substr(0, slash);
    std::string denPart = slash == std::string::npos ? "1" : token.substr(slash + 1);
    std::size_t used = 0;
    long long num = std::stoll(numPart, &used);
    if (used != numPart.size()) throw std::invalid_argument(token);
    long long den = std::stoll(denPart, &used);
    if (used != denPart.size()) throw std::invalid_argument(token);
    return QValue::rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(line, "bad value '" + token + "'");
  }
}

SpacePtr parseSpace(std::istream& in) {
  std::vector<Line> lines = readLines(in);
  if (lines.empty()) throw ParseError(0, "empty space file");
  requireHeader(lines[0], "space", 4);
  if (lines[0].tokens[2] != "over")
    throw ParseError(lines[0].number, "expected 'over'");
  Base base;
  if (lines[0].tokens[3] == "rplus")
    base = Base::RPlus;
  else if (lines[0].tokens[3] == "bool")
    base = Base::Bool;
  else
    throw ParseError(lines[0].number, "base must be rplus or bool");
  std::string name = lines[0].tokens[1];

  if (lines.size() < 2 || lines[1].tokens[0] != "points")
    throw ParseError(lines.size() < 2 ? lines[0].number : lines[1].number,
                     "expected a 'points' line");
  std::vector<std::string> points(lines[1].tokens.begin() + 1, lines[1].tokens.end());
  if (points.empty()) throw ParseError(lines[1].number, "points list is empty");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw ParseError(lines[1].number, "duplicate point '" + points[i] + "'");

  const std::size_t n = points.size();
  std::vector<QValue> dist(n * n, QValue::initial(base));
  for (std::size_t i = 0; i < n; ++i) dist[i * n + i] = QValue::unit(base);
  std::vector<bool> given(n * n, false);

  auto indexOf = [&](const std::string& p, std::size_t line) {
    for (std::size_t i = 0; i < n; ++i)
      if (points[i] == p) return i;
    throw ParseError(line, "unknown point '" + p + "'");
  };

  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "d")
      throw ParseError(line.number, "expected a 'd' line, got '" + line.tokens[0] + "'");
    if (line.tokens.size() != 4)
      throw ParseError(line.number, "'d' line needs: d FROM TO VALUE");
    std::size_t i = indexOf(line.tokens[1], line.number);
    std::size_t j = indexOf(line.tokens[2], line.number);
    QValue v = parseQValue(line.tokens[3], base, line.number);
    if (i == j) {
      if (!v.isUnit())
        throw ParseError(line.number, "diagonal distances are fixed at unit");
      continue;
    }
    if (given[i * n + j])
      throw ParseError(line.number,
                       "duplicate entry for (" + line.tokens[1] + "," + line.tokens[2] + ")");
    given[i * n + j] = true;
    dist[i * n + j] = v;
  }
  return makeSpace(std::move(name), base, std::move(points), std::move(dist));
}

SpacePtr parseSpaceFile(const std::string& path) {
  auto in = openFile(path);
  return parseSpace(in);
}

std::string formatSpace(const Space& s) {
  std::ostringstream out;
  out << "space " << s.name() << " over " << (s.base() == Base::RPlus ? "rplus" : "bool")
      << "\n";
  out << "points";
  for (const std::string& p : s.points()) out << " " << p;
  out << "\n";
  const QValue init = QValue::initial(s.base());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i == j || s.dist(i, j) == init) continue;
      out << "d " << s.pointName(i) << " " << s.pointName(j) << " " << s.dist(i, j).str()
          << "\n";
    }
  return out.str();
}

ModuleFile parseModule(std::istream& in, const SpacePtr& space) {
  std::vector<Line> lines = readLines(in);
  if (lines.empty()) throw ParseError(0, "empty module file");
  requireHeader(lines[0], "module", 5);
  requireOnSpace(lines[0], *space);
  ModuleFile out;
  out.name = lines[0].tokens[1];
  if (lines[0].tokens[4] == "left")
    out.isLeft = true;
  else if (lines[0].tokens[4] == "right")
    out.isLeft = false;
  else
    throw ParseError(lines[0].number, "module side must be left or right");

  const std::size_t n = space->size();
  out.values.assign(n, QValue::unit(space->base()));
  std::vector<bool> given(n, false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "m" || line.tokens.size() != 3)
      throw ParseError(line.number, "expected: m POINT VALUE");
    std::size_t i = pointIndex(*space, line.tokens[1], line.number);
    if (given[i]) throw ParseError(line.number, "duplicate value for '" + line.tokens[1] + "'");
    given[i] = true;
    out.values[i] = parseQValue(line.tokens[2], space->base(), line.number);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!given[i])
      throw ParseError(lines.back().number, "missing value for point '" + space->pointName(i) + "'");
  return out;
}

ModuleFile parseModuleFile(const std::string& path, const SpacePtr& space) {
  auto in = openFile(path);
  return parseModule(in, space);
}

PrincipalFilter parseFilter(std::istream& in, const SpacePtr& space) {
  std::vector<Line> lines = readLines(in);
  if (lines.empty()) throw ParseError(0, "empty filter file");
  requireHeader(lines[0], "filter", 4);
  requireOnSpace(lines[0], *space);
  std::vector<std::size_t> gen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "gen")
      throw ParseError(line.number, "expected a 'gen' line");
    for (std::size_t t = 1; t < line.tokens.size(); ++t)
      gen.push_back(pointIndex(*space, line.tokens[t], line.number));
  }
  if (gen.empty()) throw ParseError(lines[0].number, "filter has an empty generator");
  return PrincipalFilter(space, gen);
}

PrincipalFilter parseFilterFile(const std::string& path, const SpacePtr& space) {
  auto in = openFile(path);
  return parseFilter(in, space);
}

EvPeriodicSequence parseSequence(std::istream& in, const SpacePtr& space) {
  std::vector<Line> lines = readLines(in);
  if (lines.empty()) throw ParseError(0, "empty sequence file");
  requireHeader(lines[0], "seq", 4);
  requireOnSpace(lines[0], *space);
  std::vector<std::size_t> pre, cycle;
  bool sawCycle = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    std::vector<std::size_t>* dst = nullptr;
    if (line.tokens[0] == "pre")
      dst = &pre;
    else if (line.tokens[0] == "cycle")
      dst = &cycle, sawCycle = true;
    else
      throw ParseError(line.number, "expected 'pre' or 'cycle'");
    for (std::size_t t = 1; t < line.tokens.size(); ++t)
      dst->push_back(pointIndex(*space, line.tokens[t], line.number));
  }
  if (!sawCycle || cycle.empty())
    throw ParseError(lines.back().number, "sequence needs a nonempty 'cycle' line");
  return EvPeriodicSequence(space, pre, cycle);
}

std::string sniffKind(const std::string& path) {
  auto in = openFile(path);
  std::vector<Line> lines = readLines(in);
  if (lines.empty()) throw ParseError(0, "empty file " + path);
  return lines[0].tokens[0];
}

std::string formatCompletionTable(const Completion& c) {
  std::ostringstream out;
  out << "kind\tname\tgenerator\tvalues\n";
  for (const CompletionPoint& p : c.points) {
    out << "point\t" << p.name << "\t";
    for (std::size_t i = 0; i < p.generator.size(); ++i) {
      if (i) out << ",";
      out << c.source->pointName(p.generator[i]);
    }
    out << "\t";
    for (std::size_t i = 0; i < p.module.size(); ++i) {
      if (i) out << ",";
      out << p.module[i].str();
    }
    out << "\n";
  }
  for (std::size_t a = 0; a < c.source->size(); ++a)
    out << "embed\t" << c.source->pointName(a) << "\t"
        << c.result->pointName(c.embedding(a)) << "\t\n";
  return out.str();
}

}  // namespace vcat
