#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "vcat/completion.hpp"
#include "vcat/filters.hpp"
#include "vcat/modules.hpp"
#include "vcat/space.hpp"

namespace vcat {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

// Scalar syntax: rplus accepts "inf", integers and fractions "p/q";
// bool accepts "0" and "1".
QValue parseQValue(const std::string& token, Base base, std::size_t line);

// Line-oriented formats, '#' starts a comment.
//
//   space NAME over rplus|bool
//   points p1 p2 ...
//   d X Y VALUE
//
// Omitted off-diagonal entries default to the initial value (rplus: inf,
// bool: 0); the diagonal is fixed at unit and may only be restated as such.
SpacePtr parseSpace(std::istream& in);
SpacePtr parseSpaceFile(const std::string& path);
std::string formatSpace(const Space& s);

//   module NAME on SPACE left|right
//   m X VALUE        (every point exactly once)
struct ModuleFile {
  std::string name;
  bool isLeft = true;
  std::vector<QValue> values;
};
ModuleFile parseModule(std::istream& in, const SpacePtr& space);
ModuleFile parseModuleFile(const std::string& path, const SpacePtr& space);

//   filter NAME on SPACE
//   gen x y ...      (one or more lines, union taken)
PrincipalFilter parseFilter(std::istream& in, const SpacePtr& space);
PrincipalFilter parseFilterFile(const std::string& path, const SpacePtr& space);

//   seq NAME on SPACE
//   pre x y ...      (optional)
//   cycle x y ...    (required, nonempty)
EvPeriodicSequence parseSequence(std::istream& in, const SpacePtr& space);

// First directive word of a file ("space", "module", "filter", "seq").
std::string sniffKind(const std::string& path);

// Completion table: a TSV with one row per completion point (name,
// generator, module values in source point order) and one row per source
// point recording the embedding.
std::string formatCompletionTable(const Completion& c);

}  // namespace vcat
