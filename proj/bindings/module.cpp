// Python bindings. Spaces travel as the text format, scalars as strings;
// the heavy lifting stays in the library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vcat/catalog.hpp"
#include "vcat/completion.hpp"
#include "vcat/filters.hpp"
#include "vcat/flatness.hpp"
#include "vcat/io.hpp"

namespace py = pybind11;
using namespace vcat;

namespace {

SpacePtr spaceFromText(const std::string& text) {
  std::istringstream in(text);
  return parseSpace(in);
}

std::vector<QValue> parseValues(const SpacePtr& s, const std::vector<std::string>& raw) {
  if (raw.size() != s->size())
    throw py::value_error("expected " + std::to_string(s->size()) + " values");
  std::vector<QValue> out;
  out.reserve(raw.size());
  for (const std::string& r : raw) out.push_back(parseQValue(r, s->base(), 0));
  return out;
}

std::vector<std::string> valueStrings(std::span<const QValue> vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (const QValue& v : vs) out.push_back(v.str());
  return out;
}

CompletionNotion notionOf(const std::string& text) {
  auto n = parseNotion(text);
  if (!n) throw py::value_error("unknown completion notion '" + text + "'");
  return *n;
}

FlatnessClass classOf(const std::string& text) {
  if (text == "p0") return FlatnessClass::P0;
  if (text == "p1") return FlatnessClass::P1;
  if (text == "p2") return FlatnessClass::P2;
  throw py::value_error("unknown flatness class '" + text + "'");
}

}  // namespace

PYBIND11_MODULE(_vcat, m) {
  m.doc() = "finite enriched spaces: completions, flatness, filters";

  py::class_<Space, std::shared_ptr<Space>>(m, "Space")
      .def_property_readonly("name", &Space::name)
      .def_property_readonly("points", &Space::points)
      .def_property_readonly("size", &Space::size)
      .def_property_readonly("base", [](const Space& s) { return baseName(s.base()); })
      .def_property_readonly("symmetric", &Space::isSymmetric)
      .def("dist",
           [](const Space& s, const std::string& x, const std::string& y) {
             auto i = s.indexOf(x), j = s.indexOf(y);
             if (!i || !j) throw py::value_error("unknown point");
             return s.dist(*i, *j).str();
           })
      .def("__repr__", [](const Space& s) {
        return "<Space " + s.name() + " (" + std::to_string(s.size()) + " points)>";
      });

  m.def("parse_space", &spaceFromText, py::arg("text"));
  m.def("format_space", [](const SpacePtr& s) { return formatSpace(*s); });
  m.def("load_space", &parseSpaceFile, py::arg("path"));

  m.def("validate_space", [](const SpacePtr& s) { return validateSpace(*s); });

  m.def(
      "complete",
      [](const SpacePtr& s, const std::string& notion) {
        Completion c = complete(s, notionOf(notion));
        py::dict out;
        out["result"] = c.result;
        py::list pts;
        for (const CompletionPoint& p : c.points) {
          py::dict row;
          row["name"] = p.name;
          py::list gen;
          for (std::size_t g : p.generator) gen.append(c.source->pointName(g));
          row["generator"] = gen;
          row["module"] = valueStrings(p.module);
          pts.append(row);
        }
        out["points"] = pts;
        py::dict embed;
        for (std::size_t a = 0; a < c.source->size(); ++a)
          embed[py::str(c.source->pointName(a))] = c.result->pointName(c.embedding(a));
        out["embedding"] = embed;
        return out;
      },
      py::arg("space"), py::arg("notion") = "p1");

  m.def("is_complete", [](const SpacePtr& s, const std::string& notion) {
    return isComplete(s, notionOf(notion));
  });

  m.def("is_flat", [](const SpacePtr& s, const std::vector<std::string>& values,
                      const std::string& cls) {
    LeftModule mod(s, parseValues(s, values));
    switch (classOf(cls)) {
      case FlatnessClass::P0: return isP0Flat(mod);
      case FlatnessClass::P1: return isP1Flat(mod);
      case FlatnessClass::P2: return isP2Flat(mod);
    }
    return false;
  });

  m.def(
      "flatness_oracle",
      [](const SpacePtr& s, const std::vector<std::string>& values, const std::string& cls,
         std::uint64_t budget) {
        OracleOptions opt;
        opt.budget = budget;
        OracleResult r = flatnessOracle(LeftModule(s, parseValues(s, values)), classOf(cls), opt);
        py::dict out;
        out["flat"] = r.flat;
        out["checks"] = r.checks;
        out["witness"] = r.witness;
        return out;
      },
      py::arg("space"), py::arg("values"), py::arg("cls") = "p1",
      py::arg("budget") = std::uint64_t{50'000'000});

  m.def("filter_distance", [](const SpacePtr& s, const std::vector<std::string>& gen1,
                              const std::vector<std::string>& gen2) {
    auto toFilter = [&](const std::vector<std::string>& names) {
      std::vector<std::size_t> idx;
      for (const std::string& n : names) {
        auto i = s->indexOf(n);
        if (!i) throw py::value_error("unknown point '" + n + "'");
        idx.push_back(*i);
      }
      return PrincipalFilter(s, idx);
    };
    return wfHomDistance(toFilter(gen1), toFilter(gen2)).str();
  });

  m.def("filter_flatness", [](const SpacePtr& s, const std::vector<std::string>& gen) {
    std::vector<std::size_t> idx;
    for (const std::string& n : gen) {
      auto i = s->indexOf(n);
      if (!i) throw py::value_error("unknown point '" + n + "'");
      idx.push_back(*i);
    }
    PrincipalFilter f(s, idx);
    py::dict out;
    out["weakly_flat"] = isWeaklyFlat(f);
    out["flat"] = isFlat(f);
    out["cauchy"] = isCauchy(f);
    out["diameter"] = diameter(f).str();
    return out;
  });

  m.def("zero_quotient", [](const SpacePtr& s) {
    Quotient q = zeroQuotient(s);
    py::dict out;
    out["space"] = q.space;
    py::list classes;
    for (const auto& cls : q.members) {
      py::list row;
      for (std::size_t i : cls) row.append(s->pointName(i));
      classes.append(row);
    }
    out["classes"] = classes;
    return out;
  });

  m.def("hausdorff", &hausdorffConstruction, py::arg("space"));
  m.def("bool_encode", &boolEncode, py::arg("space"));
  m.def("bridge_check", [](const SpacePtr& p, const std::string& notion) {
    return bridgeCheck(p, notionOf(notion));
  });
  m.def("spaces_isomorphic", &spacesIsomorphic);

  m.def("example_t3", &exampleT3);
  m.def("example_z2", &exampleZ2);
  m.def("example_antichain2", &exampleAntichain2);

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidModule>(m, "InvalidModuleError", PyExc_ValueError);
  py::register_exception<BaseMismatch>(m, "BaseMismatchError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceededError", PyExc_RuntimeError);
}
