// Command line front end: validate inputs, materialize completions, test
// flatness two ways, measure filter distances and run the verification
// suites. Exit codes: 0 success, 1 property violation, 2 input error,
// 3 enumeration budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vcat/catalog.hpp"
#include "vcat/completion.hpp"
#include "vcat/filters.hpp"
#include "vcat/flatness.hpp"
#include "vcat/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

std::uint64_t readBudgetEnv() {
  const char* raw = std::getenv("QC_BUDGET");
  if (!raw || !*raw) return 50'000'000ull;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (!end || *end != '\0' || v == 0) throw vcat::ParseError(0, "QC_BUDGET must be a positive integer");
  return v;
}

void writeOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

vcat::PrincipalFilter loadFilterish(const std::string& path, const vcat::SpacePtr& space) {
  const std::string kind = vcat::sniffKind(path);
  if (kind == "filter") return vcat::parseFilterFile(path, space);
  if (kind == "module") {
    vcat::ModuleFile mf = vcat::parseModuleFile(path, space);
    if (!mf.isLeft) throw vcat::ParseError(0, path + ": need a left module to induce a filter");
    return vcat::filterOfModule(vcat::LeftModule(space, mf.values));
  }
  throw vcat::ParseError(0, path + ": expected a filter or module file, found '" + kind + "'");
}

int cmdValidate(const std::string& file, const std::string& spaceFile) {
  const std::string kind = vcat::sniffKind(file);
  if (kind == "space") {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    // Parse shape first, then report law violations individually.
    vcat::SpacePtr s = vcat::parseSpace(in);
    std::vector<std::string> bad = vcat::validateSpace(*s);
    for (const std::string& b : bad) std::cout << b << "\n";
    if (!bad.empty()) return kViolation;
    std::cout << "space " << s->name() << ": ok (" << s->size() << " points, "
              << vcat::baseName(s->base()) << (s->isSymmetric() ? ", symmetric" : "") << ")\n";
    return kOk;
  }
  if (spaceFile.empty())
    throw vcat::ParseError(0, file + ": validating a '" + kind + "' file needs --space");
  vcat::SpacePtr s = vcat::parseSpaceFile(spaceFile);
  if (kind == "module") {
    vcat::ModuleFile mf = vcat::parseModuleFile(file, s);
    // Construction enforces the module law.
    try {
      if (mf.isLeft)
        vcat::LeftModule m(s, mf.values);
      else
        vcat::RightModule m(s, mf.values);
    } catch (const vcat::InvalidModule& e) {
      std::cout << e.what() << "\n";
      return kViolation;
    }
    std::cout << "module " << mf.name << ": ok (" << (mf.isLeft ? "left" : "right") << " on "
              << s->name() << ")\n";
    return kOk;
  }
  if (kind == "filter") {
    vcat::PrincipalFilter f = vcat::parseFilterFile(file, s);
    std::cout << "filter on " << s->name() << ": ok (" << f.generator().size()
              << " generator points)\n";
    return kOk;
  }
  if (kind == "seq") {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    vcat::EvPeriodicSequence q = vcat::parseSequence(in, s);
    std::cout << "seq on " << s->name() << ": ok (preperiod " << q.preperiod.size() << ", cycle "
              << q.cycle.size() << ")\n";
    return kOk;
  }
  throw vcat::ParseError(0, file + ": unknown directive '" + kind + "'");
}

int cmdComplete(const std::string& spaceFile, const std::string& notionText,
                const std::string& outPath, const std::string& tablePath) {
  auto notion = vcat::parseNotion(notionText);
  if (!notion) throw vcat::ParseError(0, "unknown completion notion '" + notionText + "'");
  vcat::SpacePtr s = vcat::parseSpaceFile(spaceFile);
  vcat::Completion c = vcat::complete(s, *notion);
  writeOut(outPath, vcat::formatSpace(*c.result));
  if (!tablePath.empty()) writeOut(tablePath, vcat::formatCompletionTable(c));
  return kOk;
}

int cmdFlat(const std::string& spaceFile, const std::string& moduleFile,
            const std::string& className, std::uint64_t budget) {
  vcat::SpacePtr s = vcat::parseSpaceFile(spaceFile);
  vcat::ModuleFile mf = vcat::parseModuleFile(moduleFile, s);
  if (!mf.isLeft) throw vcat::ParseError(0, moduleFile + ": flatness applies to left modules");
  vcat::LeftModule m(s, mf.values);

  vcat::FlatnessClass cls;
  bool closed;
  if (className == "p0") {
    cls = vcat::FlatnessClass::P0;
    closed = vcat::isP0Flat(m);
  } else if (className == "p1") {
    cls = vcat::FlatnessClass::P1;
    closed = vcat::isP1Flat(m);
  } else if (className == "p2") {
    cls = vcat::FlatnessClass::P2;
    closed = vcat::isP2Flat(m);
  } else {
    throw vcat::ParseError(0, "unknown flatness class '" + className + "'");
  }

  vcat::OracleOptions opt;
  opt.budget = budget;
  vcat::OracleResult r = vcat::flatnessOracle(m, cls, opt);

  std::cout << "space: " << s->name() << "\n"
            << "module: " << mf.name << "\n"
            << "class: " << vcat::flatnessClassName(cls) << "\n"
            << "closed-form: " << (closed ? "flat" : "not flat") << "\n"
            << "oracle: " << (r.flat ? "flat" : "not flat") << " (" << r.checks << " checks)\n";
  if (!r.witness.empty()) std::cout << "witness: " << r.witness << "\n";
  if (closed != r.flat) {
    std::cout << "routes disagree\n";
    return kViolation;
  }
  return kOk;
}

int cmdDist(const std::string& spaceFile, const std::string& f1, const std::string& f2) {
  vcat::SpacePtr s = vcat::parseSpaceFile(spaceFile);
  vcat::PrincipalFilter a = loadFilterish(f1, s);
  vcat::PrincipalFilter b = loadFilterish(f2, s);
  std::cout << vcat::wfHomDistance(a, b).str() << "\n";
  return kOk;
}

int cmdVerify(const vcat::SuiteOptions& opt) {
  std::vector<vcat::SuiteResult> results = vcat::runAllSuites(opt);
  bool anyFail = false, anyBudget = false;
  for (const vcat::SuiteResult& r : results) {
    std::cout << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks
              << " checks";
    if (r.failures) std::cout << ", " << r.failures << " failures";
    if (r.budgetExceeded) std::cout << ", budget exceeded";
    std::cout << ")\n";
    for (const std::string& note : r.notes) std::cout << "  " << note << "\n";
    anyFail = anyFail || r.failures > 0;
    anyBudget = anyBudget || r.budgetExceeded;
  }
  if (anyFail) return kViolation;
  if (anyBudget) return kBudget;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite enriched spaces: completions, flatness, filters"};
  app.require_subcommand(1);

  std::string file, spaceFile, moduleFile, notionText = "p1", outPath, tablePath;
  std::string className = "p1", distA, distB, gridText;
  vcat::SuiteOptions suiteOpt;

  CLI::App* validate = app.add_subcommand("validate", "check a space/module/filter/seq file");
  validate->add_option("file", file, "input file")->required();
  validate->add_option("--space", spaceFile, "carrier space (for non-space files)");

  CLI::App* completeCmd = app.add_subcommand("complete", "materialize a completion");
  completeCmd->add_option("space", file, "space file")->required();
  completeCmd->add_option("--notion", notionText, "p0|p1|p2|free|downsets|ideals|dmn");
  completeCmd->add_option("-o,--out", outPath, "write the completed space here (default stdout)");
  completeCmd->add_option("--table", tablePath, "also write a TSV of points and embeddings");

  CLI::App* flat = app.add_subcommand("flat", "closed-form and oracle flatness verdicts");
  flat->add_option("space", file, "space file")->required();
  flat->add_option("module", moduleFile, "left module file")->required();
  flat->add_option("--notion", className, "p0|p1|p2");

  CLI::App* dist = app.add_subcommand("dist", "distance between filters (or induced filters)");
  dist->add_option("space", file, "space file")->required();
  dist->add_option("from", distA, "filter or left module file")->required();
  dist->add_option("to", distB, "filter or left module file")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the law and theorem suites");
  verify->add_option("--max-points", suiteOpt.catalog.maxPoints, "metric catalog size cap")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4}));
  verify->add_option("--max-bool", suiteOpt.maxBoolPoints, "preorder catalog size cap")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4}));
  verify->add_option("--grid", gridText, "comma separated distance grid (default 0,1,2,inf)");
  verify->add_flag("--symmetric", suiteOpt.catalog.symmetricOnly, "symmetric spaces only");
  verify->add_option("--seed", suiteOpt.catalog.seed, "seed for randomized law sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const std::uint64_t budget = readBudgetEnv();
    if (validate->parsed()) return cmdValidate(file, spaceFile);
    if (completeCmd->parsed()) return cmdComplete(file, notionText, outPath, tablePath);
    if (flat->parsed()) return cmdFlat(file, moduleFile, className, budget);
    if (dist->parsed()) return cmdDist(file, distA, distB);
    if (verify->parsed()) {
      suiteOpt.budget = budget;
      if (!gridText.empty()) {
        suiteOpt.catalog.grid.clear();
        std::stringstream ss(gridText);
        std::string tok;
        while (std::getline(ss, tok, ','))
          suiteOpt.catalog.grid.push_back(vcat::parseQValue(tok, vcat::Base::RPlus, 0));
      }
      return cmdVerify(suiteOpt);
    }
  } catch (const vcat::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const vcat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const vcat::BaseMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const vcat::SpaceMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const vcat::InvalidModule& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  } catch (const vcat::EmptyKernel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const vcat::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
