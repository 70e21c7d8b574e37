// Acceptance gate. Each criterion prints one PASS/FAIL line; the exit code
// is the number of failed criteria. Time limits and catalog parameters are
// pinned here, not configurable.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vcat/catalog.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, bool pass, const std::string& label, const std::string& detail,
            const std::vector<std::string>& notes = {}) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " - " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  for (const std::string& n : notes) std::cout << "    " << n << "\n";
  if (!pass) ++failures;
}

// A suite criterion passes when the suite has zero failures, stayed within
// budget, and finished under the pinned wall-clock limit.
template <class Fn>
void suiteCriterion(int id, const std::string& label, double limitSeconds, Fn&& run) {
  const auto start = Clock::now();
  vcat::SuiteResult r = run();
  const double elapsed = secondsSince(start);
  std::ostringstream detail;
  detail << r.checks << " checks, " << r.failures << " failures, " << elapsed << " s";
  if (r.budgetExceeded) detail << ", budget exceeded";
  bool pass = r.passed() && elapsed < limitSeconds;
  if (r.passed() && elapsed >= limitSeconds) detail << ", over the " << limitSeconds << " s limit";
  report(id, pass, label, detail.str(), r.notes);
}

std::uint64_t envBudget() {
  const char* raw = std::getenv("QC_BUDGET");
  if (!raw || !*raw) return 50'000'000ull;
  return std::strtoull(raw, nullptr, 10);
}

std::string envOr(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return (v && *v) ? std::string(v) : fallback;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int exitCode = -1;
  std::string output;
};

// Run a shell command, capturing stdout+stderr.
RunResult runCli(const std::string& command) {
  static int counter = 0;
  auto capture = std::filesystem::temp_directory_path() /
                 ("vcat_acc_" + std::to_string(++counter) + ".out");
  std::string full = command + " > " + capture.string() + " 2>&1";
  int status = std::system(full.c_str());
  RunResult r;
  r.output = slurp(capture);
  std::filesystem::remove(capture);
  if (status < 0)
    r.exitCode = -1;
  else
    r.exitCode = (status & 0x7f) ? 128 : ((status >> 8) & 0xff);
  return r;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

void criterionCli() {
  const std::string cli = envOr("VCAT_CLI", "");
  const std::string data = envOr("VCAT_DATA", "data");
  const std::string golden = envOr("VCAT_GOLDEN", "tests/golden");
  std::vector<std::string> notes;
  bool pass = true;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 12) notes.push_back(what);
    }
  };

  if (cli.empty() || !std::filesystem::exists(cli)) {
    report(13, false, "cli goldens", "VCAT_CLI does not point at the binary");
    return;
  }

  const auto tmp = std::filesystem::temp_directory_path();
  struct Job {
    std::string args;     // after the binary name
    std::string goldenFile;  // expected stdout, "" to skip content check
    int code;
  };
  const std::vector<Job> jobs = {
      {"complete " + quoted(data + "/t3.space") + " --notion p1", "t3_p1.space", 0},
      {"complete " + quoted(data + "/t3.space") + " --notion p1 -o /dev/null --table -",
       "t3_p1.table", 0},
      {"complete " + quoted(data + "/z2.space") + " --notion p2", "z2_p2.space", 0},
      {"complete " + quoted(data + "/antichain2.space") + " --notion free", "antichain2_free.space",
       0},
      {"dist " + quoted(data + "/t3.space") + " " + quoted(data + "/ab.filter") + " " +
           quoted(data + "/b.filter"),
       "dist_ab_b.txt", 0},
      {"flat " + quoted(data + "/t3.space") + " " + quoted(data + "/interval.module") +
           " --notion p2",
       "flat_interval_p2.txt", 0},
      {"validate " + quoted(data + "/t3.space"), "", 0},
  };

  for (const Job& j : jobs) {
    RunResult first = runCli(quoted(cli) + " " + j.args);
    RunResult second = runCli(quoted(cli) + " " + j.args);
    expect(first.exitCode == j.code,
           j.args + ": exit " + std::to_string(first.exitCode) + ", want " +
               std::to_string(j.code));
    expect(first.output == second.output, j.args + ": output differs between invocations");
    if (!j.goldenFile.empty()) {
      std::filesystem::path gp = std::filesystem::path(golden) / j.goldenFile;
      expect(std::filesystem::exists(gp), "missing golden " + gp.string());
      if (std::filesystem::exists(gp))
        expect(first.output == slurp(gp), j.args + ": output differs from " + j.goldenFile);
    }
  }

  // Table output must also be stable through -o files.
  auto out1 = tmp / "vcat_acc_t3a.space", out2 = tmp / "vcat_acc_t3b.space";
  runCli(quoted(cli) + " complete " + quoted(data + "/t3.space") + " --notion p1 -o " +
         quoted(out1.string()));
  runCli(quoted(cli) + " complete " + quoted(data + "/t3.space") + " --notion p1 -o " +
         quoted(out2.string()));
  expect(slurp(out1) == slurp(out2) && !slurp(out1).empty(), "-o outputs differ");
  std::filesystem::remove(out1);
  std::filesystem::remove(out2);

  RunResult missing = runCli(quoted(cli) + " complete /nonexistent/x.space");
  expect(missing.exitCode == 2, "missing input: exit " + std::to_string(missing.exitCode) +
                                    ", want 2");
  RunResult starved = runCli("QC_BUDGET=1 " + quoted(cli) + " flat " + quoted(data + "/t3.space") +
                             " " + quoted(data + "/interval.module") + " --notion p1");
  expect(starved.exitCode == 3,
         "budget 1: exit " + std::to_string(starved.exitCode) + ", want 3");

  report(13, pass, "cli goldens", pass ? "all invocations byte-stable" : "", notes);
}

}  // namespace

int main() {
  vcat::SuiteOptions opt;
  opt.budget = envBudget();

  suiteCriterion(1, "quantale laws", 1.0, [&] { return vcat::suiteQuantaleLaws(1); });
  suiteCriterion(2, "closed form vs oracle", 600.0,
                 [&] { return vcat::suiteFlatnessOracle(opt); });
  suiteCriterion(3, "flatness hierarchy", 600.0,
                 [&] { return vcat::suiteFlatnessHierarchy(opt); });
  suiteCriterion(4, "reflection identities", 600.0, [&] { return vcat::suiteReflection(opt); });
  suiteCriterion(5, "filter hierarchy", 600.0, [&] { return vcat::suiteFilterHierarchy(opt); });
  suiteCriterion(6, "filter distances", 600.0, [&] { return vcat::suiteWfHom(opt); });
  suiteCriterion(7, "completion instances", 600.0,
                 [&] { return vcat::suiteCompletionInstances(); });
  suiteCriterion(8, "finite spaces are cauchy complete", 600.0,
                 [&] { return vcat::suiteFiniteCauchyComplete(opt); });
  suiteCriterion(9, "subset construction", 600.0, [&] { return vcat::suiteHausdorff(opt); });
  suiteCriterion(10, "universal property", 600.0,
                 [&] { return vcat::suiteUniversalProperty(opt); });
  suiteCriterion(11, "preorder bridge", 600.0, [&] { return vcat::suiteBridge(opt); });
  suiteCriterion(12, "constructive witnesses", 600.0,
                 [&] { return vcat::suiteConstructive(opt); });
  criterionCli();

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
