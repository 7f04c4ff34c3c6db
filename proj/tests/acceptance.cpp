// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "gfit/char_series.hpp"
#include "gfit/corpus.hpp"
#include "gfit/engel.hpp"
#include "gfit/suites.hpp"

using namespace gfit;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

int failures = 0;

void verdict(int id, bool ok, const std::string &what, const std::string &detail) {
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "  [" << detail << "]"
            << std::endl;
  failures += !ok;
}

struct SuiteRun {
  VerdictReport report;
  double seconds = 0;

  const SuiteReport &suite() const { return report.suites.front(); }
  bool clean() const {
    const auto &s = suite();
    return s.violations.empty() && s.resource_errors.empty() && s.cases > 0 && s.passes == s.cases;
  }
  std::string detail() const {
    const auto &s = suite();
    std::ostringstream os;
    os << s.passes << "/" << s.cases << " cases, " << s.violations.size() << " violations, "
       << s.resource_errors.size() << " cap hits, " << static_cast<int>(seconds + 0.5) << " s";
    return os.str();
  }
};

SuiteRun run(const NamedCorpus &corpus, const std::string &suite) {
  SuiteConfig config;
  config.suite = suite;
  auto start = Clock::now();
  SuiteRun r{run_suite(config, corpus), 0};
  r.seconds = since(start);
  for (const auto &v : r.suite().violations)
    std::cout << "  violation: " << v.group << " " << v.subject << " " << v.property << ": " << v.lhs << " | "
              << v.rhs << std::endl;
  return r;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void extremal_example() {
  auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t n : {5u, 6u, 7u}) {
    auto e = builtin("alternating(" + std::to_string(n) + ")");
    auto rep = j_set(e.automorphism("transposition"));
    const std::size_t j = rep.j_set.count();
    const std::size_t c = rep.fixed_points.order();
    ok = ok && j == 2 * n - 3 && c == factorial(n - 2);
    detail << "A_" << n << ": |J| = " << j << ", |C| = " << c << "; ";
  }
  const double secs = since(start);
  ok = ok && secs < 30;
  detail << static_cast<int>(secs + 0.5) << " s";
  verdict(1, ok, "A_n with an inner transposition has |J| = 2n-3 and |C| = (n-2)!", detail.str());
}

int run_cli(const std::string &args) {
  std::string cmd = std::string(GFIT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int main() {
  extremal_example();

  NamedCorpus corpus = load_corpus_selector("builtin:small-std");

  {
    auto r = run(corpus, "thmE");
    verdict(2, r.clean() && r.seconds < 300, "<E_k(alpha)> = G up to stabilisation when [G,alpha] = G",
            r.detail());
  }
  {
    auto r = run(corpus, "thmJ");
    verdict(3, r.clean(), "E_j(alpha) = J(alpha) beyond the 2-part bound and <J(alpha)> = G", r.detail());
  }
  {
    auto f = run(corpus, "thm11");
    auto l = run(corpus, "thm12");
    bool ok = f.clean() && l.clean() && f.seconds + l.seconds < 900;
    std::set<std::size_t> heights, lengths;
    for (const auto &g : f.report.groups) {
      if (g.order <= 2000 && g.subjects != "all elements")
        ok = false;
      heights.insert(g.gen_fitting_height.value_or(99));
      lengths.insert(g.insoluble_length.value_or(99));
    }
    ok = ok && heights == std::set<std::size_t>{0, 1, 2, 3} && lengths == std::set<std::size_t>{0, 1};
    verdict(4, ok, "x in F*_h iff min_k h*(<E_k(x)>) <= h, and the R_h analogue, exhaustive to order 2000",
            "h*: " + f.detail() + "; lambda: " + l.detail() + "; h* range " + std::to_string(heights.size()) +
                " values, lambda range " + std::to_string(lengths.size()) + " values");
  }
  {
    auto r = run(corpus, "cor15");
    verdict(5, r.clean(), "<E_k(x)> subnormal, H = K, and the minimum identities", r.detail());
  }
  {
    auto r = run(corpus, "baer");
    verdict(6, r.clean(), "Engel membership agrees with F(G) for every element", r.detail());
  }
  {
    auto r = run(corpus, "thm13");
    bool ok = r.clean() && r.seconds < 600;
    std::set<std::string> enumerated;
    for (const auto &o : r.suite().observations)
      enumerated.insert(o["group"].get<std::string>());
    std::size_t small = 0;
    for (const auto &g : r.report.groups)
      if (g.order <= 360) {
        ++small;
        ok = ok && enumerated.count(g.name);
      }
    verdict(7, ok, "Y(A) = G or A has a unique maximal overgroup, with descent checks",
            r.detail() + ", " + std::to_string(enumerated.size()) + "/" + std::to_string(small) +
                " groups of order <= 360 enumerated");
  }
  {
    auto r = run(corpus, "cor19");
    verdict(8, r.clean(), "log [G:F(G)] < 4 log |J|!", r.detail());
  }
  {
    auto r = run(corpus, "lem31");
    verdict(9, r.clean(), "intersection of C_G(alpha)^j over J equals Z(G) meet C_G(alpha)", r.detail());
  }
  {
    auto r = run(corpus, "engine-crosschecks");
    // Known values recomputed here, outside the suite.
    Subgroup s4 = Subgroup::whole(builtin("symmetric(4)").group);
    Subgroup s5 = Subgroup::whole(builtin("symmetric(5)").group);
    bool direct = fitting_subgroup(s4).order() == 4 && generalized_fitting(s5, true).order() == 60 &&
                  gen_fitting_height(s4) == 3 && insoluble_length(s5) == 1 &&
                  normal_subgroups(s4).members.size() == 4;
    verdict(10, r.clean() && direct, "engine cross-checks and known values",
            r.detail() + (direct ? ", known values reproduced" : ", known values differ"));
  }
  {
    auto start = Clock::now();
    fs::path dir = fs::current_path() / "determinism";
    fs::create_directories(dir);
    const std::string base = "verify --suite all --corpus builtin:small-std --report ";
    int c1 = run_cli(base + (dir / "jobs1-a.json").string() + " --jobs 1");
    int c2 = run_cli(base + (dir / "jobs1-b.json").string() + " --jobs 1");
    int c3 = run_cli(base + (dir / "jobs3.json").string() + " --jobs 3");
    std::string a = slurp(dir / "jobs1-a.json");
    std::string b = slurp(dir / "jobs1-b.json");
    std::string c = slurp(dir / "jobs3.json");
    bool ok = c1 == 0 && c2 == 0 && c3 == 0 && !a.empty() && a == b && a == c;
    verdict(11, ok, "repeated runs of all suites give byte-identical reports, also across --jobs",
            "exit codes " + std::to_string(c1) + "/" + std::to_string(c2) + "/" + std::to_string(c3) + ", " +
                std::to_string(a.size()) + " bytes, " + (a == b ? "" : "run 2 differs, ") +
                (a == c ? "" : "jobs 3 differs, ") + std::to_string(static_cast<int>(since(start) + 0.5)) + " s");
  }

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
