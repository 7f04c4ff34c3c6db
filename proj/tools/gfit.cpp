// gfit: verification harness and invariant calculator for small
// permutation groups.
//
//   gfit verify --suite all --corpus builtin:small-std --jobs 4
//   gfit analyze 'builtin:symmetric(5)' --engel
//   gfit list --corpus corpus/small-std

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gfit/corpus.hpp"
#include "gfit/errors.hpp"
#include "gfit/report.hpp"
#include "gfit/suites.hpp"

namespace {

// Exit status for unusable input (bad flags, unreadable corpus, ...).
constexpr int kInputError = 3;

void print_summary(const gfit::VerdictReport &report, std::ostream &os) {
  for (const auto &s : report.suites) {
    os << s.suite << ": " << s.status() << " (" << s.passes << "/" << s.cases << " cases";
    if (!s.violations.empty())
      os << ", " << s.violations.size() << " violations";
    if (!s.resource_errors.empty())
      os << ", " << s.resource_errors.size() << " capped";
    os << ")\n";
  }
  os << "overall: " << report.status() << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"gfit - characteristic series and Engel-set verification for finite permutation groups"};
  app.require_subcommand(1);

  gfit::SuiteConfig config;
  std::string report_path;
  std::string crosschecks = "on";
  std::string fault = "none";
  auto *verify = app.add_subcommand("verify", "run verification suites over a corpus");
  verify->add_option("--suite", config.suite, "suite id or 'all'")->capture_default_str();
  verify->add_option("--corpus", config.corpus, "directory, .grp file, builtin:small-std or builtin:<spec>")
      ->capture_default_str();
  verify->add_option("--max-order", config.max_order, "exhaustive per-element quantification up to this order")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--lattice-max-order", config.lattice_max_order, "full subgroup lattices up to this order")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--k-cap", config.k_cap, "Engel iteration cap (0 = |G|)")->capture_default_str();
  verify->add_option("--jobs", config.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--report", report_path, "report path (default <corpus>-<suite>-report.json)");
  verify->add_option("--crosschecks", crosschecks, "run dual-algorithm checks inside the engine")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  verify->add_flag("--timing", config.timing, "record per-suite wall time in the report");
  verify->add_option("--inject-fault", fault, "test mode: deliberately break an engine routine")
      ->check(CLI::IsMember({"none", "trivial-fitting"}))
      ->group("");

  std::string selector;
  gfit::AnalysisOptions analysis;
  auto *analyze = app.add_subcommand("analyze", "print characteristic subgroups and series of groups");
  analyze->add_option("selector", selector, "builtin:<spec>, a .grp file, or a directory")->required();
  analyze->add_flag("--engel", analysis.engel, "include Engel data per class representative");
  analyze->add_option("--k-cap", analysis.k_cap, "Engel iteration cap (0 = |G|)");

  std::string list_corpus;
  auto *list = app.add_subcommand("list", "list suites, or the entries of a corpus");
  list->add_option("--corpus", list_corpus, "corpus selector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    // --help and friends exit 0; malformed command lines are input errors.
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  try {
    if (*verify) {
      config.crosschecks = crosschecks == "on";
      config.fault = fault == "trivial-fitting" ? gfit::FaultInjection::trivial_fitting : gfit::FaultInjection::none;
      gfit::validate(config);
      gfit::NamedCorpus corpus = gfit::load_corpus_selector(config.corpus);
      gfit::VerdictReport report = gfit::run_suite(config, corpus);
      if (report_path.empty())
        report_path = gfit::report_filename(corpus.name, config.suite);
      gfit::write_report(report, report_path);
      print_summary(report, std::cout);
      std::cout << "report: " << report_path << "\n";
      return gfit::exit_code(report);
    }
    if (*analyze) {
      gfit::NamedCorpus corpus = gfit::load_corpus_selector(selector);
      gfit::Json out = gfit::Json::array();
      for (const auto &e : corpus.entries)
        out.push_back(gfit::analyze(e, analysis));
      std::cout << (out.size() == 1 ? out.front() : out).dump(2) << "\n";
      return 0;
    }
    if (*list) {
      if (list_corpus.empty()) {
        for (const auto &id : gfit::suite_ids())
          std::cout << id << "\t" << gfit::suite_statement(id) << "\n";
        return 0;
      }
      for (const auto &e : gfit::load_corpus_selector(list_corpus).entries)
        std::cout << e.name << "\torder " << e.group->order() << "\tdegree " << e.group->degree() << "\t"
                  << e.provenance << "\n";
      return 0;
    }
  } catch (const gfit::ResourceError &e) {
    std::cerr << "gfit: resource cap: " << e.what() << " (partial " << e.partial() << ")\n";
    return 2;
  } catch (const gfit::ConsistencyError &e) {
    std::cerr << "gfit: internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "gfit: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
