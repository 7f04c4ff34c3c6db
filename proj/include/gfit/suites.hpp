#ifndef GFIT_SUITES_HPP
#define GFIT_SUITES_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gfit/corpus.hpp"
#include "gfit/report.hpp"

namespace gfit {

// Deliberate engine faults, used only to test that the harness notices.
enum class FaultInjection { none, trivial_fitting };

struct SuiteConfig {
  std::string suite = "all";
  std::string corpus = "builtin:small-std";
  // Above this order, per-element suites quantify over class representatives.
  std::size_t max_order = 2000;
  std::size_t lattice_max_order = 360;
  // Engel iteration cap; 0 means |G|.
  std::size_t k_cap = 0;
  std::size_t jobs = 1;
  bool crosschecks = true;
  // Record wall-clock seconds per suite (makes reports non-reproducible).
  bool timing = false;
  FaultInjection fault = FaultInjection::none;
};

// Recognised suite ids, in the order `all` runs them ("all" excluded).
const std::vector<std::string> &suite_ids();

// Plain statement of what a suite checks; ValidationError for unknown ids.
std::string suite_statement(const std::string &id);

// Throws ValidationError for an unknown suite id or a zero cap.
void validate(const SuiteConfig &config);

VerdictReport run_suite(const SuiteConfig &config, const NamedCorpus &corpus);
// Loads config.corpus first.
VerdictReport run_suite(const SuiteConfig &config);

struct AnalysisOptions {
  bool crosscheck = true;
  // Per class representative x: Engel stabilisation data and Baer verdict.
  bool engel = false;
  std::size_t k_cap = 0;
};

Json analyze(const CorpusEntry &entry, const AnalysisOptions &options = {});

// Runs body(0..n-1) on up to `jobs` threads. Exceptions are rethrown on the
// caller's thread, lowest index first.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)> &body);

} // namespace gfit

#endif
