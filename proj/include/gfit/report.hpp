#ifndef GFIT_REPORT_HPP
#define GFIT_REPORT_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfit/subgroup.hpp"

namespace gfit {

inline constexpr const char *kToolVersion = "gfit 1.0.0";

using Json = nlohmann::ordered_json;

// One failed check. `lhs` and `rhs` are the two sides of the failed
// equivalence or equality, rendered as text (cycle notation for elements).
struct Violation {
  std::string group;
  std::string subject;
  std::optional<std::size_t> k;
  std::string property;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Violation &, const Violation &) = default;
};

struct ResourceNote {
  std::string group;
  std::string message;
  std::size_t partial = 0;

  friend bool operator==(const ResourceNote &, const ResourceNote &) = default;
};

struct SuiteReport {
  std::string suite;
  std::string statement;
  std::size_t cases = 0;
  std::size_t passes = 0;
  std::vector<std::string> notes;
  // Suite-specific recorded values (e.g. |J| per involutory case).
  Json observations = Json::array();
  std::vector<Violation> violations;
  std::vector<ResourceNote> resource_errors;
  std::optional<double> seconds;

  // "fail" with any violation, else "incomplete" if a cap was hit, else "pass".
  std::string status() const;

  friend bool operator==(const SuiteReport &, const SuiteReport &) = default;
};

struct GroupSummary {
  std::string name;
  std::string provenance;
  std::size_t degree = 0;
  std::size_t order = 0;
  std::string fingerprint;
  std::optional<std::size_t> fitting_order;
  std::optional<std::size_t> gen_fitting_order;
  std::optional<std::size_t> gen_fitting_height;
  std::optional<std::size_t> fitting_height;
  std::optional<std::size_t> insoluble_length;
  std::string subjects; // "all elements" or "class representatives"

  friend bool operator==(const GroupSummary &, const GroupSummary &) = default;
};

struct VerdictReport {
  std::string tool_version = kToolVersion;
  std::string corpus;
  std::string suite;
  std::vector<GroupSummary> groups;
  std::vector<SuiteReport> suites;

  std::string status() const;
  std::size_t violation_count() const;
  bool resource_limited() const;

  friend bool operator==(const VerdictReport &, const VerdictReport &) = default;
};

// 0 all pass, 1 any violation, 2 a resource cap was hit (no violations).
int exit_code(const VerdictReport &report);

Json to_json(const VerdictReport &report);
VerdictReport report_from_json(const Json &j);

// Pretty-printed JSON with a trailing newline; stable key order.
std::string serialize_report(const VerdictReport &report);
VerdictReport parse_report(const std::string &text);

// Throws std::runtime_error on I/O failure.
void write_report(const VerdictReport &report, const std::filesystem::path &path);
VerdictReport read_report(const std::filesystem::path &path);

// `<corpus>-<suite>-report.json`
std::string report_filename(const std::string &corpus, const std::string &suite);

// Deterministic text form of a subgroup: order plus a canonical generating
// set chosen from its element mask.
std::string canonical_description(const Subgroup &s);

} // namespace gfit

#endif
