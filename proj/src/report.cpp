#include "gfit/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gfit/errors.hpp"

namespace gfit {

std::string SuiteReport::status() const {
  if (!violations.empty())
    return "fail";
  if (!resource_errors.empty())
    return "incomplete";
  return "pass";
}

std::size_t VerdictReport::violation_count() const {
  std::size_t n = 0;
  for (const auto &s : suites)
    n += s.violations.size();
  return n;
}

bool VerdictReport::resource_limited() const {
  return std::any_of(suites.begin(), suites.end(), [](const SuiteReport &s) { return !s.resource_errors.empty(); });
}

std::string VerdictReport::status() const {
  if (violation_count() > 0)
    return "fail";
  if (resource_limited())
    return "incomplete";
  return "pass";
}

int exit_code(const VerdictReport &report) {
  if (report.violation_count() > 0)
    return 1;
  if (report.resource_limited())
    return 2;
  return 0;
}

namespace {

template <typename T> Json optional_json(const std::optional<T> &v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T> std::optional<T> optional_from(const Json &j, const char *key) {
  if (!j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  return j.at(key).get<T>();
}

Json violation_json(const Violation &v) {
  return Json{{"group", v.group},       {"subject", v.subject}, {"k", optional_json(v.k)},
              {"property", v.property}, {"lhs", v.lhs},         {"rhs", v.rhs}};
}

Violation violation_from(const Json &j) {
  return Violation{j.at("group").get<std::string>(), j.at("subject").get<std::string>(),
                   optional_from<std::size_t>(j, "k"),   j.at("property").get<std::string>(),
                   j.at("lhs").get<std::string>(),     j.at("rhs").get<std::string>()};
}

Json suite_json(const SuiteReport &s) {
  Json j;
  j["suite"] = s.suite;
  j["statement"] = s.statement;
  j["status"] = s.status();
  j["cases"] = s.cases;
  j["passes"] = s.passes;
  j["notes"] = s.notes;
  j["observations"] = s.observations;
  j["violations"] = Json::array();
  for (const auto &v : s.violations)
    j["violations"].push_back(violation_json(v));
  j["resource_errors"] = Json::array();
  for (const auto &r : s.resource_errors)
    j["resource_errors"].push_back(Json{{"group", r.group}, {"message", r.message}, {"partial", r.partial}});
  if (s.seconds)
    j["seconds"] = *s.seconds;
  return j;
}

SuiteReport suite_from(const Json &j) {
  SuiteReport s;
  s.suite = j.at("suite").get<std::string>();
  s.statement = j.at("statement").get<std::string>();
  s.cases = j.at("cases").get<std::size_t>();
  s.passes = j.at("passes").get<std::size_t>();
  s.notes = j.at("notes").get<std::vector<std::string>>();
  s.observations = j.at("observations");
  for (const auto &v : j.at("violations"))
    s.violations.push_back(violation_from(v));
  for (const auto &r : j.at("resource_errors"))
    s.resource_errors.push_back(ResourceNote{r.at("group").get<std::string>(), r.at("message").get<std::string>(),
                                             r.at("partial").get<std::size_t>()});
  s.seconds = optional_from<double>(j, "seconds");
  if (j.at("status").get<std::string>() != s.status())
    throw ParseError("suite " + s.suite + ": status does not match its violations");
  return s;
}

Json group_json(const GroupSummary &g) {
  return Json{{"name", g.name},
              {"provenance", g.provenance},
              {"degree", g.degree},
              {"order", g.order},
              {"fingerprint", g.fingerprint},
              {"fitting_order", optional_json(g.fitting_order)},
              {"gen_fitting_order", optional_json(g.gen_fitting_order)},
              {"gen_fitting_height", optional_json(g.gen_fitting_height)},
              {"fitting_height", optional_json(g.fitting_height)},
              {"insoluble_length", optional_json(g.insoluble_length)},
              {"subjects", g.subjects}};
}

GroupSummary group_from(const Json &j) {
  GroupSummary g;
  g.name = j.at("name").get<std::string>();
  g.provenance = j.at("provenance").get<std::string>();
  g.degree = j.at("degree").get<std::size_t>();
  g.order = j.at("order").get<std::size_t>();
  g.fingerprint = j.at("fingerprint").get<std::string>();
  g.fitting_order = optional_from<std::size_t>(j, "fitting_order");
  g.gen_fitting_order = optional_from<std::size_t>(j, "gen_fitting_order");
  g.gen_fitting_height = optional_from<std::size_t>(j, "gen_fitting_height");
  g.fitting_height = optional_from<std::size_t>(j, "fitting_height");
  g.insoluble_length = optional_from<std::size_t>(j, "insoluble_length");
  g.subjects = j.at("subjects").get<std::string>();
  return g;
}

} // namespace

Json to_json(const VerdictReport &report) {
  Json j;
  j["tool_version"] = report.tool_version;
  j["corpus"] = report.corpus;
  j["suite"] = report.suite;
  j["status"] = report.status();
  j["violations"] = report.violation_count();
  j["groups"] = Json::array();
  for (const auto &g : report.groups)
    j["groups"].push_back(group_json(g));
  j["suites"] = Json::array();
  for (const auto &s : report.suites)
    j["suites"].push_back(suite_json(s));
  return j;
}

VerdictReport report_from_json(const Json &j) {
  try {
    VerdictReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.corpus = j.at("corpus").get<std::string>();
    r.suite = j.at("suite").get<std::string>();
    for (const auto &g : j.at("groups"))
      r.groups.push_back(group_from(g));
    for (const auto &s : j.at("suites"))
      r.suites.push_back(suite_from(s));
    if (j.at("status").get<std::string>() != r.status())
      throw ParseError("report status does not match its suites");
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string serialize_report(const VerdictReport &report) { return to_json(report).dump(2) + "\n"; }

VerdictReport parse_report(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return report_from_json(j);
}

void write_report(const VerdictReport &report, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << serialize_report(report);
  out.flush();
  if (!out)
    throw std::runtime_error("failed writing " + path.string());
}

VerdictReport read_report(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_report(buf.str());
}

std::string report_filename(const std::string &corpus, const std::string &suite) {
  std::string name = corpus + "-" + suite + "-report.json";
  for (char &c : name)
    if (c == '/' || c == '(' || c == ')' || c == ',' || c == ' ' || c == ':')
      c = '_';
  return name;
}

std::string canonical_description(const Subgroup &s) {
  return Subgroup::from_mask(s.parent(), s.mask()).describe();
}

} // namespace gfit
