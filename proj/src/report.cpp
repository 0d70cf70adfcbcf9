#include "groupft/report.hpp"

#include <cmath>
#include <limits>

#include "groupft/errors.hpp"

namespace groupft {

namespace {

// JSON has no encoding for non-finite numbers; keep them readable.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double read_number(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw FormatError("report: expected a number, got " + v.dump());
}

}  // namespace

CheckResult make_check(std::string name, double metric, double tolerance, json context) {
  CheckResult c;
  c.name = std::move(name);
  c.metric = metric;
  c.tolerance = tolerance;
  c.passed = metric <= tolerance;
  c.context = std::move(context);
  return c;
}

bool VerificationReport::overall() const { return first_failure() == nullptr; }

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

json to_json(const CheckResult& check) {
  return json{{"name", check.name},
              {"metric", number(check.metric)},
              {"tolerance", number(check.tolerance)},
              {"passed", check.passed},
              {"context", check.context}};
}

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return json{{"version", kReportVersion},
              {"suite", report.suite},
              {"backend", report.backend},
              {"config", report.config},
              {"checks", std::move(checks)},
              {"overall", report.overall()}};
}

VerificationReport report_from_json(const json& doc) {
  try {
    if (!doc.contains("version")) throw FormatError("report: missing version field");
    VerificationReport r;
    r.suite = doc.at("suite").get<std::string>();
    r.backend = doc.at("backend");
    r.config = doc.at("config");
    for (const auto& c : doc.at("checks")) {
      CheckResult check;
      check.name = c.at("name").get<std::string>();
      check.metric = read_number(c.at("metric"));
      check.tolerance = read_number(c.at("tolerance"));
      check.passed = c.at("passed").get<bool>();
      check.context = c.value("context", json::object());
      r.checks.push_back(std::move(check));
    }
    return r;
  } catch (const json::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
}

}  // namespace groupft
