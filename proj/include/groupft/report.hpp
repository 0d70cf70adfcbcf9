#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace groupft {

using json = nlohmann::ordered_json;

/// Version tag written into every report document.
inline constexpr std::string_view kReportVersion = "1.0";

/// One named certification. passed ⇔ metric ≤ tolerance (NaN never passes).
struct CheckResult {
  std::string name;
  double metric = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  json context = json::object();
};

CheckResult make_check(std::string name, double metric, double tolerance,
                       json context = json::object());

struct VerificationReport {
  std::string suite;
  json backend = json::object();
  json config = json::object();
  std::vector<CheckResult> checks;

  bool overall() const;
  /// First failing check, or nullptr when everything passed.
  const CheckResult* first_failure() const;
  void append(const VerificationReport& other);
};

json to_json(const CheckResult& check);
json to_json(const VerificationReport& report);
VerificationReport report_from_json(const json& doc);

}  // namespace groupft
