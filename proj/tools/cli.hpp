#ifndef FANOLINE_TOOLS_CLI_HPP
#define FANOLINE_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanoline/extension.hpp"
#include "fanoline/linescheme.hpp"

namespace fanoline::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct CheckResult {
  std::string entry;
  std::uint64_t seed = 0;
  std::string check;
  bool passed = false;
  std::string detail;
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  /// One line per entry, e.g. "L empty at all seeds".
  std::vector<std::pair<std::string, std::string>> entry_notes;

  std::size_t failures() const;
};

/// Runs the catalog entries (all by default) at seeds 1..seeds through the
/// chart pipeline and checks them against their expectations, plus the cone
/// scenarios. Never throws; errors become failed checks.
VerifySummary verify_all(const std::vector<std::string>& entries = {}, std::uint64_t seeds = 3, bool cones = true);

nlohmann::json line_report_json(const ChartAnalysis& a, const ProjectivePoint& x);
nlohmann::json tangent_cone_json(const TangentConeResult& t);
nlohmann::json second_form_json(const SecondFundamentalForm& sff, const LinesInBase& inclusion);
nlohmann::json extension_report_json(const ExtensionReport& r);
nlohmann::json verify_json(const VerifySummary& s);

/// Scenario files are JSON; see the README for the fields.
struct Scenario {
  ExtensionContext context;
  std::vector<Ideal> decomposition;
  std::vector<ProjectivePoint> singular_points;
};
Scenario parse_scenario(const nlohmann::json& doc);

/// Human-readable rendering of a report: one `key: value` line per field.
std::string render_text(const nlohmann::json& report);

/// argv without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fanoline::cli

#endif  // FANOLINE_TOOLS_CLI_HPP
