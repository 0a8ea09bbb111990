#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace rgsslab::harness {

inline constexpr const char* kScenarioSchema = "rgsslab.scenario/1";
inline constexpr const char* kReportSchema = "rgsslab.report/1";

struct CheckSpec {
    std::string id;
    double tolerance;
};

// A parsed and validated scenario; params holds the kind-specific keys.
struct Scenario {
    std::string name;
    std::string kind;
    nlohmann::json params = nlohmann::json::object();
    std::vector<CheckSpec> checks;
    std::uint64_t seed = 1;
    std::string output;
};

// Both raise Error(ParseError) naming the offending key; nothing is computed.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);

// Kinds and their check ids, in registry order.
std::vector<std::string> scenario_kinds();
std::vector<std::string> check_ids(const std::string& kind);

struct ReportRow {
    // "<scenario>/<check>".
    std::string check_id;
    // Worst probe, "name=value;..." with 6 significant digits.
    std::string probe;
    double measured = 0, reference = 0, residual = 0, tolerance = 0;
    // Invariant: pass == (|residual| <= tolerance).
    bool pass = false;
    double ms = 0;
    // The identity being checked.
    std::string relation;
    // Set when the check raised instead of producing a value.
    std::string error;
};

// Runs every check of the scenario. A check that raises yields a failed row; the others still run.
std::vector<ReportRow> run_scenario(const Scenario& s);

bool all_pass(const std::vector<ReportRow>& rows);

// Built-in suites "quick" and "all". scorer_perturb is forwarded to every plasma scenario.
std::vector<Scenario> builtin_suite(const std::string& name, double scorer_perturb = 0);

// Columns check_id,probe,measured,reference,residual,tolerance,pass,ms; reals as %.17g. With
// include_ms = false the ms column is written as 0, which makes reports byte-comparable.
void write_csv(std::ostream& os, const std::vector<ReportRow>& rows, bool include_ms = true);
void write_json(std::ostream& os, const std::vector<ReportRow>& rows, bool include_ms = true);

// Fixed-width summary for terminals.
void write_summary(std::ostream& os, const std::vector<ReportRow>& rows);

}  // namespace rgsslab::harness
