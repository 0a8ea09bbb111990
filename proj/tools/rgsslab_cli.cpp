#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rgsslab/errors.hpp"
#include "rgsslab/harness.hpp"
#include "rgsslab/parallel.hpp"

using namespace rgsslab;

namespace {

// 0: every check passed; 1: a check failed; 2: the scenario or the command line is malformed.
constexpr int kPass = 0, kCheckFailure = 1, kParseError = 2;

void write_report(const std::string& path, const std::string& format, const std::vector<harness::ReportRow>& rows,
                  bool timing) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::ParseError, "cannot write report " + path);
    if (format == "json")
        harness::write_json(out, rows, timing);
    else
        harness::write_csv(out, rows, timing);
}

std::vector<harness::ReportRow> run_all(const std::vector<harness::Scenario>& scenarios) {
    std::vector<harness::ReportRow> rows;
    for (const auto& s : scenarios) {
        auto r = harness::run_scenario(s);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_env();
    CLI::App app{"Scenario runner for the renormalization-group symmetry checks"};
    app.require_subcommand(1);

    std::string scenario_path, suite = "quick", format = "csv", out_path;
    double perturb = 0;
    bool no_timing = false;

    auto* run = app.add_subcommand("run", "Run one scenario file and write its report");
    run->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    run->add_option("--out", out_path, "Report path; defaults to the scenario's output or <name>.report.<format>");
    run->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    run->add_flag("--no-timing", no_timing, "Write 0 in the ms column so reports are byte-comparable");

    auto* verify = app.add_subcommand("verify", "Run a built-in acceptance suite and print a summary");
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember({"quick", "all"}));
    verify->add_option("--scorer-perturb", perturb, "Relative error injected into the Scorer table (fault injection)");
    verify->add_option("--out", out_path, "Optional report path");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    verify->add_flag("--no-timing", no_timing, "Write 0 in the ms column");

    auto* report = app.add_subcommand("report", "Run a scenario or suite and write only the report");
    report->add_option("--format", format, "Report format")->required()->check(CLI::IsMember({"csv", "json"}));
    report->add_option("--out", out_path, "Report path")->required();
    auto* rs = report->add_option("--scenario", scenario_path, "Scenario JSON file");
    auto* su = report->add_option("--suite", suite, "Suite name")->check(CLI::IsMember({"quick", "all"}));
    rs->excludes(su);
    report->add_flag("--no-timing", no_timing, "Write 0 in the ms column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kParseError;
    }

    try {
        std::vector<harness::ReportRow> rows;
        if (run->parsed()) {
            const auto s = harness::load_scenario(scenario_path);
            rows = harness::run_scenario(s);
            std::string path = out_path;
            if (path.empty()) path = s.output;
            if (path.empty()) path = s.name + ".report." + format;
            if (out_path.empty() && !s.output.empty() && std::filesystem::path(path).extension() == ".json") format = "json";
            write_report(path, format, rows, !no_timing);
            harness::write_summary(std::cout, rows);
            std::cout << "report: " << path << '\n';
        } else if (verify->parsed()) {
            rows = run_all(harness::builtin_suite(suite, perturb));
            harness::write_summary(std::cout, rows);
            if (!out_path.empty()) write_report(out_path, format, rows, !no_timing);
        } else {
            if (!scenario_path.empty())
                rows = harness::run_scenario(harness::load_scenario(scenario_path));
            else
                rows = run_all(harness::builtin_suite(suite));
            write_report(out_path, format, rows, !no_timing);
        }
        return harness::all_pass(rows) ? kPass : kCheckFailure;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return e.kind() == ErrorKind::ParseError ? kParseError : kCheckFailure;
    }
}
