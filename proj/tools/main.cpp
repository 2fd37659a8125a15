#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vinfer/af_io.hpp"
#include "vinfer/engine.hpp"
#include "vinfer/report.hpp"
#include "vinfer/scenario_io.hpp"

namespace {

using namespace vinfer;

// Exit codes: 0 success, 1 domain or validation failure, 2 I/O failure.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("cannot write '" + path + "'");
}

// Prints diagnostics to stderr; returns false when any is fatal.
bool report_diagnostics(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    std::cerr << (d.severity == Diagnostic::Severity::Fatal ? "error: " : "warning: ")
              << d.message << "\n";
  }
  return !has_fatal(diags);
}

Scenario load_scenario(const std::string& path) {
  return parse_scenario(read_file(path));
}

// The framework after the whole script, plus the opposing-argument ids
// (rendered dashed in DOT exports).
std::pair<ArgumentationFramework, std::set<std::string>> final_framework(
    const Scenario& sc, const Trace& trace) {
  Session session(sc.expresser, sc.rules);
  for (const auto& step : trace.steps) session.observe(step.observation);
  std::set<std::string> blocking;
  for (const auto& arg : session.arguments()) {
    if (arg.polarity == Argument::Polarity::Opposes) blocking.insert(arg.id());
  }
  return {session.framework(), std::move(blocking)};
}

int cmd_validate(const std::string& path) {
  Scenario sc = load_scenario(path);
  return report_diagnostics(validate_scenario(sc)) ? 0 : 1;
}

int cmd_run(const std::string& path, bool trace_flag, const std::string& report_mode,
            const std::string& export_fmt, const std::string& out_path) {
  Scenario sc = load_scenario(path);
  if (!report_diagnostics(validate_scenario(sc))) return 1;
  Trace trace = simulate(sc);

  std::string report;
  if (report_mode == "structured") {
    report = render_report(trace, ReportMode::Structured);
  } else if (trace_flag || report_mode == "human") {
    report = render_report(trace, ReportMode::Human);
  } else {
    report = render_verdicts(trace.final_verdicts());
  }

  if (export_fmt.empty()) {
    std::cout << report;
    return 0;
  }
  auto [af, blocking] = final_framework(sc, trace);
  std::string payload = export_af(af, *af_format_from_name(export_fmt), blocking);
  if (out_path.empty()) {
    std::cout << payload;  // export replaces the report when piped
  } else {
    std::cout << report;
    write_file(out_path, payload);
  }
  return 0;
}

AfFormat sniff_format(const std::string& path, const std::string& format) {
  if (!format.empty()) return *af_format_from_name(format);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".tgf") return AfFormat::Tgf;
  return AfFormat::Apx;
}

int cmd_solve(const std::string& path, const std::string& format,
              const std::string& semantics) {
  std::string text = read_file(path);
  ArgumentationFramework af = sniff_format(path, format) == AfFormat::Tgf
                                  ? parse_tgf(text)
                                  : parse_apx(text);
  if (semantics == "complete") {
    for (const auto& extension : enumerate_complete(af)) {
      bool first = true;
      for (const auto& id : extension) {
        if (!first) std::cout << " ";
        first = false;
        std::cout << id;
      }
      std::cout << "\n";
    }
  } else {
    for (const auto& id : in_set(grounded(af))) std::cout << id << "\n";
  }
  return 0;
}

int cmd_export(const std::string& path, const std::string& format,
               const std::string& out_path) {
  Scenario sc = load_scenario(path);
  if (!report_diagnostics(validate_scenario(sc))) return 1;
  Trace trace = simulate(sc);
  auto [af, blocking] = final_framework(sc, trace);
  std::string payload = export_af(af, *af_format_from_name(format), blocking);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    write_file(out_path, payload);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Value inference from observed emotion expressions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  std::string path;
  bool trace_flag = false;
  std::string report_mode;
  std::string export_fmt;
  std::string out_path;
  std::string format;
  std::string semantics = "grounded";

  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("scenario", path, "Scenario file")->required();

  auto* run = app.add_subcommand("run", "Simulate a scenario");
  run->add_option("scenario", path, "Scenario file")->required();
  run->add_flag("--trace", trace_flag, "Per-observation trace");
  run->add_option("--report", report_mode, "Report style")
      ->check(CLI::IsMember({"human", "structured"}));
  run->add_option("--export-af", export_fmt,
                  "Also export the final framework (to stdout unless --out)")
      ->check(CLI::IsMember({"apx", "tgf", "dot"}));
  run->add_option("--out", out_path, "Export destination file");

  auto* solve = app.add_subcommand("solve", "Evaluate a framework file");
  solve->add_option("framework", path, "Framework file")->required();
  solve->add_option("--format", format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"apx", "tgf"}));
  solve->add_option("--semantics", semantics, "Semantics to compute")
      ->check(CLI::IsMember({"grounded", "complete"}));

  auto* exp = app.add_subcommand("export", "Run a scenario and export its framework");
  exp->add_option("scenario", path, "Scenario file")->required();
  std::string exp_format = "apx";
  exp->add_option("--format", exp_format, "Output format")
      ->check(CLI::IsMember({"apx", "tgf", "dot"}));
  exp->add_option("--out", out_path, "Destination file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (run->parsed()) return cmd_run(path, trace_flag, report_mode, export_fmt, out_path);
    if (solve->parsed()) return cmd_solve(path, format, semantics);
    if (exp->parsed()) return cmd_export(path, exp_format, out_path);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
