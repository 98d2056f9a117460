// symplab: scenario runner and verification suite.
//
// Exit status: 0 success, 1 a check failed, 2 bad configuration or I/O.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "lab/checks.hpp"
#include "lab/report.hpp"
#include "lab/scenario.hpp"
#include "symplab/pair_finder.hpp"
#include "symplab/version.hpp"

namespace {

using namespace symplab;
using namespace symplab::lab;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

struct ScenarioOptions {
  std::string scenario_path;
  std::optional<int> grid_n;
  std::optional<double> grid_l;

  void attach(CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_path, "Scenario JSON file (defaults if omitted)");
    cmd->add_option("--grid-n", grid_n, "Override grid points per axis");
    cmd->add_option("--grid-l", grid_l, "Override grid half-width");
  }

  Scenario load() const {
    Scenario s = scenario_path.empty() ? Scenario::defaults() : load_scenario(scenario_path);
    if (grid_n) s.grid.points = *grid_n;
    if (grid_l) s.grid.half_width = *grid_l;
    s.validate();
    return s;
  }
};

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw ReportIoError(out_path + ": cannot open for writing");
  out << text;
  if (!out.flush()) throw ReportIoError(out_path + ": write failed");
}

int cmd_init(const std::string& out_path) {
  write_text(scenario_to_json(Scenario::defaults()).dump(2) + "\n", out_path);
  return kExitOk;
}

int cmd_run(const ScenarioOptions& so, const std::string& format_name, const std::string& out_path,
            bool no_timestamp) {
  const auto format = parse_format(format_name);
  if (!format) throw ConfigError("--format", "expected csv or json");
  const Report report = run_scenario(so.load(), {.timestamp = !no_timestamp});
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  if (out_path.empty() || out_path == "-") std::cout << render_report(report, *format);
  else emit_report(report, *format, out_path);
  return kExitOk;
}

int cmd_check(const ScenarioOptions& so) {
  const CheckSummary summary = run_checks(so.load());
  int failed = 0, warned = 0;
  for (const auto& r : summary.results) {
    failed += r.status == CheckStatus::Fail;
    warned += r.status == CheckStatus::Warn;
    std::cout << to_string(r.status) << "  " << std::left << std::setw(16) << r.name << " deviation="
              << format_number(r.deviation) << " tolerance=" << format_number(r.tolerance) << "  " << r.detail
              << '\n';
  }
  for (const auto& w : summary.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << summary.results.size() - failed - warned << " passed, " << failed << " failed, " << warned
            << " warnings\n";
  return summary.passed() ? kExitOk : kExitCheckFailed;
}

void print_matrix(const Matrix4<double>& m) {
  for (int i = 0; i < 4; ++i) {
    std::cout << "    [";
    for (int j = 0; j < 4; ++j) std::cout << (j ? ", " : "") << std::setw(10) << format_number(m(i, j) + 0.0);  // no "-0.0"
    std::cout << "]\n";
  }
}

int cmd_pairs(const ScenarioOptions& so) {
  const Scenario sc = so.load();
  const auto field = oscillator_field(sc.params);
  const auto basis = admissible_inverse_forms(field);
  std::cout << "admissible inverse forms (theta A + A^T theta = 0): dimension " << basis.dimension() << '\n';
  for (std::size_t k = 0; k < basis.dimension(); ++k) {
    std::cout << "  theta[" << k << "]\n";
    print_matrix(basis.basis[k]);
  }
  const ParamPoly m = ParamPoly::m(), w = ParamPoly::omega();
  const auto sym_field = oscillator_field<ParamPoly>(m, w);
  const auto residuals = pair_residuals(sc.params);
  std::cout << "\ncanonical pairs (symbolic m, w):\n";
  for (int mu = 0; mu < 4; ++mu) {
    const auto pair = canonical_pair<ParamPoly>(mu, m, w);
    std::cout << "  form " << mu << "\n    S = " << pair.hamiltonian.to_string() << "\n    nonzero brackets:";
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (!pair.form.upper()(a, b).is_zero())
          std::cout << " {" << kCoordNames[a] << "," << kCoordNames[b] << "} = " << pair.form.upper()(a, b).to_string()
                    << ";";
    std::cout << "\n    residual: " << (residuals[mu].exact_zero ? "exact zero" : "NONZERO")
              << "  bounded: " << to_string(classify_boundedness(canonical_hamiltonian(mu, sc.params))) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symplab: alternative symplectic structures of the 2-D oscillator"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string out_path;
  auto* init = app.add_subcommand("init", "Write the default scenario");
  init->add_option("--out", out_path, "Output path (stdout if omitted)");

  ScenarioOptions run_opts;
  std::string format = "json";
  bool no_timestamp = false;
  auto* run = app.add_subcommand("run", "Evaluate a scenario and emit a report");
  run_opts.attach(run);
  run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--out", out_path, "Output path (stdout if omitted)");
  run->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field");

  ScenarioOptions check_opts;
  auto* check = app.add_subcommand("check", "Run the verification suite");
  check_opts.attach(check);

  ScenarioOptions pairs_opts;
  auto* pairs = app.add_subcommand("pairs", "Print the admissible-form basis and the four canonical pairs");
  pairs_opts.attach(pairs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*init) return cmd_init(out_path);
    if (*run) return cmd_run(run_opts, format, out_path, no_timestamp);
    if (*check) return cmd_check(check_opts);
    if (*pairs) return cmd_pairs(pairs_opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ReportIoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
