#pragma once

// Batch evaluation of a scenario and the CSV / JSON report formats.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace symplab::lab {

/// One (scheme, observable, time) entry: <O(t)> and its variance.
struct Cell {
  int scheme = 0;
  Observable observable = Observable::X;
  double time = 0.0;
  double mean_re = 0.0;
  double mean_im = 0.0;
  double variance = 0.0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct UncertaintyEntry {
  int scheme = 0;
  ObservablePair pair{Observable::X, Observable::PX};
  double time = 0.0;
  double product = 0.0;
  double bound = 0.0;
  bool satisfied = true;
  friend bool operator==(const UncertaintyEntry&, const UncertaintyEntry&) = default;
};

/// Symbolic verify_pair result for one canonical (form, Hamiltonian) pair.
struct PairResidual {
  int form = 0;
  bool exact_zero = true;
  /// Largest residual coefficient at the scenario's m, omega.
  double residual = 0.0;
  friend bool operator==(const PairResidual&, const PairResidual&) = default;
};

/// verify_pair for the four canonical pairs with symbolic m, omega.
std::vector<PairResidual> pair_residuals(const PhysParams& params);

struct ReportMetadata {
  std::string version;
  std::optional<std::string> timestamp;
  PhysParams params;
  GridSpec grid;
  GaussianPacket packet;
  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct Report {
  ReportMetadata metadata;
  std::vector<Cell> cells;
  std::vector<UncertaintyEntry> uncertainties;
  std::vector<PairResidual> pairs;
  std::vector<std::string> warnings;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Slack allowed below the Robertson bound before a product counts as a violation.
inline constexpr double kBoundSlack = 1e-9;

struct RunOptions {
  bool timestamp = true;
};

/// Cells are ordered scheme-major, then observable, then time, following
/// the scenario's list order.
Report run_scenario(const Scenario& scenario, const RunOptions& options = {});

enum class Format { Csv, Json };
std::optional<Format> parse_format(std::string_view name);

/// Exact header line of the CSV format.
inline constexpr const char* kCsvHeader = "scheme,observable,time,mean_re,mean_im,variance";

/// Round-trip decimal text for a double, shared by both formats.
std::string format_number(double v);

ordered_json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& doc);
std::string report_to_csv(const Report& r);
std::string render_report(const Report& r, Format f);

class ReportIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes the rendered report to `path`; throws ReportIoError naming the path.
void emit_report(const Report& r, Format f, const std::filesystem::path& path);

}  // namespace symplab::lab
