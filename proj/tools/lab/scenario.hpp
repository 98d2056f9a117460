#pragma once

// Scenario files: one flat JSON document describing a batch run.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symplab/quantum/grid.hpp"
#include "symplab/quantum/scheme.hpp"

namespace symplab::lab {

using ordered_json = nlohmann::ordered_json;

/// Invalid or unreadable configuration. `path()` is a JSON pointer to the
/// offending key, or the file path for I/O problems.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct CheckFlags {
  bool pairs = true;
  bool flow = true;
  bool commutators = true;
  bool uncertainties = true;
  bool unitary = true;
  friend bool operator==(const CheckFlags&, const CheckFlags&) = default;
};

/// Test hooks that deliberately break an input.
struct Fixtures {
  /// Replaces the first canonical bracket matrix by a non-antisymmetric one.
  bool corrupt_form = false;
  friend bool operator==(const Fixtures&, const Fixtures&) = default;
};

struct Scenario {
  PhysParams params;
  GaussianPacket packet;
  std::vector<int> schemes;
  std::vector<Observable> observables;
  std::vector<double> times;
  GridSpec grid;
  CheckFlags checks;
  Fixtures fixtures;

  /// m = omega = hbar = 1, packet (1, 0; 1, 0; 1/sqrt 2), times {0, pi/4, pi/2},
  /// all schemes and observables, default grid, every check on.
  static Scenario defaults();

  /// Throws ConfigError on any invariant violation.
  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Missing keys take their default values; unknown keys are rejected.
Scenario scenario_from_json(const nlohmann::json& doc);
Scenario load_scenario(const std::filesystem::path& path);
ordered_json scenario_to_json(const Scenario& s);

}  // namespace symplab::lab
