#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numbers>

#include "lab/scenario.hpp"

namespace {

using namespace symplab;
using namespace symplab::lab;
using nlohmann::json;

std::string error_path(const json& doc) {
  try {
    scenario_from_json(doc);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(Scenario, DefaultsMatchDocumentedValues) {
  const Scenario s = Scenario::defaults();
  EXPECT_EQ(s.params.m, 1.0);
  EXPECT_EQ(s.params.omega, 1.0);
  EXPECT_EQ(s.params.hbar, 1.0);
  EXPECT_EQ(s.packet.center_x, 1.0);
  EXPECT_EQ(s.packet.center_y, 0.0);
  EXPECT_EQ(s.packet.k_x, 1.0);
  EXPECT_EQ(s.packet.k_y, 0.0);
  EXPECT_DOUBLE_EQ(s.packet.sigma, 1.0 / std::numbers::sqrt2);
  EXPECT_EQ(s.schemes, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(s.observables.size(), 4u);
  ASSERT_EQ(s.times.size(), 3u);
  EXPECT_DOUBLE_EQ(s.times[1], std::numbers::pi / 4);
  EXPECT_EQ(s.grid.points, 128);
  EXPECT_EQ(s.grid.half_width, 8.0);
  EXPECT_EQ(s.checks, CheckFlags{});
  EXPECT_FALSE(s.fixtures.corrupt_form);
  EXPECT_NO_THROW(s.validate());
}

TEST(Scenario, EmptyDocumentGivesDefaults) { EXPECT_EQ(scenario_from_json(json::object()), Scenario::defaults()); }

TEST(Scenario, JsonRoundTrip) {
  Scenario s = Scenario::defaults();
  s.params = PhysParams{1.5, 0.25, 0.5};
  s.packet = GaussianPacket{0.1, -0.2, 0.3, 0.4, 0.9};
  s.schemes = {3, 1};
  s.observables = {Observable::PY, Observable::X};
  s.times = {0.0, 0.1, 2.5};
  s.grid = GridSpec{6.5, 64};
  s.checks.unitary = false;
  s.fixtures.corrupt_form = true;
  EXPECT_EQ(scenario_from_json(json::parse(scenario_to_json(s).dump())), s);
}

TEST(Scenario, DefaultPacketScalesWithParameters) {
  const Scenario s = scenario_from_json(json{{"m", 4.0}, {"omega", 1.0}, {"hbar", 1.0}});
  EXPECT_DOUBLE_EQ(s.packet.center_x, s.params.reference_length());
  EXPECT_DOUBLE_EQ(s.packet.sigma, s.params.ground_width());
  EXPECT_EQ(s.grid, GridSpec::defaults(s.params));
}

TEST(Scenario, FixturesKeyOmittedUnlessSet) {
  EXPECT_FALSE(scenario_to_json(Scenario::defaults()).contains("fixtures"));
  Scenario s = Scenario::defaults();
  s.fixtures.corrupt_form = true;
  EXPECT_TRUE(scenario_to_json(s)["fixtures"]["corrupt_form"].get<bool>());
}

TEST(ScenarioErrors, PathsPointAtOffendingKey) {
  EXPECT_EQ(error_path(json{{"bogus", 1}}), "/bogus");
  EXPECT_EQ(error_path(json{{"grid", {{"N", 15}}}}), "/grid/N");
  EXPECT_EQ(error_path(json{{"grid", {{"N", 8}}}}), "/grid/N");
  EXPECT_EQ(error_path(json{{"grid", {{"N", 64.5}}}}), "/grid/N");
  EXPECT_EQ(error_path(json{{"grid", {{"L", -1.0}}}}), "/grid/L");
  EXPECT_EQ(error_path(json{{"grid", {{"M", 1}}}}), "/grid/M");
  EXPECT_EQ(error_path(json{{"m", 0.0}}), "/m");
  EXPECT_EQ(error_path(json{{"omega", "fast"}}), "/omega");
  EXPECT_EQ(error_path(json{{"hbar", -2.0}}), "/hbar");
  EXPECT_EQ(error_path(json{{"packet", {{"sigma", 0.0}}}}), "/packet/sigma");
  EXPECT_EQ(error_path(json{{"packet", {{"center", {1.0}}}}}), "/packet/center");
  EXPECT_EQ(error_path(json{{"schemes", {0, 4}}}), "/schemes/1");
  EXPECT_EQ(error_path(json{{"schemes", {2, 2}}}), "/schemes/1");
  EXPECT_EQ(error_path(json{{"schemes", json::array()}}), "/schemes");
  EXPECT_EQ(error_path(json{{"observables", {"x", "z"}}}), "/observables/1");
  EXPECT_EQ(error_path(json{{"times", json::array()}}), "/times");
  EXPECT_EQ(error_path(json{{"checks", {{"pairs", 1}}}}), "/checks/pairs");
  EXPECT_EQ(error_path(json::array()), "");
}

TEST(ScenarioErrors, MessageIncludesPath) {
  try {
    scenario_from_json(json{{"grid", {{"N", 15}}}});
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_STREQ(e.what(), "/grid/N: must be an even integer >= 16");
  }
}

TEST(ScenarioErrors, ValidateCatchesDirectEdits) {
  Scenario s = Scenario::defaults();
  s.grid.points = 17;
  EXPECT_THROW(s.validate(), ConfigError);
  s = Scenario::defaults();
  s.times.clear();
  EXPECT_THROW(s.validate(), ConfigError);
}

TEST(ScenarioFiles, LoadAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "symplab_scenario_test";
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.json";
  std::ofstream(good) << R"({"schemes": [2], "times": [0.5]})";
  const Scenario s = load_scenario(good);
  EXPECT_EQ(s.schemes, std::vector<int>{2});
  EXPECT_EQ(s.times, std::vector<double>{0.5});

  const auto bad = dir / "bad.json";
  std::ofstream(bad) << "{ not json";
  EXPECT_THROW(load_scenario(bad), ConfigError);
  EXPECT_THROW(load_scenario(dir / "missing.json"), ConfigError);
  std::filesystem::remove_all(dir);
}

}  // namespace
