#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

namespace symplab::lab {

namespace {

using json = nlohmann::json;

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError(path + "/" + key, "unknown key");
  }
}

const json& require_object(const json& v, const std::string& path) {
  if (!v.is_object()) throw ConfigError(path, "expected an object");
  return v;
}

double read_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(path, "must be finite");
  return d;
}

double read_positive(const json& v, const std::string& path) {
  const double d = read_number(v, path);
  if (!(d > 0.0)) throw ConfigError(path, "must be positive");
  return d;
}

bool read_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) throw ConfigError(path, "expected true or false");
  return v.get<bool>();
}

std::array<double, 2> read_pair(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw ConfigError(path, "expected an array of two numbers");
  return {read_number(v[0], path + "/0"), read_number(v[1], path + "/1")};
}

const json& require_nonempty_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError(path, "expected an array");
  if (v.empty()) throw ConfigError(path, "must not be empty");
  return v;
}

GaussianPacket default_packet(const PhysParams& p) {
  const double ref = p.reference_length();
  return {ref, 0.0, 1.0 / ref, 0.0, p.ground_width()};
}

}  // namespace

Scenario Scenario::defaults() {
  Scenario s;
  s.packet = default_packet(s.params);
  s.schemes = {0, 1, 2, 3};
  s.observables = {kAllObservables.begin(), kAllObservables.end()};
  s.times = {0.0, std::numbers::pi / 4, std::numbers::pi / 2};
  s.grid = GridSpec::defaults(s.params);
  return s;
}

void Scenario::validate() const {
  if (!(params.m > 0.0) || !std::isfinite(params.m)) throw ConfigError("/m", "must be positive");
  if (!(params.omega > 0.0) || !std::isfinite(params.omega)) throw ConfigError("/omega", "must be positive");
  if (!(params.hbar > 0.0) || !std::isfinite(params.hbar)) throw ConfigError("/hbar", "must be positive");
  if (!(packet.sigma > 0.0) || !std::isfinite(packet.sigma)) throw ConfigError("/packet/sigma", "must be positive");
  if (schemes.empty()) throw ConfigError("/schemes", "must not be empty");
  for (std::size_t k = 0; k < schemes.size(); ++k) {
    if (schemes[k] < 0 || schemes[k] >= kSchemeCount) {
      throw ConfigError("/schemes/" + std::to_string(k), "scheme id must be 0..3");
    }
  }
  if (observables.empty()) throw ConfigError("/observables", "must not be empty");
  if (times.empty()) throw ConfigError("/times", "must not be empty");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!std::isfinite(times[k])) throw ConfigError("/times/" + std::to_string(k), "must be finite");
  }
  if (!(grid.half_width > 0.0) || !std::isfinite(grid.half_width)) throw ConfigError("/grid/L", "must be positive");
  if (grid.points < 16 || grid.points % 2 != 0) throw ConfigError("/grid/N", "must be an even integer >= 16");
}

Scenario scenario_from_json(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "", {"m", "omega", "hbar", "packet", "schemes", "observables", "times", "grid", "checks",
                           "fixtures"});
  Scenario s = Scenario::defaults();

  if (doc.contains("m")) s.params.m = read_positive(doc["m"], "/m");
  if (doc.contains("omega")) s.params.omega = read_positive(doc["omega"], "/omega");
  if (doc.contains("hbar")) s.params.hbar = read_positive(doc["hbar"], "/hbar");
  s.packet = default_packet(s.params);
  s.grid = GridSpec::defaults(s.params);

  if (doc.contains("packet")) {
    const json& p = require_object(doc["packet"], "/packet");
    reject_unknown(p, "/packet", {"center", "wavevector", "sigma"});
    if (p.contains("center")) {
      const auto c = read_pair(p["center"], "/packet/center");
      s.packet.center_x = c[0];
      s.packet.center_y = c[1];
    }
    if (p.contains("wavevector")) {
      const auto k = read_pair(p["wavevector"], "/packet/wavevector");
      s.packet.k_x = k[0];
      s.packet.k_y = k[1];
    }
    if (p.contains("sigma")) s.packet.sigma = read_positive(p["sigma"], "/packet/sigma");
  }

  if (doc.contains("schemes")) {
    const json& arr = require_nonempty_array(doc["schemes"], "/schemes");
    s.schemes.clear();
    std::set<int> seen;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string path = "/schemes/" + std::to_string(k);
      if (!arr[k].is_number_integer()) throw ConfigError(path, "expected an integer");
      const int id = arr[k].get<int>();
      if (id < 0 || id >= kSchemeCount) throw ConfigError(path, "scheme id must be 0..3");
      if (!seen.insert(id).second) throw ConfigError(path, "duplicate scheme");
      s.schemes.push_back(id);
    }
  }

  if (doc.contains("observables")) {
    const json& arr = require_nonempty_array(doc["observables"], "/observables");
    s.observables.clear();
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string path = "/observables/" + std::to_string(k);
      if (!arr[k].is_string()) throw ConfigError(path, "expected one of x, y, p_x, p_y");
      const auto o = parse_observable(arr[k].get<std::string>());
      if (!o) throw ConfigError(path, "unknown observable '" + arr[k].get<std::string>() + "'");
      s.observables.push_back(*o);
    }
  }

  if (doc.contains("times")) {
    const json& arr = require_nonempty_array(doc["times"], "/times");
    s.times.clear();
    for (std::size_t k = 0; k < arr.size(); ++k) s.times.push_back(read_number(arr[k], "/times/" + std::to_string(k)));
  }

  if (doc.contains("grid")) {
    const json& g = require_object(doc["grid"], "/grid");
    reject_unknown(g, "/grid", {"L", "N"});
    if (g.contains("L")) s.grid.half_width = read_positive(g["L"], "/grid/L");
    if (g.contains("N")) {
      if (!g["N"].is_number_integer()) throw ConfigError("/grid/N", "expected an integer");
      s.grid.points = g["N"].get<int>();
    }
  }

  if (doc.contains("checks")) {
    const json& c = require_object(doc["checks"], "/checks");
    reject_unknown(c, "/checks", {"pairs", "flow", "commutators", "uncertainties", "unitary"});
    if (c.contains("pairs")) s.checks.pairs = read_bool(c["pairs"], "/checks/pairs");
    if (c.contains("flow")) s.checks.flow = read_bool(c["flow"], "/checks/flow");
    if (c.contains("commutators")) s.checks.commutators = read_bool(c["commutators"], "/checks/commutators");
    if (c.contains("uncertainties")) s.checks.uncertainties = read_bool(c["uncertainties"], "/checks/uncertainties");
    if (c.contains("unitary")) s.checks.unitary = read_bool(c["unitary"], "/checks/unitary");
  }

  if (doc.contains("fixtures")) {
    const json& f = require_object(doc["fixtures"], "/fixtures");
    reject_unknown(f, "/fixtures", {"corrupt_form"});
    if (f.contains("corrupt_form")) s.fixtures.corrupt_form = read_bool(f["corrupt_form"], "/fixtures/corrupt_form");
  }

  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open scenario file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string(), std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(doc);
}

ordered_json scenario_to_json(const Scenario& s) {
  ordered_json doc;
  doc["m"] = s.params.m;
  doc["omega"] = s.params.omega;
  doc["hbar"] = s.params.hbar;
  doc["packet"] = {{"center", {s.packet.center_x, s.packet.center_y}},
                   {"wavevector", {s.packet.k_x, s.packet.k_y}},
                   {"sigma", s.packet.sigma}};
  doc["schemes"] = s.schemes;
  ordered_json obs = ordered_json::array();
  for (Observable o : s.observables) obs.push_back(to_string(o));
  doc["observables"] = obs;
  doc["times"] = s.times;
  doc["grid"] = {{"L", s.grid.half_width}, {"N", s.grid.points}};
  doc["checks"] = {{"pairs", s.checks.pairs},
                   {"flow", s.checks.flow},
                   {"commutators", s.checks.commutators},
                   {"uncertainties", s.checks.uncertainties},
                   {"unitary", s.checks.unitary}};
  if (s.fixtures.corrupt_form) doc["fixtures"] = {{"corrupt_form", true}};
  return doc;
}

}  // namespace symplab::lab
