#include "report.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

#include "symplab/pair_finder.hpp"
#include "symplab/quantum/engine.hpp"
#include "symplab/version.hpp"

namespace symplab::lab {

namespace {

using json = nlohmann::json;

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Observable observable_at(const json& v, const std::string& path) {
  const auto o = parse_observable(v.get<std::string>());
  if (!o) throw ConfigError(path, "unknown observable");
  return *o;
}

}  // namespace

std::vector<PairResidual> pair_residuals(const PhysParams& params) {
  const ParamPoly m = ParamPoly::m(), w = ParamPoly::omega();
  const auto field = oscillator_field<ParamPoly>(m, w);
  std::vector<PairResidual> out;
  for (int mu = 0; mu < 4; ++mu) {
    const auto r = verify_pair(canonical_pair<ParamPoly>(mu, m, w), field);
    double worst = 0.0;
    for (const auto& comp : r) worst = std::max(worst, evaluate(comp, params).max_abs_coefficient());
    out.push_back({mu, is_zero(r), worst});
  }
  return out;
}

Report run_scenario(const Scenario& scenario, const RunOptions& options) {
  scenario.validate();
  Report report;
  report.metadata = {kVersion, std::nullopt, scenario.params, scenario.grid, scenario.packet};
  if (options.timestamp) report.metadata.timestamp = utc_timestamp();

  const QuantumEngine engine(scenario.grid);
  const WaveFunction psi = scenario.packet.sample(scenario.grid);
  const double boundary = psi.boundary_max();
  if (boundary > kLocalizationThreshold) {
    std::ostringstream os;
    os << "grid: packet boundary magnitude " << format_number(boundary) << " exceeds "
       << format_number(kLocalizationThreshold) << "; spectral results may be inaccurate";
    report.warnings.push_back(os.str());
  }

  for (int id : scenario.schemes) {
    const QuantizationScheme s = make_scheme(id, scenario.params);
    for (Observable o : scenario.observables) {
      for (double t : scenario.times) {
        const OperatorExpr op = heisenberg_operator(s, o, t);
        const cplx mean = engine.expectation(op, psi);
        report.cells.push_back({id, o, t, mean.real(), mean.imag(), engine.variance(op, psi)});
      }
    }
    for (const ObservablePair pair : canonical_pairs(id)) {
      for (double t : scenario.times) {
        const double product = uncertainty_product(engine, s, pair, psi, t);
        const double bound = uncertainty_bound(s, pair, t);
        report.uncertainties.push_back({id, pair, t, product, bound, product >= bound - kBoundSlack});
      }
    }
  }
  report.pairs = pair_residuals(scenario.params);
  return report;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string format_number(double v) { return json(v).dump(); }

ordered_json report_to_json(const Report& r) {
  ordered_json doc;
  ordered_json meta;
  meta["version"] = r.metadata.version;
  if (r.metadata.timestamp) meta["timestamp"] = *r.metadata.timestamp;
  meta["params"] = {{"m", r.metadata.params.m}, {"omega", r.metadata.params.omega}, {"hbar", r.metadata.params.hbar}};
  meta["grid"] = {{"L", r.metadata.grid.half_width}, {"N", r.metadata.grid.points}};
  meta["packet"] = {{"center", {r.metadata.packet.center_x, r.metadata.packet.center_y}},
                    {"wavevector", {r.metadata.packet.k_x, r.metadata.packet.k_y}},
                    {"sigma", r.metadata.packet.sigma}};
  doc["metadata"] = meta;

  ordered_json cells = ordered_json::array();
  for (const Cell& c : r.cells) {
    cells.push_back({{"scheme", c.scheme},
                     {"observable", to_string(c.observable)},
                     {"time", c.time},
                     {"mean_re", c.mean_re},
                     {"mean_im", c.mean_im},
                     {"variance", c.variance}});
  }
  doc["cells"] = cells;

  ordered_json unc = ordered_json::array();
  for (const UncertaintyEntry& u : r.uncertainties) {
    unc.push_back({{"scheme", u.scheme},
                   {"pair", {to_string(u.pair.first), to_string(u.pair.second)}},
                   {"time", u.time},
                   {"product", u.product},
                   {"bound", u.bound},
                   {"satisfied", u.satisfied}});
  }
  doc["uncertainties"] = unc;

  ordered_json pairs = ordered_json::array();
  for (const PairResidual& p : r.pairs) {
    pairs.push_back({{"form", p.form}, {"exact_zero", p.exact_zero}, {"residual", p.residual}});
  }
  doc["pairs"] = pairs;
  doc["warnings"] = r.warnings;
  return doc;
}

Report report_from_json(const json& doc) {
  try {
    Report r;
    const json& meta = doc.at("metadata");
    r.metadata.version = meta.at("version").get<std::string>();
    if (meta.contains("timestamp")) r.metadata.timestamp = meta["timestamp"].get<std::string>();
    const json& prm = meta.at("params");
    r.metadata.params = {prm.at("m").get<double>(), prm.at("omega").get<double>(), prm.at("hbar").get<double>()};
    r.metadata.grid = {meta.at("grid").at("L").get<double>(), meta.at("grid").at("N").get<int>()};
    const json& pk = meta.at("packet");
    r.metadata.packet = {pk.at("center").at(0).get<double>(), pk.at("center").at(1).get<double>(),
                         pk.at("wavevector").at(0).get<double>(), pk.at("wavevector").at(1).get<double>(),
                         pk.at("sigma").get<double>()};

    const json& cells = doc.at("cells");
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const json& c = cells[k];
      r.cells.push_back({c.at("scheme").get<int>(), observable_at(c.at("observable"), "/cells/" + std::to_string(k)),
                         c.at("time").get<double>(), c.at("mean_re").get<double>(), c.at("mean_im").get<double>(),
                         c.at("variance").get<double>()});
    }
    const json& unc = doc.at("uncertainties");
    for (std::size_t k = 0; k < unc.size(); ++k) {
      const json& u = unc[k];
      const std::string path = "/uncertainties/" + std::to_string(k);
      const ObservablePair pair{observable_at(u.at("pair").at(0), path), observable_at(u.at("pair").at(1), path)};
      r.uncertainties.push_back({u.at("scheme").get<int>(), pair, u.at("time").get<double>(),
                                 u.at("product").get<double>(), u.at("bound").get<double>(),
                                 u.at("satisfied").get<bool>()});
    }
    for (const json& p : doc.at("pairs")) {
      r.pairs.push_back({p.at("form").get<int>(), p.at("exact_zero").get<bool>(), p.at("residual").get<double>()});
    }
    r.warnings = doc.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ConfigError("report", std::string("malformed report: ") + e.what());
  }
}

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const Cell& c : r.cells) {
    os << c.scheme << ',' << to_string(c.observable) << ',' << format_number(c.time) << ','
       << format_number(c.mean_re) << ',' << format_number(c.mean_im) << ',' << format_number(c.variance) << '\n';
  }
  return os.str();
}

std::string render_report(const Report& r, Format f) {
  return f == Format::Csv ? report_to_csv(r) : report_to_json(r).dump(2) + "\n";
}

void emit_report(const Report& r, Format f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ReportIoError(path.string() + ": cannot open for writing");
  out << render_report(r, f);
  out.flush();
  if (!out) throw ReportIoError(path.string() + ": write failed");
}

}  // namespace symplab::lab
