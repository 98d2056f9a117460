#include "checks.hpp"

#include <algorithm>
#include <sstream>

#include "report.hpp"
#include "symplab/classical_flow.hpp"
#include "symplab/pair_finder.hpp"
#include "symplab/quantum/dense.hpp"
#include "symplab/quantum/engine.hpp"

namespace symplab::lab {

namespace {

using T = CheckTolerances;

std::string name_of(const char* family, int index) { return std::string(family) + "." + std::to_string(index); }

CheckStatus grade(double deviation, double tolerance, bool localized) {
  if (deviation <= tolerance) return CheckStatus::Pass;
  return localized ? CheckStatus::Fail : CheckStatus::Warn;
}

std::string localization_warning(const std::string& check, double boundary) {
  std::ostringstream os;
  os << check << ": state not localized (boundary magnitude " << format_number(boundary) << " > "
     << format_number(kLocalizationThreshold) << "); failures downgraded to warnings";
  return os.str();
}

void check_pairs(const Scenario& sc, CheckSummary& out) {
  const ParamPoly m = ParamPoly::m(), w = ParamPoly::omega();
  const auto field = oscillator_field<ParamPoly>(m, w);
  for (int mu = 0; mu < 4; ++mu) {
    Matrix4<ParamPoly> upper = canonical_upper<ParamPoly>(mu, m, w);
    if (sc.fixtures.corrupt_form && mu == 0) upper(2, 0) = upper(0, 2);
    CheckResult r{name_of("pairs", mu), CheckStatus::Pass, 0.0, 0.0, "exact zero residual"};
    const FormValidation v = validate_form(upper);
    if (!v.ok()) {
      r.status = CheckStatus::Fail;
      r.detail = std::string(to_string(v.status)) + (v.reason.empty() ? "" : " (" + v.reason + ")");
      out.results.push_back(std::move(r));
      continue;
    }
    const HamiltonianPair<ParamPoly> pair{SymplecticForm<ParamPoly>::from_upper(upper),
                                          canonical_hamiltonian<ParamPoly>(mu, m, w)};
    const auto residual = verify_pair(pair, field);
    if (!is_zero(residual)) {
      r.status = CheckStatus::Fail;
      r.detail = "nonzero residual";
      for (const auto& c : residual) r.deviation = std::max(r.deviation, evaluate(c, sc.params).max_abs_coefficient());
    }
    out.results.push_back(std::move(r));
  }
}

void check_flow(const Scenario& sc, CheckSummary& out) {
  const PhysParams& p = sc.params;
  const auto times = uniform_times(p, T::kFlowSamples);
  const auto long_times = uniform_times(p);
  const PhaseState s0{sc.packet.center_x, sc.packet.center_y, p.hbar * sc.packet.k_x, p.hbar * sc.packet.k_y};
  for (int mu = 0; mu < 4; ++mu) {
    const auto form = canonical_form(mu, p);
    double worst = 0.0;
    for (double t : times) worst = std::max(worst, verify_flow_symplectic(form, t, p).max_deviation);
    for (double t : sc.times) worst = std::max(worst, verify_flow_symplectic(form, t, p).max_deviation);
    out.results.push_back({name_of("flow", mu), grade(worst, T::kSymplectic, true), worst, T::kSymplectic,
                           "max |J^T w J - w| over sampled times"});

    const auto h = canonical_hamiltonian(mu, p);
    const double scale = std::max(1.0, std::abs(h.evaluate(s0.as_array())));
    const double drift = conserved_along_flow(h, s0, long_times, p);
    out.results.push_back({name_of("conservation", mu), grade(drift, T::kConservation * scale, true), drift,
                           T::kConservation * scale, "max drift of S over two periods"});
  }
}

void check_commutators(const Scenario& sc, CheckSummary& out) {
  const QuantumEngine engine(sc.grid);
  const WaveFunction psi = GaussianPacket::ground(sc.params).sample(sc.grid);
  for (int id : sc.schemes) {
    const auto check = commutator_table_check(engine, make_scheme(id, sc.params), psi);
    const std::string name = name_of("commutators", id);
    if (!check.localized) out.warnings.push_back(localization_warning(name, check.boundary_max));
    out.results.push_back({name, grade(check.max_deviation, T::kCommutator, check.localized), check.max_deviation,
                           T::kCommutator, "max ||[A,B]psi - C psi|| / ||psi||"});
  }
}

void check_uncertainties(const Scenario& sc, CheckSummary& out) {
  const QuantumEngine engine(sc.grid);
  const WaveFunction psi = sc.packet.sample(sc.grid);
  const double boundary = psi.boundary_max();
  const bool localized = boundary <= kLocalizationThreshold;
  for (int id : sc.schemes) {
    const auto s = make_scheme(id, sc.params);
    double shortfall = 0.0;
    for (const auto pair : canonical_pairs(id)) {
      for (double t : sc.times) {
        shortfall = std::max(shortfall, uncertainty_bound(s, pair, t) - uncertainty_product(engine, s, pair, psi, t));
      }
    }
    const std::string name = name_of("uncertainties", id);
    if (!localized && shortfall > kBoundSlack) out.warnings.push_back(localization_warning(name, boundary));
    out.results.push_back({name, grade(shortfall, kBoundSlack, localized), std::max(shortfall, 0.0), kBoundSlack,
                           "largest shortfall below the bound"});
  }
}

void check_unitary(const Scenario& sc, CheckSummary& out) {
  const PhysParams& p = sc.params;
  const GridSpec small{8.0 * p.reference_length(), T::kUnitaryGridPoints};
  const WaveFunction psi = conjugation_probe_packet(p).sample(small);
  for (int id : sc.schemes) {
    const DenseConjugator conj(make_scheme(id, p), small);
    double worst = 0.0;
    for (Observable o : kAllObservables) {
      for (double t : {0.6 / p.omega, 1.1 / p.omega}) worst = std::max(worst, conj.deviation(o, t, psi));
    }
    out.results.push_back({name_of("unitary", id), grade(worst, T::kUnitary, true), worst, T::kUnitary,
                           "relative L2 gap, N = 32"});
  }
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Warn: return "WARN";
  }
  return "?";
}

bool CheckSummary::passed() const {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

CheckSummary run_checks(const Scenario& scenario) {
  scenario.validate();
  CheckSummary out;
  if (scenario.checks.pairs) check_pairs(scenario, out);
  if (scenario.checks.flow) check_flow(scenario, out);
  if (scenario.checks.commutators) check_commutators(scenario, out);
  if (scenario.checks.uncertainties) check_uncertainties(scenario, out);
  if (scenario.checks.unitary) check_unitary(scenario, out);
  return out;
}

}  // namespace symplab::lab
