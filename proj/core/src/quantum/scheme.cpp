#include "symplab/quantum/scheme.hpp"

#include <stdexcept>
#include <vector>

#include "symplab/classical_flow.hpp"

namespace symplab {

const char* to_string(Observable o) { return kCoordNames[static_cast<int>(o)]; }

std::optional<Observable> parse_observable(std::string_view name) {
  for (Observable o : kAllObservables) {
    if (name == to_string(o)) return o;
  }
  return std::nullopt;
}

QuantizationScheme make_scheme(int id, const PhysParams& params) {
  if (id < 0 || id >= kSchemeCount) throw std::out_of_range("scheme id must be 0..3");
  params.validate();

  QuantizationScheme s;
  s.id = id;
  s.params = params;
  const cplx ihbar(0.0, params.hbar);
  const Matrix4<double> upper = canonical_upper<double>(id, params.m, params.omega);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) s.commutators[a][b] = ihbar * upper(a, b);

  const cplx hbar_over_i(0.0, -params.hbar);
  const double mw = params.m * params.omega;
  using P = Primitive;
  auto op = [](P p, cplx c) { return OperatorExpr::primitive(p, c); };

  s.assignment[0] = op(P::MulX, 1.0);
  switch (id) {
    case 0:
      s.assignment[1] = op(P::MulY, 1.0);
      s.assignment[2] = op(P::DX, hbar_over_i);
      s.assignment[3] = op(P::DY, hbar_over_i);
      break;
    case 1:
      s.assignment[1] = op(P::MulY, 1.0);
      s.assignment[2] = op(P::DY, hbar_over_i);
      s.assignment[3] = op(P::DX, hbar_over_i);
      break;
    case 2:
      s.assignment[1] = op(P::MulY, 1.0);
      s.assignment[2] = op(P::DX, -hbar_over_i);
      s.assignment[3] = op(P::DY, hbar_over_i);
      break;
    case 3:
      // Signs as printed for the noncommutative representation.
      s.assignment[1] = op(P::DX, ihbar / mw);
      s.assignment[2] = op(P::MulY, mw);
      s.assignment[3] = op(P::DY, ihbar);
      break;
  }
  return s;
}

OperatorExpr heisenberg_operator(const QuantizationScheme& s, Observable which, double t) {
  const Eigen::Matrix4d j = flow_jacobian(t, s.params);
  const int row = static_cast<int>(which);
  OperatorExpr out;
  for (int nu = 0; nu < 4; ++nu) {
    if (j(row, nu) == 0.0) continue;
    out += cplx(j(row, nu)) * s.assignment[nu];
  }
  return out;
}

std::array<ObservablePair, 2> canonical_pairs(int id) {
  using O = Observable;
  switch (id) {
    case 0:
    case 2: return {{{O::X, O::PX}, {O::Y, O::PY}}};
    case 1: return {{{O::X, O::PY}, {O::Y, O::PX}}};
    case 3: return {{{O::X, O::Y}, {O::PX, O::PY}}};
    default: throw std::out_of_range("scheme id must be 0..3");
  }
}

double uncertainty_bound(const QuantizationScheme& s, ObservablePair pair, double t) {
  const Eigen::Matrix4d j = flow_jacobian(t, s.params);
  const int ra = static_cast<int>(pair.first), rb = static_cast<int>(pair.second);
  cplx c = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) c += j(ra, a) * j(rb, b) * s.commutators[a][b];
  return 0.5 * std::abs(c);
}

cplx kernel_overlap(const QuantizationScheme& s, double x, double y, double px, double py) {
  const double hbar = s.params.hbar;
  double phase = 0.0;
  switch (s.id) {
    case 0: phase = x * px + y * py; break;
    case 1: phase = x * py + y * px; break;  // crossed transform
    case 2: phase = -x * px + y * py; break;
    default: throw std::domain_error("no common momentum basis for scheme " + std::to_string(s.id));
  }
  return std::polar(1.0 / (2.0 * M_PI * hbar), phase / hbar);
}

OperatorExpr quantize_observable(const QuantizationScheme& s, const Polynomial<double>& f,
                                 QuantizeStats* stats) {
  if (f.degree() > 2) throw std::invalid_argument("quantize_observable: degree > 2 unsupported");
  OperatorExpr out;
  for (const auto& [e, c] : f.terms()) {
    std::vector<const OperatorExpr*> factors;
    for (int k = 0; k < 4; ++k)
      for (int r = 0; r < e[k]; ++r) factors.push_back(&s.assignment[k]);

    switch (factors.size()) {
      case 0: out += OperatorExpr::identity(c); break;
      case 1: out += cplx(c) * *factors[0]; break;
      case 2: {
        const OperatorExpr& a = *factors[0];
        const OperatorExpr& b = *factors[1];
        if (commutes(a, b)) {
          out += cplx(c) * (a * b);
        } else {
          out += cplx(0.5 * c) * (a * b + b * a);
          if (stats) ++stats->symmetrized_terms;
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace symplab
