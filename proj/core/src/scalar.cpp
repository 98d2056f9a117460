#include "symplab/scalar.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace symplab {

ParamPoly::ParamPoly(const Rational& c) { add_term({0, 0}, c); }

ParamPoly ParamPoly::m() { return monomial(1, 1, 0); }
ParamPoly ParamPoly::omega() { return monomial(1, 0, 1); }

ParamPoly ParamPoly::monomial(const Rational& c, int m_power, int omega_power) {
  ParamPoly p;
  p.add_term({m_power, omega_power}, c);
  return p;
}

void ParamPoly::add_term(const Powers& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  ParamPoly out;
  for (const auto& [pa, ca] : terms_) {
    for (const auto& [pb, cb] : o.terms_) {
      out.add_term({pa[0] + pb[0], pa[1] + pb[1]}, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

ParamPoly& ParamPoly::operator/=(const ParamPoly& o) {
  if (!o.is_monomial()) {
    throw std::domain_error("ParamPoly division requires a single-term divisor");
  }
  const auto& [pb, cb] = *o.terms_.begin();
  ParamPoly out;
  for (const auto& [pa, ca] : terms_) out.add_term({pa[0] - pb[0], pa[1] - pb[1]}, ca / cb);
  *this = std::move(out);
  return *this;
}

ParamPoly operator-(ParamPoly a) {
  for (auto& [p, c] : a.terms_) c = -c;
  return a;
}

double ParamPoly::evaluate(const PhysParams& params) const {
  double sum = 0.0;
  for (const auto& [p, c] : terms_) {
    sum += c.convert_to<double>() * std::pow(params.m, p[0]) * std::pow(params.omega, p[1]);
  }
  return sum;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rational coeff = c;
    if (!first) {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    } else if (coeff < 0) {
      os << "-";
      coeff = -coeff;
    }
    first = false;
    const bool bare = p[0] == 0 && p[1] == 0;
    if (coeff != 1 || bare) {
      os << coeff.str();
      if (!bare) os << "*";
    }
    bool need_star = false;
    auto sym = [&](const char* name, int power) {
      if (power == 0) return;
      if (need_star) os << "*";
      os << name;
      if (power != 1) os << "^" << power;
      need_star = true;
    };
    sym("m", p[0]);
    sym("omega", p[1]);
  }
  return os.str();
}

std::string ScalarTraits<double>::to_string(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double ScalarTraits<ParamPoly>::magnitude(const ParamPoly& v) {
  double best = 0.0;
  for (const auto& [p, c] : v.terms()) best = std::max(best, std::abs(c.convert_to<double>()));
  return best;
}

}  // namespace symplab
