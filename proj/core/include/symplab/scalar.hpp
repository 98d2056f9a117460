#pragma once

// Coefficient fields for exact phase-space algebra.
//
//   double     -- numeric work; zero tests are exact, tolerances are the
//                 caller's business.
//   Rational   -- exact rationals.
//   ParamPoly  -- Laurent polynomials in the symbols m and omega with
//                 rational coefficients. Closed under +, -, *; division
//                 is defined only by a single-term divisor.

#include <array>
#include <cmath>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "symplab/params.hpp"

namespace symplab {

using Rational = boost::multiprecision::cpp_rational;

class ParamPoly {
 public:
  /// (power of m, power of omega)
  using Powers = std::array<int, 2>;
  using Map = std::map<Powers, Rational>;

  ParamPoly() = default;
  ParamPoly(int c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  ParamPoly(const Rational& c);                 // NOLINT(google-explicit-constructor)

  static ParamPoly m();
  static ParamPoly omega();
  static ParamPoly monomial(const Rational& c, int m_power, int omega_power);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  double evaluate(const PhysParams& p) const;
  std::string to_string() const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  /// Throws std::domain_error unless `o` is a single nonzero term.
  ParamPoly& operator/=(const ParamPoly& o);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
  friend ParamPoly operator/(ParamPoly a, const ParamPoly& b) { return a /= b; }
  friend ParamPoly operator-(ParamPoly a);
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  void add_term(const Powers& p, const Rational& c);
  Map terms_;
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static bool is_zero(double v) { return v == 0.0; }
  static double magnitude(double v) { return std::abs(v); }
  static std::string to_string(double v);
};

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& v) { return v == 0; }
  static double magnitude(const Rational& v) { return std::abs(v.convert_to<double>()); }
  static std::string to_string(const Rational& v) { return v.str(); }
};

template <>
struct ScalarTraits<ParamPoly> {
  static bool is_zero(const ParamPoly& v) { return v.is_zero(); }
  /// Largest absolute rational coefficient; a size proxy, not a value.
  static double magnitude(const ParamPoly& v);
  static std::string to_string(const ParamPoly& v) { return v.to_string(); }
};

}  // namespace symplab
