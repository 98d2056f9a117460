#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "symplab/scalar.hpp"

namespace symplab {

/// Phase-space coordinate index, ordered (x, y, p_x, p_y).
enum class Coord : int { X = 0, Y = 1, PX = 2, PY = 3 };

inline constexpr std::array<Coord, 4> kAllCoords{Coord::X, Coord::Y, Coord::PX, Coord::PY};
inline constexpr std::array<const char*, 4> kCoordNames{"x", "y", "p_x", "p_y"};

using Exponents = std::array<int, 4>;

/// Sparse multivariate polynomial in (x, y, p_x, p_y) over the field T.
/// Zero coefficients are never stored, so equality is structural.
template <class T>
class Polynomial {
 public:
  using Map = std::map<Exponents, T>;
  using Traits = ScalarTraits<T>;

  Polynomial() = default;
  explicit Polynomial(const T& constant) { add_term({0, 0, 0, 0}, constant); }

  static Polynomial variable(Coord c) {
    Exponents e{0, 0, 0, 0};
    e[static_cast<int>(c)] = 1;
    return monomial(e, T(1));
  }

  static Polynomial monomial(const Exponents& e, const T& coeff) {
    Polynomial p;
    p.add_term(e, coeff);
    return p;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
  }

  T coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  Polynomial derivative(Coord c) const {
    const int k = static_cast<int>(c);
    Polynomial out;
    for (const auto& [e, coeff] : terms_) {
      if (e[k] == 0) continue;
      Exponents de = e;
      de[k] -= 1;
      out.add_term(de, coeff * T(e[k]));
    }
    return out;
  }

  /// Applies `f` to every coefficient, producing a polynomial over the
  /// result type. Used to evaluate symbolic parameters numerically.
  template <class F>
  auto map_coefficients(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Polynomial<U> out;
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  /// Largest coefficient magnitude (0 for the zero polynomial).
  double max_abs_coefficient() const {
    double best = 0.0;
    for (const auto& [e, c] : terms_) best = std::max(best, Traits::magnitude(c));
    return best;
  }

  template <class V>
  V evaluate(const std::array<V, 4>& point) const {
    V sum = V(0);
    for (const auto& [e, c] : terms_) {
      V term = static_cast<V>(c);
      for (int k = 0; k < 4; ++k) {
        for (int r = 0; r < e[k]; ++r) term *= point[k];
      }
      sum += term;
    }
    return sum;
  }

  void add_term(const Exponents& e, const T& coeff) {
    if (Traits::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    Polynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    *this = std::move(out);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << Traits::to_string(c) << ")";
      for (int k = 0; k < 4; ++k) {
        if (e[k] == 0) continue;
        os << "*" << kCoordNames[k];
        if (e[k] > 1) os << "^" << e[k];
      }
    }
    return os.str();
  }

 private:
  Map terms_;
};

template <class T>
using PolyVector = std::array<Polynomial<T>, 4>;

/// Dense 4x4 matrix over an arbitrary coefficient field.
template <class T>
struct Matrix4 {
  std::array<std::array<T, 4>, 4> a{};

  static Matrix4 zero() {
    Matrix4 out;
    for (auto& row : out.a) row.fill(T(0));
    return out;
  }
  static Matrix4 identity() {
    Matrix4 out = zero();
    for (int i = 0; i < 4; ++i) out.a[i][i] = T(1);
    return out;
  }

  T& operator()(int i, int j) { return a[i][j]; }
  const T& operator()(int i, int j) const { return a[i][j]; }

  Matrix4 transpose() const {
    Matrix4 out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.a[i][j] = a[j][i];
    return out;
  }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Matrix4<U> out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.a[i][j] = f(a[i][j]);
    return out;
  }

  friend Matrix4 operator*(const Matrix4& l, const Matrix4& r) {
    Matrix4 out = zero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) out.a[i][j] += l.a[i][k] * r.a[k][j];
    return out;
  }
  friend Matrix4 operator+(Matrix4 l, const Matrix4& r) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) l.a[i][j] += r.a[i][j];
    return l;
  }
  friend Matrix4 operator-(Matrix4 l, const Matrix4& r) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) l.a[i][j] -= r.a[i][j];
    return l;
  }
  friend Matrix4 operator*(const T& s, Matrix4 m) {
    for (auto& row : m.a)
      for (auto& v : row) v = s * v;
    return m;
  }
  friend bool operator==(const Matrix4&, const Matrix4&) = default;

  /// Largest entry magnitude.
  double max_abs() const {
    double best = 0.0;
    for (const auto& row : a)
      for (const auto& v : row) best = std::max(best, ScalarTraits<T>::magnitude(v));
    return best;
  }
};

}  // namespace symplab
