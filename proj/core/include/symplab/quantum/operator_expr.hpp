#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symplab {

using cplx = std::complex<double>;

/// Elementary grid actions. Identity never appears inside a stored word.
enum class Primitive : std::uint8_t { Identity, MulX, MulY, DX, DY };

using Word = std::vector<Primitive>;

/// Complex linear combination of products of primitives. A word
/// {P1, P2, ..., Pn} denotes P1 P2 ... Pn, so Pn acts first.
class OperatorExpr {
 public:
  struct Term {
    cplx coeff;
    Word word;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Exponents (a, b, c, d) of the normal-ordered monomial x^a y^b dx^c dy^d.
  using NormalKey = std::array<int, 4>;
  using NormalForm = std::map<NormalKey, cplx>;

  OperatorExpr() = default;  // the zero operator

  static OperatorExpr identity(cplx c = 1.0);
  static OperatorExpr primitive(Primitive p, cplx c = 1.0);
  static OperatorExpr word(Word w, cplx c = 1.0);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t max_word_length() const;

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(cplx s);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(cplx s, OperatorExpr a) { return a *= s; }
  friend OperatorExpr operator*(OperatorExpr a, cplx s) { return a *= s; }

  /// Composition: (a * b) psi = a (b psi).
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

  /// Rewrites every word with [d, q] = 1 into x^a y^b dx^c dy^d form and
  /// merges equal monomials. Exact up to floating-point coefficient sums.
  NormalForm normal_form() const;
  OperatorExpr normal_ordered(double drop_below = 0.0) const;

  /// True if every normal-ordered coefficient is below `rel_tol` times the
  /// sum of absolute input coefficients.
  bool is_symbolically_zero(double rel_tol = 1e-12) const;

  std::string to_string() const;

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

 private:
  void add_term(cplx c, const Word& w);
  std::vector<Term> terms_;
};

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

/// Symbolic commutation test in the Weyl algebra.
bool commutes(const OperatorExpr& a, const OperatorExpr& b, double rel_tol = 1e-12);

const char* to_string(Primitive p);

}  // namespace symplab
