#include "symplab/quantum/operator_expr.hpp"

#include <algorithm>
#include <sstream>

namespace symplab {

const char* to_string(Primitive p) {
  switch (p) {
    case Primitive::Identity: return "1";
    case Primitive::MulX: return "x";
    case Primitive::MulY: return "y";
    case Primitive::DX: return "dx";
    case Primitive::DY: return "dy";
  }
  return "?";
}

OperatorExpr OperatorExpr::identity(cplx c) { return word({}, c); }

OperatorExpr OperatorExpr::primitive(Primitive p, cplx c) { return word({p}, c); }

OperatorExpr OperatorExpr::word(Word w, cplx c) {
  std::erase(w, Primitive::Identity);
  OperatorExpr out;
  out.add_term(c, w);
  return out;
}

std::size_t OperatorExpr::max_word_length() const {
  std::size_t best = 0;
  for (const auto& t : terms_) best = std::max(best, t.word.size());
  return best;
}

void OperatorExpr::add_term(cplx c, const Word& w) {
  if (c == cplx(0.0)) return;
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.word == w; });
  if (it == terms_.end()) {
    terms_.push_back({c, w});
    return;
  }
  it->coeff += c;
  if (it->coeff == cplx(0.0)) terms_.erase(it);
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& t : o.terms_) add_term(t.coeff, t.word);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& t : o.terms_) add_term(-t.coeff, t.word);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(cplx s) {
  if (s == cplx(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Word w = ta.word;
      w.insert(w.end(), tb.word.begin(), tb.word.end());
      out.add_term(ta.coeff * tb.coeff, w);
    }
  }
  return out;
}

OperatorExpr::NormalForm OperatorExpr::normal_form() const {
  NormalForm total;
  for (const auto& t : terms_) {
    NormalForm acc{{NormalKey{0, 0, 0, 0}, t.coeff}};
    // Right-multiply the normal-ordered accumulator by one primitive at a time.
    for (Primitive p : t.word) {
      NormalForm next;
      for (const auto& [k, c] : acc) {
        auto [a, b, dx, dy] = k;
        switch (p) {
          case Primitive::MulX:
            // dx^c x = x dx^c + c dx^(c-1)
            next[{a + 1, b, dx, dy}] += c;
            if (dx > 0) next[{a, b, dx - 1, dy}] += c * static_cast<double>(dx);
            break;
          case Primitive::MulY:
            next[{a, b + 1, dx, dy}] += c;
            if (dy > 0) next[{a, b, dx, dy - 1}] += c * static_cast<double>(dy);
            break;
          case Primitive::DX: next[{a, b, dx + 1, dy}] += c; break;
          case Primitive::DY: next[{a, b, dx, dy + 1}] += c; break;
          case Primitive::Identity: next[k] += c; break;
        }
      }
      acc = std::move(next);
    }
    for (const auto& [k, c] : acc) total[k] += c;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == cplx(0.0); });
  return total;
}

OperatorExpr OperatorExpr::normal_ordered(double drop_below) const {
  OperatorExpr out;
  for (const auto& [k, c] : normal_form()) {
    if (std::abs(c) <= drop_below) continue;
    Word w;
    w.insert(w.end(), k[0], Primitive::MulX);
    w.insert(w.end(), k[1], Primitive::MulY);
    w.insert(w.end(), k[2], Primitive::DX);
    w.insert(w.end(), k[3], Primitive::DY);
    out.add_term(c, w);
  }
  return out;
}

bool OperatorExpr::is_symbolically_zero(double rel_tol) const {
  double scale = 0.0;
  for (const auto& t : terms_) scale += std::abs(t.coeff);
  for (const auto& [k, c] : normal_form()) {
    if (std::abs(c) > rel_tol * std::max(scale, 1e-300)) return false;
  }
  return true;
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.real() << (t.coeff.imag() < 0 ? "" : "+") << t.coeff.imag() << "i)";
    for (Primitive p : t.word) os << "*" << symplab::to_string(p);
  }
  return os.str();
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

bool commutes(const OperatorExpr& a, const OperatorExpr& b, double rel_tol) {
  return commutator(a, b).is_symbolically_zero(rel_tol);
}

}  // namespace symplab
