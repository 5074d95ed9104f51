#include "skein/localized.hpp"

#include <algorithm>

namespace skein {

LaurentPoly one_plus_u2() { return LaurentPoly(Var::u, {{0, 1}, {2, 1}}); }

LocalizedCoeff::LocalizedCoeff(const LaurentPoly& num, int a, int b) : num_(num), a_(a), b_(b) {
  if (num.var() != Var::u) throw MixedVariableError("LocalizedCoeff numerator must be in u");
  if (a < 0 || b < 0) throw std::invalid_argument("negative denominator power");
  normalize();
}

LocalizedCoeff LocalizedCoeff::raw(const LaurentPoly& num, int a, int b) {
  if (num.var() != Var::u) throw MixedVariableError("LocalizedCoeff numerator must be in u");
  LocalizedCoeff c;
  c.num_ = num;
  c.a_ = a;
  c.b_ = b;
  return c;
}

void LocalizedCoeff::normalize() {
  if (num_.is_zero()) {
    a_ = b_ = 0;
    return;
  }
  const LaurentPoly cyc = one_plus_u2();
  while (b_ > 0) {
    auto q = num_.divide_exact(cyc);
    if (!q) break;
    num_ = *q;
    --b_;
  }
  // u is a unit: fold the u-power so that a == 0 or the numerator starts at u^0.
  int net = num_.min_exp() - a_;
  if (net >= 0) {
    num_ = num_.shifted(-num_.min_exp() + net);
    a_ = 0;
  } else {
    num_ = num_.shifted(-num_.min_exp());
    a_ = -net;
  }
}

bool LocalizedCoeff::is_normalized() const {
  LocalizedCoeff c = *this;
  c.normalize();
  return c == *this;
}

LaurentPoly LocalizedCoeff::denominator() const {
  return LaurentPoly::monomial(Var::u, 1, a_) * one_plus_u2().pow(static_cast<unsigned>(b_));
}

LocalizedCoeff operator+(const LocalizedCoeff& x, const LocalizedCoeff& y) {
  if (x.is_zero()) return y.is_normalized() ? y : LocalizedCoeff(y.num_, y.a_, y.b_);
  if (y.is_zero()) return x.is_normalized() ? x : LocalizedCoeff(x.num_, x.a_, x.b_);
  const int a = std::max(x.a_, y.a_);
  const int b = std::max(x.b_, y.b_);
  const LaurentPoly cyc = one_plus_u2();
  LaurentPoly nx = x.num_.shifted(a - x.a_) * cyc.pow(static_cast<unsigned>(b - x.b_));
  LaurentPoly ny = y.num_.shifted(a - y.a_) * cyc.pow(static_cast<unsigned>(b - y.b_));
  return LocalizedCoeff(nx + ny, a, b);
}

LocalizedCoeff operator*(const LocalizedCoeff& x, const LocalizedCoeff& y) {
  if (x.is_zero() || y.is_zero()) return LocalizedCoeff();
  return LocalizedCoeff(x.num_ * y.num_, x.a_ + y.a_, x.b_ + y.b_);
}

bool LocalizedCoeff::cross_equal(const LocalizedCoeff& x, const LocalizedCoeff& y) {
  return x.num_ * y.denominator() == y.num_ * x.denominator();
}

std::string LocalizedCoeff::str() const {
  if (a_ == 0 && b_ == 0) return num_.str();
  std::string den;
  if (a_ > 0) den += "u^" + std::to_string(a_);
  if (b_ > 0) den += "(1+u^2)" + (b_ > 1 ? "^" + std::to_string(b_) : std::string());
  return "(" + num_.str() + ")/(" + den + ")";
}

LocalizedCoeff trace_z() { return LocalizedCoeff(LaurentPoly::constant(Var::u, -1), 1, 1); }

const char* substitution_name(Substitution s) {
  return s == Substitution::UtoA2 ? "u=A2" : "u=-A-2";
}

Substitution parse_substitution(const std::string& s) {
  if (s == "u=A2") return Substitution::UtoA2;
  if (s == "u=-A-2") return Substitution::UtoMinusAm2;
  throw std::invalid_argument("unknown substitution '" + s + "' (expected u=A2 or u=-A-2)");
}

LaurentPoly substitute(const LaurentPoly& p, Substitution s) {
  if (p.var() != Var::u) throw MixedVariableError("substitute expects a polynomial in u");
  LaurentPoly r(Var::A);
  for (const auto& [e, c] : p.terms()) {
    if (s == Substitution::UtoA2)
      r += LaurentPoly::monomial(Var::A, c, 2 * e);
    else
      r += LaurentPoly::monomial(Var::A, (e % 2 == 0) ? c : Integer(-c), -2 * e);
  }
  return r;
}

AFraction substitute(const LocalizedCoeff& c, Substitution s) {
  return AFraction{substitute(c.numerator(), s), substitute(c.denominator(), s)};
}

LaurentPoly unsubstitute(const LaurentPoly& p, Substitution s) {
  if (p.var() != Var::A) throw MixedVariableError("unsubstitute expects a polynomial in A");
  LaurentPoly r(Var::u);
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) throw std::domain_error("odd power of A has no image in Z[u^+-1]");
    int k = e / 2;
    if (s == Substitution::UtoA2)
      r += LaurentPoly::monomial(Var::u, c, k);
    else  // A^2 = -u^-1
      r += LaurentPoly::monomial(Var::u, (k % 2 == 0) ? c : Integer(-c), -k);
  }
  return r;
}

std::string AFraction::str() const {
  if (den == LaurentPoly::one(Var::A)) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

}  // namespace skein
