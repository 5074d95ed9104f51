#pragma once

#include <string>

#include "skein/laurent.hpp"

namespace skein {

/// Element of Z[u^+-1] localized at u^a (1+u^2)^b.
///
/// Normal form: either a == 0 or the numerator has a nonzero constant term, and
/// when b > 0 the numerator is not divisible by 1+u^2. Normal forms are canonical,
/// so operator== is structural.
class LocalizedCoeff {
 public:
  LocalizedCoeff() : num_(Var::u) {}
  LocalizedCoeff(const LaurentPoly& num, int a = 0, int b = 0);  // normalizes
  static LocalizedCoeff raw(const LaurentPoly& num, int a, int b);  // no normalization
  static LocalizedCoeff integer(const Integer& k) { return LocalizedCoeff(LaurentPoly::constant(Var::u, k)); }

  const LaurentPoly& numerator() const { return num_; }
  int denom_u_pow() const { return a_; }
  int denom_cyclo_pow() const { return b_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_normalized() const;
  // Polynomial denominator u^a (1+u^2)^b.
  LaurentPoly denominator() const;

  LocalizedCoeff operator-() const { return raw(-num_, a_, b_); }
  friend LocalizedCoeff operator+(const LocalizedCoeff& x, const LocalizedCoeff& y);
  friend LocalizedCoeff operator-(const LocalizedCoeff& x, const LocalizedCoeff& y) { return x + (-y); }
  friend LocalizedCoeff operator*(const LocalizedCoeff& x, const LocalizedCoeff& y);
  LocalizedCoeff& operator+=(const LocalizedCoeff& o) { return *this = *this + o; }
  LocalizedCoeff& operator-=(const LocalizedCoeff& o) { return *this = *this - o; }
  LocalizedCoeff& operator*=(const LocalizedCoeff& o) { return *this = *this * o; }

  friend bool operator==(const LocalizedCoeff& x, const LocalizedCoeff& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.num_ == y.num_;
  }
  friend bool operator!=(const LocalizedCoeff& x, const LocalizedCoeff& y) { return !(x == y); }

  // Value equality by cross-multiplication; valid for unnormalized operands.
  static bool cross_equal(const LocalizedCoeff& x, const LocalizedCoeff& y);

  // "(num)/(u^a(1+u^2)^b)" with the denominator omitted when trivial.
  std::string str() const;

 private:
  void normalize();
  LaurentPoly num_;
  int a_ = 0;
  int b_ = 0;
};

LaurentPoly one_plus_u2();

/// The trace constant z = -1/(u(1+u^2)).
LocalizedCoeff trace_z();

/// Map between the algebra variable u and the diagram variable A.
enum class Substitution { UtoA2, UtoMinusAm2 };

const char* substitution_name(Substitution s);  // "u=A2" / "u=-A-2"
Substitution parse_substitution(const std::string& s);

/// A quotient of A-polynomials; produced when a localized coefficient is substituted.
struct AFraction {
  LaurentPoly num{Var::A};
  LaurentPoly den{Var::A};
  std::string str() const;
  bool value_equal(const AFraction& o) const { return num * o.den == o.num * den; }
};

LaurentPoly substitute(const LaurentPoly& p, Substitution s = Substitution::UtoA2);
AFraction substitute(const LocalizedCoeff& c, Substitution s = Substitution::UtoA2);

// Inverse direction on even A-polynomials; throws if an odd exponent occurs.
LaurentPoly unsubstitute(const LaurentPoly& p, Substitution s = Substitution::UtoA2);

}  // namespace skein
