#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace skein {

using Integer = mpz_class;

// Formal variable carried by every polynomial. Mixing them is an error.
enum class Var { A, u };

const char* var_name(Var v);

struct MixedVariableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Integer Laurent polynomial in one variable, stored as exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  explicit LaurentPoly(Var v = Var::A) : var_(v) {}
  LaurentPoly(Var v, std::map<int, Integer> terms);

  static LaurentPoly monomial(Var v, const Integer& c, int e);
  static LaurentPoly constant(Var v, const Integer& c) { return monomial(v, c, 0); }
  static LaurentPoly one(Var v) { return constant(v, 1); }

  Var var() const { return var_; }
  const std::map<int, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int e) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& k);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& k) { return a *= k; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Multiply by var^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned k) const;
  // Replace var by var^-1.
  LaurentPoly conjugated() const;

  // Exact quotient this / d in Z[v^+-1], or nullopt if d does not divide.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  // Canonical text form, ascending exponents: "-A^-2+3A^0". Zero is "0".
  std::string str() const;
  static LaurentPoly parse(const std::string& text, Var v);

  // Total order used only for map keys and deterministic output.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void check_var(const LaurentPoly& o) const;
  Var var_;
  std::map<int, Integer> terms_;
};

// Common constants.
LaurentPoly delta_A();  // -A^2 - A^-2
LaurentPoly delta_u();  // u - u^-1

}  // namespace skein
