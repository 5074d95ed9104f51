#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/localized.hpp"
#include "skein/skein_vector.hpp"
#include "skein/tl_engine.hpp"

namespace skein {

/// Symbol x_n that^m, stored as (n, m); x_0 that^m means that^m.
using XSymbol = std::pair<int, int>;

struct DescendingD {
  bool operator()(const XSymbol& a, const XSymbol& b) const { return compare_D(a, b) > 0; }
};

/// Linear combination of x_n that^m symbols over Z[A^+-1], compare_D-descending.
class XExpression {
 public:
  using Terms = std::map<XSymbol, LaurentPoly, DescendingD>;

  XExpression() = default;
  static XExpression symbol(int n, int m, const LaurentPoly& c = LaurentPoly::one(Var::A));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(int n, int m) const;
  void add(XSymbol s, const LaurentPoly& c);
  XExpression& operator+=(const XExpression& o);
  friend XExpression operator*(const LaurentPoly& c, const XExpression& e);
  // Multiply every symbol by that^k.
  XExpression times_that(int k) const;
  // True when no x_n with n >= 1 remains.
  bool that_only() const;
  friend bool operator==(const XExpression&, const XExpression&) = default;
  std::string str() const;

 private:
  Terms terms_;
};

/// bm(t^n) = A^6 x_n; n = 0 gives that^0 = t^0.
XExpression band_move_rhs(int n);

/// x_n rewritten into that-powers by x_n = -A^8 x_{n-2} - A^4 x_{n-1} that.
XExpression xn_expand(int n);

/// Rewrites every x_n (n >= 3) by the recursion until only x_1, x_2 and that-powers
/// remain, then applies the two base cases. Throws std::logic_error if a rewrite
/// fails to descend under compare_D. `steps` counts the rewrites performed.
XExpression descend(const XExpression& e, int* steps = nullptr);

/// Which computation turns that^m into the basis {t^n}.
enum class ThatPath {
  Direct,   // p_1^m in the skein algebra
  Algebra,  // reduce_word on t t'_1 ... t'_{m-1}
  Diagram,  // evaluate_closure on the same word
};

/// The word t t'_1 ... t'_{m-1} on max(m, 1) strands.
MixedBraidWord that_word(int m);

SkeinVector that_to_BST(int m, ThatPath path = ThatPath::Direct);

/// Image of a that-only expression in {t^n}.
SkeinVector to_BST(const XExpression& e, ThatPath path = ThatPath::Direct);

/// lhs_coeff * t^n = rhs, with rhs on exponents below n.
struct EquationRow {
  int n = 0;
  LaurentPoly lhs_coeff{Var::A};
  SkeinVector rhs;

  bool parity_ok() const;
  bool diagonal_ok() const;  // lhs_coeff == 1 - A^{2n+4}
  std::string str() const;
  friend bool operator==(const EquationRow&, const EquationRow&) = default;
};

/// t^n = bm(t^n), collected.
EquationRow equation_for(int n, ThatPath path = ThatPath::Direct);

/// Word of bbm_sign(t^n) = t_1^n sigma_1^sign on two strands.
MixedBraidWord bbm_word(int n, int sign);

/// V(t^n) - V(t_1^n sigma_1^sign), before linearization.
TracePolynomial bbm_difference(int n, int sign);

/// The linearized bbm equation (the returned polynomial equals 0).
TracePolynomial bbm_equation_for(int n, int sign, Substitution sub = Substitution::UtoA2);

/// Clears denominators and the common u-power, and fixes the sign so the lowest
/// coefficient of the highest symbol is positive. Coefficients come back polynomial.
TracePolynomial normalize_equation(const TracePolynomial& p);

/// Triangular elimination of the sign = -1 equations for 2 <= n <= N:
/// each s_n is expressed as d_n s_n = r_n with r_n over {s_0, s_1} only.
struct Elimination {
  int N = 0;
  std::map<int, LocalizedCoeff> d;
  std::map<int, TracePolynomial> r;
  // Symbol indices surviving in the r_n (0 stands for the constant s_0).
  std::vector<int> remaining;
  // s_{2k} lands on s_0 alone, s_{2k+1} on s_1 alone.
  bool parity_ok = false;
};

Elimination eliminate_bbm_system(int N, Substitution sub = Substitution::UtoA2);

/// Equivalence of the two bbm types at n = 1. `difference` is E_- - u^-4 E_+,
/// `predicted` is (u^4-1)/u^4 (s_1 - u^4 tr(t_1)). Equivalence would force
/// tr(t_1) = `forced`, which is compared with the computed `actual`.
struct TwoBbmCheck {
  TracePolynomial difference;
  TracePolynomial predicted;
  TracePolynomial forced;
  TracePolynomial actual;
  bool identity_holds() const { return difference == predicted; }
  bool inequivalent() const { return !(forced == actual); }
};

TwoBbmCheck two_bbm_check();

struct Presentation {
  int N = 0;
  Substitution sub = Substitution::UtoA2;
  std::vector<EquationRow> rows;
  std::vector<int> free_part;                     // basis labels, {0}
  std::vector<std::vector<LaurentPoly>> annihilators;  // per row: the diagonal, then rhs coefficients
  bool lower_triangular = false;
  bool odd_rows_close = false;  // every odd row only reaches odd labels
  // Closed-form torsion factors under both indexings of the torsion sum.
  std::vector<LaurentPoly> factors_from_i0;  // 1 - A^{2i+4}, i = 0..N-1
  std::vector<LaurentPoly> factors_from_i1;  // i = 1..N
  std::string indexing_report;
  // Witness of the bbm system under `sub` versus 1 - A^6.
  LaurentPoly bbm_witness{Var::A};
  bool bbm_in_band = false;   // ideal(bbm) inside ideal(1 - A^6)
  bool band_in_bbm = false;
  std::string str() const;
};

Presentation build_presentation(int N, Substitution sub = Substitution::UtoA2);

}  // namespace skein
