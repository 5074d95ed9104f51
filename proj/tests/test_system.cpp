#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "skein/system.hpp"

using namespace skein;

namespace {

LaurentPoly A(const Integer& c, int e) { return LaurentPoly::monomial(Var::A, c, e); }
LaurentPoly U(const Integer& c, int e) { return LaurentPoly::monomial(Var::u, c, e); }

mpq_class power(const mpq_class& x, int e) {
  mpq_class r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= x;
  return e < 0 ? mpq_class(1 / r) : r;
}

mpq_class eval(const LaurentPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (const auto& [e, c] : p.terms()) acc += mpq_class(c) * power(x, e);
  return acc;
}

using Dense = std::map<int, mpq_class>;  // degree -> coefficient, zeros dropped

void add_to(Dense& d, int k, const mpq_class& c) {
  if ((d[k] += c) == 0) d.erase(k);
}

Dense eval(const SkeinVector& v, const mpq_class& a) {
  Dense d;
  for (const auto& [n, c] : v.terms()) add_to(d, n, eval(c, a));
  return d;
}

// Oracle: x_n as a polynomial in that, at a rational value of A, straight from the
// recursion x_n = -A^8 x_{n-2} - A^4 x_{n-1} that.
Dense x_oracle(int n, const mpq_class& a) {
  Dense prev{{0, 1}}, cur{{1, 1}};  // x_0 = 1, x_1 = that
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    Dense next;
    for (const auto& [m, c] : prev) add_to(next, m, -power(a, 8) * c);
    for (const auto& [m, c] : cur) add_to(next, m + 1, -power(a, 4) * c);
    if (k == 2) next = {{2, -power(a, 4)}, {0, -power(a, 2)}};
    prev = cur;
    cur = next;
  }
  return cur;
}

// Oracle: that^m = p_1^m (that^0 = t^0), using p_k p_1 = -A^-2 p_{k+1} - A^2 p_{k-1}
// and p_0 p_1 = delta p_1, since t^0 is the unknot.
Dense that_oracle(int m, const mpq_class& a) {
  if (m == 0) return {{0, 1}};
  Dense v{{1, 1}};
  for (int i = 1; i < m; ++i) {
    Dense next;
    for (const auto& [k, c] : v) {
      if (k == 0) {
        add_to(next, 1, -(power(a, 2) + power(a, -2)) * c);
        continue;
      }
      add_to(next, k + 1, -power(a, -2) * c);
      add_to(next, k - 1, -power(a, 2) * c);
    }
    v = next;
  }
  return v;
}

// Oracle row: t^n = A^6 x_n, so (1 - A^6 c_n) t^n = A^6 (x_n - c_n t^n).
std::pair<mpq_class, Dense> row_oracle(int n, const mpq_class& a) {
  Dense image;
  for (const auto& [m, c] : x_oracle(n, a))
    for (const auto& [k, d] : that_oracle(m, a)) add_to(image, k, power(a, 6) * c * d);
  const mpq_class diag = 1 - (image.contains(n) ? image[n] : mpq_class(0));
  image.erase(n);
  return {diag, image};
}

}  // namespace

TEST_CASE("x_n in powers of that") {
  CHECK(xn_expand(1) == XExpression::symbol(0, 1));
  XExpression x2 = XExpression::symbol(0, 2, A(-1, 4));
  x2 += XExpression::symbol(0, 0, A(-1, 2));
  CHECK(xn_expand(2) == x2);
  XExpression x3 = XExpression::symbol(0, 3, A(1, 8));
  x3 += XExpression::symbol(0, 1, A(1, 6) - A(1, 8));
  CHECK(xn_expand(3) == x3);
}

TEST_CASE("x_n agrees with the recursion oracle") {
  for (const mpq_class a : {mpq_class(3, 2), mpq_class(-2, 5)})
    for (int n = 1; n <= 10; ++n) {
      const XExpression x = xn_expand(n);
      CHECK(x.that_only());
      Dense got;
      for (const auto& [sym, c] : x.terms()) add_to(got, sym.second, eval(c, a));
      CAPTURE(n);
      CHECK(got == x_oracle(n, a));
      CHECK(x.coeff(0, n) == A(n % 2 ? 1 : -1, 4 * (n - 1)));
    }
}

TEST_CASE("that powers through three paths") {
  for (int m = 0; m <= 4; ++m) {
    const SkeinVector direct = that_to_BST(m, ThatPath::Direct);
    CHECK(that_to_BST(m, ThatPath::Algebra) == direct);
    CHECK(that_to_BST(m, ThatPath::Diagram) == direct);
    CHECK(eval(direct, mpq_class(3, 2)) == that_oracle(m, mpq_class(3, 2)));
  }
  CHECK(that_word(1) == parse_word("t", 1));
  CHECK(that_word(3) == parse_word("t t1' t2'", 3));
}

TEST_CASE("band-move rows") {
  CHECK(equation_for(1).lhs_coeff == A(1, 0) - A(1, 6));
  CHECK(equation_for(1).rhs.is_zero());
  CHECK(equation_for(2).rhs == SkeinVector::basis(0, A(-1, 8) + A(1, 12)));
  CHECK(equation_for(3).rhs == SkeinVector::basis(1, A(1, 12) + A(1, 14) + A(1, 18)));
  CHECK(equation_for(4).rhs ==
        SkeinVector::basis(2, A(1, 14) + A(1, 16) + A(1, 20)) + SkeinVector::basis(0, A(1, 16) + A(1, 18) + A(1, 24)));
}

TEST_CASE("band-move rows agree with the rational oracle") {
  for (const mpq_class a : {mpq_class(3, 2), mpq_class(-2, 5)})
    for (int n = 1; n <= 8; ++n) {
      const EquationRow row = equation_for(n);
      const auto [diag, rhs] = row_oracle(n, a);
      CAPTURE(n);
      CHECK(eval(row.lhs_coeff, a) == diag);
      CHECK(eval(row.rhs, a) == rhs);
      CHECK(row.diagonal_ok());
      CHECK(row.parity_ok());
    }
}

TEST_CASE("rows agree across paths") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(equation_for(n, ThatPath::Algebra) == equation_for(n));
    CHECK(equation_for(n, ThatPath::Diagram) == equation_for(n));
  }
}

TEST_CASE("descent terminates") {
  for (int n = 0; n <= 12; ++n) {
    int steps = -1;
    XExpression e = band_move_rhs(n);
    for (int m = 1; m + n <= 12; ++m) e += XExpression::symbol(n, m);
    const XExpression d = descend(e, &steps);
    CHECK(d.that_only());
    CHECK(steps >= 0);
  }
}

TEST_CASE("bbm equations") {
  const TracePolynomial s1 = TracePolynomial::symbol(1), s2 = TracePolynomial::symbol(2);
  auto poly = [](const LaurentPoly& p) { return LocalizedCoeff(p); };
  CHECK(normalize_equation(bbm_equation_for(0, 1)).is_zero());
  CHECK(normalize_equation(bbm_equation_for(0, -1)).is_zero());
  CHECK(normalize_equation(bbm_equation_for(1, -1)).is_zero());
  const LaurentPoly f = (U(1, 0) - U(1, 6)) * (U(1, 0) - U(1, 2));
  CHECK(normalize_equation(bbm_equation_for(1, 1)) == poly(f) * s1);
  CHECK(normalize_equation(bbm_equation_for(2, -1)) ==
        poly(U(1, 0) - U(1, 2)) * s2 + TracePolynomial::constant(poly(U(1, 8) - U(1, 6))));
}

TEST_CASE("elimination keeps s_0 and s_1 with parity") {
  const Elimination e = eliminate_bbm_system(8);
  CHECK(e.remaining == std::vector<int>{0, 1});
  CHECK(e.parity_ok);
  for (const auto& [n, r] : e.r) {
    CAPTURE(n);
    CHECK(r.symbols() == (n % 2 ? std::vector<int>{1} : std::vector<int>{}));
  }
  CHECK(e.d.at(2) == LocalizedCoeff(U(1, 0) - U(1, 2)));
}

TEST_CASE("the two bbm types differ") {
  const TwoBbmCheck c = two_bbm_check();
  CHECK(c.identity_holds());
  CHECK(c.inequivalent());
  CHECK(c.forced == TracePolynomial::symbol(1, LocalizedCoeff(U(1, -4))));
  CHECK(c.actual == TracePolynomial::symbol(1, LocalizedCoeff(U(1, 0) + U(1, 4), 2, 1)));
}

TEST_CASE("presentation") {
  for (int N : {1, 2, 4}) {
    const Presentation p = build_presentation(N);
    CAPTURE(N);
    CHECK(p.rows.size() == static_cast<size_t>(N));
    CHECK(p.free_part == std::vector<int>{0});
    CHECK(p.lower_triangular);
    CHECK(p.odd_rows_close);
    for (int i = 0; i < N; ++i) {
      CHECK(p.rows[i].lhs_coeff == p.factors_from_i1[i]);
      CHECK_FALSE(p.rows[i].lhs_coeff == p.factors_from_i0[i]);
    }
    CHECK(p.bbm_witness == (A(1, 0) - A(1, 4)) * (A(1, 0) - A(1, 12)));
    CHECK(p.bbm_in_band);
    CHECK_FALSE(p.band_in_bbm);
  }
}
