#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skein/laurent.hpp"
#include "skein/localized.hpp"

using namespace skein;

namespace {

LaurentPoly A(const Integer& c, int e) { return LaurentPoly::monomial(Var::A, c, e); }
LaurentPoly U(const Integer& c, int e) { return LaurentPoly::monomial(Var::u, c, e); }

// Oracle: evaluation at a rational point is a ring homomorphism.
mpq_class eval(const LaurentPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class xp = 1;
    for (int i = 0; i < std::abs(e); ++i) xp *= x;
    if (e < 0) xp = 1 / xp;
    acc += mpq_class(c) * xp;
  }
  return acc;
}

LaurentPoly random_poly(std::mt19937_64& rng, Var v) {
  std::uniform_int_distribution<int> n_terms(0, 5), ex(-6, 6), co(-9, 9);
  LaurentPoly p(v);
  for (int i = n_terms(rng); i > 0; --i) p += LaurentPoly::monomial(v, co(rng), ex(rng));
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic examples") {
  CHECK((A(1, 0) + A(1, 2)) * (A(1, 0) - A(1, 2)) == A(1, 0) - A(1, 4));
  const LaurentPoly p = A(3, -2) + A(-1, 5);
  CHECK(p + LaurentPoly(Var::A) == p);
  CHECK(delta_u() * delta_u() == U(1, 2) - U(2, 0) + U(1, -2));
  CHECK(delta_A() == A(-1, 2) - A(1, -2));
}

TEST_CASE("mixed variables are rejected") {
  CHECK_THROWS_AS(A(1, 1) + U(1, 1), MixedVariableError);
  CHECK_THROWS_AS(A(1, 1) * U(1, 1), MixedVariableError);
}

TEST_CASE("canonical text round-trips") {
  CHECK((A(-1, -2) + A(3, 0)).str() == "-A^-2+3A^0");
  CHECK(LaurentPoly(Var::u).str() == "0");
  for (const char* s : {"-A^-2+3A^0", "A^0-A^6", "-12A^-7+A^3+5A^40"})
    CHECK(LaurentPoly::parse(s, Var::A).str() == s);
  CHECK(LaurentPoly::parse("0", Var::u).is_zero());
}

TEST_CASE("exact division") {
  const LaurentPoly a = A(1, 0) - A(1, 12);
  CHECK(a.divide_exact(A(1, 0) - A(1, 6)) == A(1, 0) + A(1, 6));
  CHECK_FALSE(A(1, 0).divide_exact(A(1, 0) - A(1, 6)).has_value());
  CHECK(A(-6, 3).divide_exact(A(2, 1)) == A(-3, 2));
}

TEST_CASE("ring axioms hold on random polynomials") {
  constexpr std::uint64_t kSeed = 7001;
  std::mt19937_64 rng(kSeed);
  const mpq_class x(3, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly p = random_poly(rng, Var::A), q = random_poly(rng, Var::A), r = random_poly(rng, Var::A);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
    CHECK(eval(p * q, x) == eval(p, x) * eval(q, x));
    CHECK(eval(p + q, x) == eval(p, x) + eval(q, x));
    CHECK(eval(p.conjugated(), x) == eval(p, 1 / x));
    if (!q.is_zero()) CHECK((p * q).divide_exact(q) == p);
  }
}

TEST_CASE("localized coefficients") {
  const LocalizedCoeff z = trace_z();
  CHECK(z * z == LocalizedCoeff(U(1, 0), 2, 2));
  CHECK((z + (-z)).is_zero());
  const LocalizedCoeff inv_u(U(1, 0), 1, 0);
  CHECK(inv_u + inv_u == LocalizedCoeff(U(2, 0), 1, 0));
  // Normalization cancels a 1+u^2 factor of the numerator.
  CHECK(LocalizedCoeff(U(1, 0) + U(1, 2), 0, 1) == LocalizedCoeff::integer(1));
  CHECK(LocalizedCoeff(U(1, 3), 1, 0) == LocalizedCoeff(U(1, 2)));
}

TEST_CASE("localized arithmetic agrees with rational evaluation") {
  constexpr std::uint64_t kSeed = 7002;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> pw(0, 3);
  const mpq_class x(5, 3);
  auto value = [&](const LocalizedCoeff& c) -> mpq_class { return eval(c.numerator(), x) / eval(c.denominator(), x); };
  for (int trial = 0; trial < 200; ++trial) {
    const LocalizedCoeff a(random_poly(rng, Var::u), pw(rng), pw(rng));
    const LocalizedCoeff b(random_poly(rng, Var::u), pw(rng), pw(rng));
    CHECK(a.is_normalized());
    CHECK(value(a + b) == value(a) + value(b));
    CHECK(value(a * b) == value(a) * value(b));
    CHECK(LocalizedCoeff::cross_equal(a * b, b * a));
  }
}

TEST_CASE("substitution between u and A") {
  CHECK(substitute(delta_u()) == A(1, 2) - A(1, -2));
  CHECK(substitute(U(1, 0) - U(1, 6)) == A(1, 0) - A(1, 12));
  const AFraction zA = substitute(trace_z());
  CHECK(zA.value_equal({A(-1, 0), A(1, 2) * (A(1, 0) + A(1, 4))}));
  CHECK(substitute(U(1, 1), Substitution::UtoMinusAm2) == A(-1, -2));
  const LaurentPoly p = U(2, -3) + U(-1, 4);
  for (Substitution s : {Substitution::UtoA2, Substitution::UtoMinusAm2})
    CHECK(unsubstitute(substitute(p, s), s) == p);
  CHECK_THROWS(unsubstitute(A(1, 1)));
  CHECK(parse_substitution("u=-A-2") == Substitution::UtoMinusAm2);
  CHECK(std::string(substitution_name(Substitution::UtoA2)) == "u=A2");
}
