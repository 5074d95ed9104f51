#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/braid.hpp"
#include "skein/localized.hpp"
#include "skein/skein_vector.hpp"

namespace skein {

struct UnsupportedClass : std::domain_error {
  using std::domain_error::domain_error;
};

/// Linear combination of loop monomials with coefficients in the localized ring.
class AlgebraElement {
 public:
  using Terms = std::map<LoopMonomial, LocalizedCoeff, MonomialLess>;

  AlgebraElement() = default;
  static AlgebraElement monomial(const LoopMonomial& m, const LocalizedCoeff& c = LocalizedCoeff::integer(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const LoopMonomial& m, const LocalizedCoeff& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator*(const LocalizedCoeff& c, const AlgebraElement& e);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  // Highest monomial under compare_monomials; requires nonzero.
  const LoopMonomial& leading() const { return terms_.rbegin()->first; }
  std::string str() const;

 private:
  Terms terms_;
};

/// Linear combination of products of trace symbols s_k. s_0 = 1 is folded away, so the
/// key of a monomial lists only nonzero indices (sorted).
class TracePolynomial {
 public:
  using Key = std::vector<int>;

  TracePolynomial() = default;
  static TracePolynomial constant(const LocalizedCoeff& c);
  static TracePolynomial symbol(int k, const LocalizedCoeff& c = LocalizedCoeff::integer(1));

  const std::map<Key, LocalizedCoeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LocalizedCoeff coeff(const Key& k) const;
  void add(Key k, const LocalizedCoeff& c);
  TracePolynomial& operator+=(const TracePolynomial& o);
  TracePolynomial& operator-=(const TracePolynomial& o);
  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
  friend TracePolynomial operator*(const LocalizedCoeff& c, const TracePolynomial& p);
  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b);
  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;

  // Highest symbol index occurring in any monomial, or -1 when only constants remain.
  int max_symbol() const;
  // Every symbol index that occurs.
  std::vector<int> symbols() const;

  static std::string key_str(const Key& k);  // "s_1^2 s_3", "1" for the empty key
  static Key parse_key(const std::string& s);
  std::string str() const;

 private:
  std::map<Key, LocalizedCoeff> terms_;
};

AlgebraElement quadratic_reduce(const AlgebraElement& e);

/// Closure-level image of t_1^n sigma_1^sign, the first step of the rewriting chain.
AlgebraElement lemma_l1_expand(int n, int sign);

/// Rewrites plain two-strand monomials (loop indices <= 1, tail 1 or sigma_1^+-1) with primed looping generators.
AlgebraElement convert_to_primed(const AlgebraElement& e);

/// Skein class in KBSM(ST) of the closure of each monomial. Coefficients must be free of
/// denominators; they are pushed through `sub`.
SkeinVector reduce_to_BST(const AlgebraElement& e, Substitution sub = Substitution::UtoA2);

/// Skein-valued closure of a word through the algebra: peel Markov-shaped last strands
/// and finish in H_{1,2}. Equals A^{e} times the bracket of the closure.
SkeinVector reduce_word(const MixedBraidWord& w, Substitution sub = Substitution::UtoA2);

TracePolynomial markov_trace(const MixedBraidWord& w);
TracePolynomial markov_trace(const AlgebraElement& e);

/// (-(1+u^2)/u)^{n-1} u^{2e} tr(w).
TracePolynomial invariant_V(const MixedBraidWord& w);
LocalizedCoeff V_prefactor(int strands, int exponent_sum);

/// 1 + u(s_i + s_{i+1}) + u^2(s_i s_{i+1} + s_{i+1} s_i) + u^3 s_i s_{i+1} s_i.
AlgebraElement tl_ideal_element(int i, int strands = 0);

/// The ideal element evaluated by the state sum: each word rescaled per crossing by the
/// factor matching `sub` (c = A with standard smoothings for u = -A^-2, c = -A^-1 with
/// mirrored smoothings for u = A^2).
SkeinVector ideal_state_sum(int i, int strands, Substitution sub);

/// Rewrites every product s_{k1}...s_{kr} (r >= 2) as delta^{-(r-1)} sum_j c_j s_j where
/// p_{k1}...p_{kr} = sum_j c_j p_j in KBSM(ST), with A-coefficients pulled back through `sub`.
TracePolynomial linearize(const TracePolynomial& p, Substitution sub = Substitution::UtoA2);

}  // namespace skein
