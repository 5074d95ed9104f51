#include "skein/system.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skein/annular.hpp"

namespace skein {

namespace {

LaurentPoly amono(const Integer& c, int e) { return LaurentPoly::monomial(Var::A, c, e); }
LaurentPoly umono(const Integer& c, int e) { return LaurentPoly::monomial(Var::u, c, e); }
LocalizedCoeff lu(const Integer& c, int e) { return LocalizedCoeff(umono(c, e)); }

LaurentPoly one_minus_A(int e) { return LaurentPoly::one(Var::A) - amono(1, e); }

}  // namespace

// XExpression -----------------------------------------------------------------

XExpression XExpression::symbol(int n, int m, const LaurentPoly& c) {
  XExpression e;
  e.add({n, m}, c);
  return e;
}

LaurentPoly XExpression::coeff(int n, int m) const {
  auto it = terms_.find({n, m});
  return it == terms_.end() ? LaurentPoly(Var::A) : it->second;
}

void XExpression::add(XSymbol s, const LaurentPoly& c) {
  if (c.var() != Var::A) throw MixedVariableError("x-expressions carry A-coefficients");
  if (s.first < 0 || s.second < 0) throw std::invalid_argument("negative x-symbol index");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XExpression& XExpression::operator+=(const XExpression& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

XExpression operator*(const LaurentPoly& c, const XExpression& e) {
  XExpression r;
  for (const auto& [s, v] : e.terms_) r.add(s, c * v);
  return r;
}

XExpression XExpression::times_that(int k) const {
  XExpression r;
  for (const auto& [s, v] : terms_) r.add({s.first, s.second + k}, v);
  return r;
}

bool XExpression::that_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.first == 0; });
}

std::string XExpression::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ')';
    if (s.first > 0) os << " x_" << s.first;
    os << " that^" << s.second;
  }
  return os.str();
}

XExpression band_move_rhs(int n) {
  if (n < 0) throw std::invalid_argument("band move on a negative power");
  if (n == 0) return XExpression::symbol(0, 0);
  return XExpression::symbol(n, 0, amono(1, 6));
}

XExpression descend(const XExpression& e, int* steps) {
  int count = 0;
  XExpression cur = e;
  for (;;) {
    // The compare_D-largest symbol with n >= 1 is rewritten first.
    auto it = std::find_if(cur.terms().begin(), cur.terms().end(),
                           [](const auto& kv) { return kv.first.first >= 1; });
    if (it == cur.terms().end()) break;
    const auto [n, m] = it->first;
    const LaurentPoly c = it->second;
    XExpression repl;
    if (n == 1) {
      repl = XExpression::symbol(0, m + 1, c);
    } else if (n == 2) {
      repl.add({0, m + 2}, c * amono(-1, 4));
      repl.add({0, m}, c * amono(-1, 2));
    } else {
      repl.add({n - 2, m}, c * amono(-1, 8));
      repl.add({n - 1, m + 1}, c * amono(-1, 4));
    }
    // The recursion keeps n + m or lowers it; x_1 and x_2 become plain that-powers.
    for (const auto& [s, v] : repl.terms())
      if (n >= 3 && compare_D(s, {n, m}) >= 0)
        throw std::logic_error("rewrite of x_" + std::to_string(n) + " did not descend");
    XExpression next = cur;
    next.add({n, m}, -c);
    next += repl;
    cur = std::move(next);
    ++count;
  }
  if (steps) *steps = count;
  return cur;
}

XExpression xn_expand(int n) {
  if (n < 1) throw std::invalid_argument("x_n is defined for n >= 1");
  return descend(XExpression::symbol(n, 0));
}

// that-powers -----------------------------------------------------------------

MixedBraidWord that_word(int m) {
  if (m < 0) throw std::invalid_argument("negative that-power");
  const int strands = std::max(m, 1);
  MixedBraidWord w(strands, {});
  if (m == 0) return w;
  w.letters.push_back(Letter::T());
  for (int i = 1; i < m; ++i) w = w * expand_looping(i, true, 1, strands);
  return w;
}

SkeinVector that_to_BST(int m, ThatPath path) {
  if (m < 0) throw std::invalid_argument("negative that-power");
  switch (path) {
    case ThatPath::Direct:
      return product_of_windings(std::vector<int>(m, 1));
    case ThatPath::Algebra:
      return reduce_word(that_word(m));
    case ThatPath::Diagram:
      if (m == 0) return SkeinVector::basis(0);
      return evaluate_closure(that_word(m));
  }
  throw std::logic_error("unknown path");
}

SkeinVector to_BST(const XExpression& e, ThatPath path) {
  if (!e.that_only()) throw std::invalid_argument("x_n symbols must be expanded first");
  SkeinVector out;
  for (const auto& [s, c] : e.terms()) out += c * that_to_BST(s.second, path);
  return out;
}

// Band-move equations ----------------------------------------------------------

bool EquationRow::parity_ok() const {
  for (const auto& [k, c] : rhs.terms())
    if (k >= n || (k - n) % 2 != 0) return false;
  return true;
}

bool EquationRow::diagonal_ok() const { return lhs_coeff == one_minus_A(2 * n + 4); }

std::string EquationRow::str() const {
  std::ostringstream os;
  os << '(' << lhs_coeff.str() << ") t^" << n << " = " << (rhs.is_zero() ? "0" : rhs.str());
  return os.str();
}

EquationRow equation_for(int n, ThatPath path) {
  if (n < 1) throw std::invalid_argument("equation_for expects n >= 1");
  const SkeinVector image = to_BST(descend(band_move_rhs(n)), path);
  EquationRow row;
  row.n = n;
  row.lhs_coeff = LaurentPoly::one(Var::A) - image.coeff(n);
  for (const auto& [k, c] : image.terms()) {
    if (k > n) throw std::logic_error("band move image exceeds t^" + std::to_string(n));
    if (k < n) row.rhs.add(k, c);
  }
  return row;
}

// bbm system ---------------------------------------------------------------------

MixedBraidWord bbm_word(int n, int sign) {
  if (n < 0 || (sign != 1 && sign != -1)) throw std::invalid_argument("bbm_word(n >= 0, sign = +-1)");
  MixedBraidWord w(2, {});
  if (n > 0) w = expand_looping(1, false, n, 2);
  w.letters.push_back(Letter::S(1, sign));
  return w;
}

TracePolynomial bbm_difference(int n, int sign) {
  MixedBraidWord base(1, {});
  for (int i = 0; i < n; ++i) base.letters.push_back(Letter::T());
  return invariant_V(base) - invariant_V(bbm_word(n, sign));
}

TracePolynomial bbm_equation_for(int n, int sign, Substitution sub) {
  return linearize(bbm_difference(n, sign), sub);
}

TracePolynomial normalize_equation(const TracePolynomial& p) {
  if (p.is_zero()) return p;
  int a = 0, b = 0;
  for (const auto& [k, c] : p.terms()) {
    a = std::max(a, c.denom_u_pow());
    b = std::max(b, c.denom_cyclo_pow());
  }
  TracePolynomial q = LocalizedCoeff(umono(1, a) * one_plus_u2().pow(b)) * p;
  int lo = 0;
  bool any = false;
  for (const auto& [k, c] : q.terms()) {
    if (c.denom_u_pow() || c.denom_cyclo_pow()) throw std::logic_error("denominator survived clearing");
    lo = any ? std::min(lo, c.numerator().min_exp()) : c.numerator().min_exp();
    any = true;
  }
  q = lu(1, -lo) * q;
  const LaurentPoly& lead = q.terms().rbegin()->second.numerator();
  if (lead.terms().begin()->second < 0) q = lu(-1, 0) * q;
  return q;
}

Elimination eliminate_bbm_system(int N, Substitution sub) {
  if (N < 2) throw std::invalid_argument("elimination needs N >= 2");
  Elimination el;
  el.N = N;
  for (int n = 2; n <= N; ++n) {
    const TracePolynomial eq = bbm_equation_for(n, -1, sub);
    if (eq.max_symbol() != n) throw std::logic_error("bbm equation " + std::to_string(n) + " is not triangular");
    LocalizedCoeff lead;
    TracePolynomial rest;
    std::set<int> used;
    for (const auto& [k, c] : eq.terms()) {
      if (k.size() > 1) throw std::logic_error("bbm equation is not linear");
      if (k.size() == 1 && k[0] == n) lead = c;
      else if (k.size() == 1 && k[0] >= 2) used.insert(k[0]);
    }
    // Multiply through by the product of the earlier leading factors.
    LocalizedCoeff D = LocalizedCoeff::integer(1);
    for (int j : used) D *= el.d.at(j);
    TracePolynomial r;
    for (const auto& [k, c] : eq.terms()) {
      if (k.size() == 1 && k[0] == n) continue;
      if (k.size() == 1 && k[0] >= 2) {
        LocalizedCoeff others = LocalizedCoeff::integer(1);
        for (int j : used)
          if (j != k[0]) others *= el.d.at(j);
        r -= (c * others) * el.r.at(k[0]);
      } else {
        TracePolynomial term;
        term.add(k, c);
        r -= D * term;
      }
    }
    el.d[n] = lead * D;
    el.r[n] = r;
  }
  std::set<int> remaining;
  el.parity_ok = true;
  for (const auto& [n, r] : el.r) {
    for (const auto& [k, c] : r.terms()) {
      const int s = k.empty() ? 0 : k[0];
      remaining.insert(s);
      if (k.size() > 1 || s % 2 != n % 2) el.parity_ok = false;
    }
  }
  el.remaining.assign(remaining.begin(), remaining.end());
  return el;
}

TwoBbmCheck two_bbm_check() {
  TwoBbmCheck out;
  const TracePolynomial Ep = bbm_difference(1, 1), Em = bbm_difference(1, -1);
  out.difference = Em - lu(1, -4) * Ep;
  const TracePolynomial t1 = markov_trace(expand_looping(1, false, 1, 2));
  const LocalizedCoeff factor = LocalizedCoeff(umono(1, 4) - umono(1, 0), 4, 0);
  out.predicted = factor * (TracePolynomial::symbol(1) - lu(1, 4) * t1);
  out.forced = lu(1, -4) * TracePolynomial::symbol(1);
  out.actual = t1;
  return out;
}

// Presentation -------------------------------------------------------------------

Presentation build_presentation(int N, Substitution sub) {
  if (N < 1) throw std::invalid_argument("presentation needs N >= 1");
  Presentation p;
  p.N = N;
  p.sub = sub;
  p.free_part = {0};
  p.lower_triangular = true;
  p.odd_rows_close = true;
  for (int n = 1; n <= N; ++n) {
    EquationRow row = equation_for(n);
    if (row.lhs_coeff.is_zero() || (row.lhs_coeff.is_monomial() && abs(row.lhs_coeff.terms().begin()->second) == 1))
      p.lower_triangular = false;
    if (n % 2 == 1 && !row.parity_ok()) p.odd_rows_close = false;
    std::vector<LaurentPoly> gens{row.lhs_coeff};
    for (const auto& [k, c] : row.rhs.terms()) gens.push_back(c);
    p.annihilators.push_back(std::move(gens));
    p.rows.push_back(std::move(row));
  }
  for (int i = 0; i < N; ++i) p.factors_from_i0.push_back(one_minus_A(2 * i + 4));
  for (int i = 1; i <= N; ++i) p.factors_from_i1.push_back(one_minus_A(2 * i + 4));
  bool match_i1 = true, match_i0 = true;
  for (int n = 1; n <= N; ++n) {
    match_i1 = match_i1 && p.rows[n - 1].lhs_coeff == p.factors_from_i1[n - 1];
    match_i0 = match_i0 && p.rows[n - 1].lhs_coeff == p.factors_from_i0[n - 1];
  }
  std::ostringstream rep;
  rep << "computed diagonals match torsion factors indexed from i=1: " << (match_i1 ? "yes" : "no")
      << "; from i=0: " << (match_i0 ? "yes" : "no")
      << "; no computed row has diagonal " << one_minus_A(4).str();
  p.indexing_report = rep.str();

  const LaurentPoly w = umono(1, 0) - umono(1, 6);
  const LaurentPoly v = umono(1, 0) - umono(1, 2);
  p.bbm_witness = substitute(w * v, sub);
  const LaurentPoly band = one_minus_A(6);
  p.bbm_in_band = p.bbm_witness.divide_exact(band).has_value();
  p.band_in_bbm = band.divide_exact(p.bbm_witness).has_value();
  return p;
}

std::string Presentation::str() const {
  std::ostringstream os;
  os << "presentation N=" << N << " (" << substitution_name(sub) << ")\n";
  os << "free part: t^0\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    os << "row " << rows[i].n << ": " << rows[i].str() << "\n  annihilator: diagonal " << annihilators[i].front().str();
    if (annihilators[i].size() > 1) {
      os << "; lower-row consequences";
      for (size_t g = 1; g < annihilators[i].size(); ++g) os << ' ' << annihilators[i][g].str();
    }
    os << '\n';
  }
  os << "lower triangular: " << (lower_triangular ? "yes" : "no") << '\n';
  os << "odd rows stay odd: " << (odd_rows_close ? "yes" : "no") << '\n';
  os << "indexing: " << indexing_report << '\n';
  os << "bbm witness " << bbm_witness.str() << " in (1-A^6): " << (bbm_in_band ? "yes" : "no")
     << "; (1-A^6) in bbm ideal: " << (band_in_bbm ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace skein
