#include "skein/tl_engine.hpp"

#include <algorithm>
#include <sstream>

#include "skein/annular.hpp"
#include "skein/hecke2.hpp"

namespace skein {

// AlgebraElement --------------------------------------------------------------

AlgebraElement AlgebraElement::monomial(const LoopMonomial& m, const LocalizedCoeff& c) {
  AlgebraElement e;
  e.add(m, c);
  return e;
}

void AlgebraElement::add(const LoopMonomial& m, const LocalizedCoeff& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

AlgebraElement operator*(const LocalizedCoeff& c, const AlgebraElement& e) {
  AlgebraElement r;
  for (const auto& [m, v] : e.terms_) r.add(m, c * v);
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.str() << ")*[" << it->first.str() << ']';
  }
  return os.str();
}

// TracePolynomial -------------------------------------------------------------

TracePolynomial TracePolynomial::constant(const LocalizedCoeff& c) {
  TracePolynomial p;
  p.add({}, c);
  return p;
}

TracePolynomial TracePolynomial::symbol(int k, const LocalizedCoeff& c) {
  TracePolynomial p;
  p.add(k == 0 ? Key{} : Key{k}, c);
  return p;
}

LocalizedCoeff TracePolynomial::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? LocalizedCoeff() : it->second;
}

void TracePolynomial::add(Key k, const LocalizedCoeff& c) {
  std::erase(k, 0);
  std::sort(k.begin(), k.end());
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(std::move(k), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TracePolynomial operator*(const LocalizedCoeff& c, const TracePolynomial& p) {
  TracePolynomial r;
  for (const auto& [k, v] : p.terms_) r.add(k, c * v);
  return r;
}

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
  TracePolynomial r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      TracePolynomial::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add(std::move(k), ca * cb);
    }
  return r;
}

int TracePolynomial::max_symbol() const {
  int m = -1;
  for (const auto& [k, c] : terms_)
    for (int i : k) m = std::max(m, i);
  return m;
}

std::vector<int> TracePolynomial::symbols() const {
  std::vector<int> out;
  for (const auto& [k, c] : terms_) out.insert(out.end(), k.begin(), k.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string TracePolynomial::key_str(const Key& k) {
  if (k.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < k.size();) {
    size_t j = i;
    while (j < k.size() && k[j] == k[i]) ++j;
    if (i) os << ' ';
    os << "s_" << k[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

TracePolynomial::Key TracePolynomial::parse_key(const std::string& s) {
  Key k;
  if (s == "1") return k;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok.rfind("s_", 0) != 0) throw std::invalid_argument("bad trace monomial '" + s + "'");
    auto caret = tok.find('^');
    int idx = std::stoi(tok.substr(2, caret == std::string::npos ? std::string::npos : caret - 2));
    int pw = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
    for (int r = 0; r < pw; ++r) k.push_back(idx);
  }
  std::sort(k.begin(), k.end());
  return k;
}

std::string TracePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.str() << ")*" << key_str(it->first);
  }
  return os.str();
}

// Rewriting lemmas --------------------------------------------------------------

namespace {

LocalizedCoeff lc(const LaurentPoly& p) { return LocalizedCoeff(p); }

// Expands a sigma-only tail into positive letters with no adjacent repeats.
std::vector<std::pair<LaurentPoly, std::vector<Letter>>> reduce_tail(const std::vector<Letter>& tail) {
  std::vector<std::pair<LaurentPoly, std::vector<Letter>>> done;
  std::vector<std::pair<LaurentPoly, std::vector<Letter>>> work{{LaurentPoly::one(Var::u), tail}};
  while (!work.empty()) {
    auto [c, w] = std::move(work.back());
    work.pop_back();
    bool changed = false;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i].sign < 0) {  // s^-1 = s - d
        auto pos = w;
        pos[i].sign = 1;
        auto drop = w;
        drop.erase(drop.begin() + static_cast<long>(i));
        work.emplace_back(c, std::move(pos));
        work.emplace_back(-(c * delta_u()), std::move(drop));
        changed = true;
        break;
      }
      if (i + 1 < w.size() && w[i] == w[i + 1]) {  // s^2 = d s + 1
        auto one = w;
        one.erase(one.begin() + static_cast<long>(i));
        auto none = one;
        none.erase(none.begin() + static_cast<long>(i));
        work.emplace_back(c * delta_u(), std::move(one));
        work.emplace_back(c, std::move(none));
        changed = true;
        break;
      }
    }
    if (!changed) done.emplace_back(c, std::move(w));
  }
  return done;
}

}  // namespace

AlgebraElement quadratic_reduce(const AlgebraElement& e) {
  AlgebraElement out;
  for (const auto& [m, c] : e.terms()) {
    for (auto& [k, letters] : reduce_tail(m.tail.letters)) {
      LoopMonomial r = m;
      r.tail.letters = letters;
      out.add(r, c * lc(k));
    }
  }
  return out;
}

AlgebraElement lemma_l1_expand(int n, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  if (n < 0) throw std::invalid_argument("lemma_l1_expand needs n >= 0");
  const MixedBraidWord s1 = MixedBraidWord(2, {Letter::S(1, 1)});
  if (n == 0) return AlgebraElement::monomial(LoopMonomial(LoopKind::Plain, {}, MixedBraidWord(2, {Letter::S(1, sign)})));
  AlgebraElement e = AlgebraElement::monomial(LoopMonomial(LoopKind::Plain, {{0, n}}, s1));
  for (int i = sign > 0 ? 0 : 1; i <= n - 1; ++i)
    e.add(LoopMonomial(LoopKind::Plain, {{0, i}, {1, n - i}}), lc(delta_u()));
  return e;
}

AlgebraElement convert_to_primed(const AlgebraElement& e) {
  AlgebraElement out;
  for (const auto& [m, c] : e.terms()) {
    const bool tail_ok = m.tail.letters.empty() ||
                         (m.tail.letters.size() == 1 && m.tail.letters[0].index == 1);
    if (m.max_index() > 1 || !tail_ok)
      throw UnsupportedClass("convert_to_primed: monomial [" + m.str() + "] is outside the supported class");
    if (m.kind == LoopKind::Primed && m.max_index() >= 1) {
      out.add(m, c);
      continue;
    }
    auto get = [&](int i) {
      auto it = m.exponents.find(i);
      return it == m.exponents.end() ? 0 : it->second;
    };
    h12::Elem x = h12::Elem::basis({get(0), get(1), 0});
    if (!m.tail.letters.empty()) x = x * h12::Elem::sigma(m.tail.letters[0].sign);
    for (const auto& [pk, v] : h12::to_primed(x)) {
      MixedBraidWord tail(2, {});
      if (pk.sigma) tail.letters.push_back(Letter::S(1, 1));
      out.add(LoopMonomial(LoopKind::Primed, {{0, pk.a}, {1, pk.k}}, tail), c * lc(v));
    }
  }
  return out;
}

// Markov peeling -----------------------------------------------------------------

namespace {

MixedBraidWord cyclic_reduce(const MixedBraidWord& w) {
  MixedBraidWord r = free_reduce(w);
  while (r.letters.size() >= 2 && r.letters.front() == r.letters.back().inverse()) {
    r.letters.pop_back();
    r.letters.erase(r.letters.begin());
  }
  return r;
}

MixedBraidWord rotated(const MixedBraidWord& w, size_t start) {
  MixedBraidWord r;
  r.strands = w.strands;
  r.letters.insert(r.letters.end(), w.letters.begin() + static_cast<long>(start), w.letters.end());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<long>(start));
  return r;
}

MixedBraidWord slice(const MixedBraidWord& w, size_t lo, size_t hi, int strands) {
  MixedBraidWord r;
  r.strands = strands;
  r.letters.assign(w.letters.begin() + static_cast<long>(lo), w.letters.begin() + static_cast<long>(hi));
  return r;
}

// If y is the defining word of t'_i^k (after free reduction), returns k.
std::optional<int> as_primed_loop(const MixedBraidWord& y, int i) {
  MixedBraidWord r = free_reduce(y);
  int k = r.t_count();
  if (k == 0) return std::nullopt;
  if (expand_looping(i, true, k, r.strands).letters != r.letters) return std::nullopt;
  return k;
}

struct TraceModel {
  using Value = TracePolynomial;
  Value single(int a) const { return TracePolynomial::symbol(a); }
  Value base(const h12::Elem& x) const {
    TracePolynomial r;
    for (const auto& [pk, c] : h12::to_primed(x)) {
      if (pk.sigma)
        r.add({pk.a + pk.k}, lc(c) * trace_z());
      else
        r.add({pk.a, pk.k}, lc(c));
    }
    return r;
  }
  Value free(const Value& v) const { return v; }
  Value stab(const Value& v, int sign) const {
    return (sign > 0 ? trace_z() : trace_z() - lc(delta_u())) * v;
  }
  Value loop(const Value& v, int k) const { return v * TracePolynomial::symbol(k); }
  Value scale(const Value& v, const LaurentPoly& c) const { return lc(c) * v; }
  Value zero() const { return {}; }
};

struct SkeinModel {
  using Value = SkeinVector;
  Substitution sub;
  // Closure of a stabilizing sigma^sign: the rescaling c times the kink of the paired smoothing
  // (c = -A^-1 with mirrored smoothings for u = A^2, c = A with standard ones for u = -A^-2).
  LaurentPoly kappa(int sign) const {
    return sub == Substitution::UtoA2 ? LaurentPoly::monomial(Var::A, 1, -4 * sign)
                                      : LaurentPoly::monomial(Var::A, -1, 4 * sign);
  }
  Value single(int a) const { return winding_class(a); }
  Value base(const h12::Elem& x) const {
    SkeinVector r;
    for (const auto& [pk, c] : h12::to_primed(x)) {
      const LaurentPoly ca = substitute(c, sub);
      if (pk.sigma)
        r += (ca * kappa(1)) * winding_class(pk.a + pk.k);
      else
        r += ca * skein_product(winding_class(pk.a), winding_class(pk.k));
    }
    return r;
  }
  Value free(const Value& v) const { return delta_A() * v; }
  Value stab(const Value& v, int sign) const { return kappa(sign) * v; }
  Value loop(const Value& v, int k) const { return skein_product(v, winding_class(k)); }
  Value scale(const Value& v, const LaurentPoly& c) const { return substitute(c, sub) * v; }
  Value zero() const { return {}; }
};

template <class M>
typename M::Value peel(const MixedBraidWord& input, const M& model, int depth = 0) {
  if (depth > 10000) throw std::logic_error("Markov peeling did not terminate");
  const MixedBraidWord w = cyclic_reduce(input);
  const int n = w.strands;
  if (n == 1) return model.single(w.t_count());
  if (n == 2) return model.base(h12::from_word(w));

  const int top = n - 1;  // sigma_{n-1} is the only letter touching the last strand
  std::vector<size_t> pos;
  for (size_t j = 0; j < w.letters.size(); ++j)
    if (!w.letters[j].is_t && w.letters[j].index == top) pos.push_back(j);

  if (pos.empty()) {
    MixedBraidWord lower = w;
    lower.strands = n - 1;
    return model.free(peel(lower, model, depth + 1));
  }
  if (pos.size() == 1) {
    MixedBraidWord r = rotated(w, pos[0] + 1);
    const int sign = r.letters.back().sign;
    r.letters.pop_back();
    r.strands = n - 1;
    return model.stab(peel(r, model, depth + 1), sign);
  }
  // A repeated letter sigma^s sigma^s (cyclically adjacent) shrinks via the quadratic relation.
  const size_t L = w.letters.size();
  for (size_t idx = 0; idx < pos.size(); ++idx) {
    const size_t j = pos[idx];
    const size_t nxt = (j + 1) % L;
    if (w.letters[nxt] == w.letters[j]) {
      MixedBraidWord r = rotated(w, j);  // r starts with the pair
      const int s = r.letters[0].sign;
      MixedBraidWord without = r;
      without.letters.erase(without.letters.begin(), without.letters.begin() + 2);
      MixedBraidWord single = r;
      single.letters.erase(single.letters.begin());
      if (s > 0)  // s^2 = d s + 1
        return model.scale(peel(single, model, depth + 1), delta_u()) + peel(without, model, depth + 1);
      // s^-2 = 1 - d s^-1
      return peel(without, model, depth + 1) - model.scale(peel(single, model, depth + 1), delta_u());
    }
  }
  if (pos.size() == 2 && w.letters[pos[0]].sign == -w.letters[pos[1]].sign) {
    // X s Y s^-1 with Y = t'_{n-2}^k gives X t'_{n-1}^k.
    for (int flip = 0; flip < 2; ++flip) {
      const size_t open = flip ? pos[1] : pos[0];
      if (w.letters[open].sign != 1) continue;
      MixedBraidWord r = rotated(w, open);  // r = s Y s^-1 X
      size_t close = 0;
      for (size_t j = 1; j < r.letters.size(); ++j)
        if (!r.letters[j].is_t && r.letters[j].index == top) close = j;
      MixedBraidWord y = slice(r, 1, close, n - 1);
      MixedBraidWord x = slice(r, close + 1, r.letters.size(), n - 1);
      if (auto k = as_primed_loop(y, n - 2)) return model.loop(peel(x, model, depth + 1), *k);
    }
  }
  throw UnsupportedClass("word '" + input.str() + "' on " + std::to_string(n) +
                         " strands is outside the rule-based trace class");
}

}  // namespace

TracePolynomial markov_trace(const MixedBraidWord& w) { return peel(w, TraceModel{}); }

TracePolynomial markov_trace(const AlgebraElement& e) {
  TracePolynomial r;
  for (const auto& [m, c] : e.terms()) r += c * markov_trace(m.to_word());
  return r;
}

SkeinVector reduce_word(const MixedBraidWord& w, Substitution sub) { return peel(w, SkeinModel{sub}); }

namespace {

// Exhaustive rewriting of t^k t'_1^m with the product rule, asserting that each new
// monomial is strictly below its parent in the monomial order.
SkeinVector reduce_two_loops(int k, int m) {
  SkeinVector out;
  std::vector<std::pair<LaurentPoly, std::pair<int, int>>> work{{LaurentPoly::one(Var::A), {k, m}}};
  auto mono = [](int a, int b) {
    std::map<int, int> ex{{0, a}, {1, b}};
    return LoopMonomial(LoopKind::Primed, ex);
  };
  while (!work.empty()) {
    auto [c, km] = work.back();
    work.pop_back();
    auto [a, b] = km;
    if (a == 0 || b == 0) {  // one loop plus a trivial strand
      out += (c * delta_A()) * SkeinVector::basis(a + b);
      continue;
    }
    const LoopMonomial parent = mono(a, b);
    auto child = [&](int x, int y, const LaurentPoly& f) {
      const LoopMonomial cm = y == 0 ? LoopMonomial(LoopKind::Primed, {{0, x}}) : mono(x, y);
      if (compare_monomials(cm, parent) >= 0) throw std::logic_error("product rewrite failed to decrease");
      if (y == 0)
        out += (c * f) * SkeinVector::basis(x);
      else
        work.push_back({c * f, {x, y}});
    };
    child(a + b, 0, LaurentPoly::monomial(Var::A, -1, -2));
    child(a + b - 2, 0, LaurentPoly::monomial(Var::A, 1, 6));
    // t^{a-1} t'^{b-1}: stays on two strands, so a vanished exponent leaves a trivial strand.
    const LoopMonomial low = b - 1 == 0 ? LoopMonomial(LoopKind::Primed, {{0, a - 1}}) : mono(a - 1, b - 1);
    if (compare_monomials(low, parent) >= 0) throw std::logic_error("product rewrite failed to decrease");
    work.push_back({c * LaurentPoly::monomial(Var::A, 1, 4), {a - 1, b - 1}});
  }
  return out;
}

}  // namespace

SkeinVector reduce_to_BST(const AlgebraElement& e, Substitution sub) {
  SkeinVector out;
  for (const auto& [m, c] : e.terms()) {
    if (c.denom_u_pow() != 0 || c.denom_cyclo_pow() != 0)
      throw UnsupportedClass("reduce_to_BST: coefficient " + c.str() + " has a denominator");
    const LaurentPoly ca = substitute(c.numerator(), sub);
    const bool pure = m.tail.letters.empty() && m.kind == LoopKind::Primed;
    bool nonneg = true;
    for (const auto& [i, k] : m.exponents) nonneg = nonneg && k > 0;
    if (!pure || !nonneg) {
      out += ca * reduce_word(m.to_word(), sub);
      continue;
    }
    const int n = std::max({m.max_index() + 1, m.tail.strands, 1});
    const unsigned free_strands = static_cast<unsigned>(n - static_cast<int>(m.exponents.size()));
    std::vector<int> ks;
    for (const auto& [i, k] : m.exponents) ks.push_back(k);
    SkeinVector v;
    if (ks.empty())
      v = delta_A().pow(free_strands - 1) * SkeinVector::basis(0);
    else if (ks.size() == 1)
      v = delta_A().pow(free_strands) * SkeinVector::basis(ks[0]);
    else if (ks.size() == 2)
      v = delta_A().pow(free_strands) * reduce_two_loops(ks[0], ks[1]);
    else
      v = delta_A().pow(free_strands) * product_of_windings(ks);
    out += ca * v;
  }
  return out;
}

LocalizedCoeff V_prefactor(int strands, int e) {
  LocalizedCoeff base(-one_plus_u2(), 1, 0);
  LocalizedCoeff r = LocalizedCoeff::integer(1);
  for (int i = 0; i < strands - 1; ++i) r *= base;
  return r * LocalizedCoeff(LaurentPoly::monomial(Var::u, 1, 2 * e));
}

TracePolynomial invariant_V(const MixedBraidWord& w) {
  return V_prefactor(w.strands, exponent_sum(w)) * markov_trace(w);
}

AlgebraElement tl_ideal_element(int i, int strands) {
  if (i < 1) throw std::invalid_argument("ideal index must be >= 1");
  const int n = std::max(strands, i + 2);
  auto word = [&](std::vector<int> idx) {
    MixedBraidWord w;
    w.strands = n;
    for (int j : idx) w.letters.push_back(Letter::S(j, 1));
    return LoopMonomial(LoopKind::Primed, {}, w);
  };
  auto upow = [](int k) { return LocalizedCoeff(LaurentPoly::monomial(Var::u, 1, k)); };
  AlgebraElement e;
  e.add(word({}), upow(0));
  e.add(word({i}), upow(1));
  e.add(word({i + 1}), upow(1));
  e.add(word({i, i + 1}), upow(2));
  e.add(word({i + 1, i}), upow(2));
  e.add(word({i, i + 1, i}), upow(3));
  return e;
}

SkeinVector ideal_state_sum(int i, int strands, Substitution sub) {
  const AlgebraElement e = tl_ideal_element(i, strands);
  const bool mirrored = sub == Substitution::UtoA2;
  const LaurentPoly c = mirrored ? LaurentPoly::monomial(Var::A, -1, -1) : LaurentPoly::monomial(Var::A, 1, 1);
  EvalOptions opts;
  opts.smoothing = mirrored ? Smoothing::Mirrored : Smoothing::Standard;
  SkeinVector total;
  for (const auto& [m, coef] : e.terms()) {
    const MixedBraidWord w = m.to_word(std::max(strands, i + 2));
    const LaurentPoly scale = substitute(coef.numerator(), sub) * c.pow(static_cast<unsigned>(w.sigma_count()));
    total += scale * evaluate_closure(w, opts);
  }
  return total;
}

TracePolynomial linearize(const TracePolynomial& p, Substitution sub) {
  // 1/delta in u: delta = -(1+u^2)/u under u = A^2, (1+u^2)/u under u = -A^-2.
  const int sgn = sub == Substitution::UtoA2 ? -1 : 1;
  const LocalizedCoeff inv_delta(LaurentPoly::monomial(Var::u, sgn, 1), 0, 1);
  TracePolynomial out;
  for (const auto& [key, c] : p.terms()) {
    if (key.size() <= 1) {
      out.add(key, c);
      continue;
    }
    std::vector<int> ws;
    for (int k : key) {
      if (k < 0) throw UnsupportedClass("linearize: negative trace index s_" + std::to_string(k));
      ws.push_back(k);
    }
    LocalizedCoeff scale = c;
    for (size_t r = 1; r < key.size(); ++r) scale *= inv_delta;
    const SkeinVector prod = product_of_windings(ws);
    for (const auto& [j, a] : prod.terms())
      out.add({j}, scale * LocalizedCoeff(unsubstitute(a, sub)));
  }
  return out;
}

}  // namespace skein
