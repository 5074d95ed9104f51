#include "skein/hecke2.hpp"

#include <sstream>
#include <stdexcept>

namespace skein::h12 {

namespace {

LaurentPoly d() { return delta_u(); }

Elem shifted(const Elem& e, int da, int db) {
  Elem r;
  for (const auto& [k, c] : e.terms()) r.add({k.a + da, k.b + db, k.eps}, c);
  return r;
}

// sigma * t^a t_1^b, using t t_1 central to reduce to a single nonnegative power.
Elem sigma_left(int a, int b) {
  const int m = std::min(a, b);
  const int r = a - m, s = b - m;
  Elem acc = Elem::sigma(1);
  for (int i = 1; i <= r; ++i) {
    Elem next = shifted(acc, 0, 1);
    next.add({i - 1, 1, 0}, -d());
    acc = next;
  }
  for (int i = 1; i <= s; ++i) {
    Elem next = shifted(acc, 1, 0);
    next.add({0, i, 0}, d());
    acc = next;
  }
  return shifted(acc, m, m);
}

}  // namespace

Elem Elem::one() { return basis({0, 0, 0}); }

Elem Elem::basis(Key k, const LaurentPoly& c) {
  Elem e;
  e.add(k, c);
  return e;
}

Elem Elem::sigma(int sign) {
  Elem e = basis({0, 0, 1});
  if (sign < 0) e.add({0, 0, 0}, -d());
  return e;
}

void Elem::add(Key k, const LaurentPoly& c) {
  if (c.var() != Var::u) throw MixedVariableError("H_{1,2} coefficients live in u");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Elem& Elem::operator+=(const Elem& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

Elem operator*(const LaurentPoly& c, const Elem& e) {
  Elem r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : e.terms_) r.add(k, c * v);
  return r;
}

Elem operator*(const Elem& x, const Elem& y) {
  Elem out;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      const LaurentPoly c = cx * cy;
      if (kx.eps == 0) {
        out.add({kx.a + ky.a, kx.b + ky.b, ky.eps}, c);
        continue;
      }
      const Elem moved = sigma_left(ky.a, ky.b);
      for (const auto& [k, v] : moved.terms_) {
        const Key base{k.a + kx.a, k.b + kx.b, k.eps};
        if (ky.eps == 0) {
          out.add(base, c * v);
        } else if (k.eps == 0) {
          out.add({base.a, base.b, 1}, c * v);
        } else {  // sigma^2 = d sigma + 1
          out.add({base.a, base.b, 1}, c * v * d());
          out.add({base.a, base.b, 0}, c * v);
        }
      }
    }
  }
  return out;
}

std::string Elem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*t^" << k.a << " t1^" << k.b << (k.eps ? " s1" : "");
  }
  return os.str();
}

Elem from_word(const MixedBraidWord& w) {
  if (w.strands > 2) throw std::invalid_argument("H_{1,2} word on more than two strands");
  Elem acc = Elem::one();
  for (const auto& l : w.letters) acc = acc * (l.is_t ? Elem::t(l.sign) : Elem::sigma(l.sign));
  return acc;
}

Elem primed_basis(const PrimedKey& pk) {
  Elem e = Elem::t(pk.a) * Elem::sigma(1) * Elem::t(pk.k);
  if (!pk.sigma) e = e * Elem::sigma(-1);
  return e;
}

std::map<PrimedKey, LaurentPoly> to_primed(const Elem& e) {
  std::map<PrimedKey, LaurentPoly> out;
  auto credit = [&](const PrimedKey& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  Elem rest = e;
  int guard = 0;
  while (!rest.is_zero()) {
    if (++guard > 100000) throw std::logic_error("primed conversion did not terminate");
    // Highest |b| block first; positive b before negative.
    Key top = rest.terms().begin()->first;
    for (const auto& [k, c] : rest.terms()) {
      auto rank = [](const Key& q) { return std::make_pair(std::abs(q.b), q.b); };
      if (rank(k) > rank(top)) top = k;
    }
    const int a = top.a, b = top.b;
    auto coef = [](const Elem& x, Key k) {
      auto it = x.terms().find(k);
      return it == x.terms().end() ? LaurentPoly(Var::u) : it->second;
    };
    const Elem P = primed_basis({a, b, false});
    const Elem Q = primed_basis({a, b, true});
    const LaurentPoly x0 = coef(rest, {a, b, 0}), x1 = coef(rest, {a, b, 1});
    const LaurentPoly p0 = coef(P, {a, b, 0}), p1 = coef(P, {a, b, 1});
    const LaurentPoly q0 = coef(Q, {a, b, 0}), q1 = coef(Q, {a, b, 1});
    const LaurentPoly det = p0 * q1 - p1 * q0;
    if (!det.is_monomial() || abs(det.terms().begin()->second) != 1)
      throw std::logic_error("primed block is not unimodular at t^" + std::to_string(a) + " t1^" +
                             std::to_string(b));
    const LaurentPoly inv = LaurentPoly::monomial(Var::u, det.terms().begin()->second, -det.min_exp());
    const LaurentPoly alpha = (x0 * q1 - x1 * q0) * inv;
    const LaurentPoly beta = (x1 * p0 - x0 * p1) * inv;
    rest -= alpha * P;
    rest -= beta * Q;
    credit({a, b, false}, alpha);
    credit({a, b, true}, beta);
    if (rest.terms().count({a, b, 0}) || rest.terms().count({a, b, 1}))
      throw std::logic_error("primed block elimination left residue");
  }
  return out;
}

}  // namespace skein::h12
