#include "skein/skein_vector.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skein {

SkeinVector SkeinVector::basis(int n, const LaurentPoly& c) {
  SkeinVector v;
  v.add(n, c);
  return v;
}

LaurentPoly SkeinVector::coeff(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? LaurentPoly(Var::A) : it->second;
}

SkeinVector& SkeinVector::add(int n, const LaurentPoly& c) {
  if (n < 0) throw std::out_of_range("basis label t^n needs n >= 0");
  if (c.var() != Var::A) throw MixedVariableError("SkeinVector coefficients live in A");
  if (c.is_zero()) return *this;
  auto [it, fresh] = terms_.try_emplace(n, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

SkeinVector& SkeinVector::operator+=(const SkeinVector& o) {
  for (const auto& [n, c] : o.terms_) add(n, c);
  return *this;
}

SkeinVector& SkeinVector::operator-=(const SkeinVector& o) {
  for (const auto& [n, c] : o.terms_) add(n, -c);
  return *this;
}

SkeinVector SkeinVector::operator-() const {
  SkeinVector r;
  for (const auto& [n, c] : terms_) r.terms_.emplace(n, -c);
  return r;
}

SkeinVector operator*(const LaurentPoly& c, const SkeinVector& v) {
  SkeinVector r;
  if (c.is_zero()) return r;
  for (const auto& [n, p] : v.terms_) r.add(n, c * p);
  return r;
}

std::string SkeinVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.str() << ")*t^" << it->first;
  }
  return os.str();
}

SkeinVector basis_product(int k, int m) {
  if (k < 0 || m < 0) throw std::out_of_range("basis_product expects nonnegative labels");
  if (k < m) std::swap(k, m);
  if (m == 0) return delta_A() * SkeinVector::basis(k);
  SkeinVector r = SkeinVector::basis(k + m, LaurentPoly::monomial(Var::A, -1, -2));
  r.add(k + m - 2, LaurentPoly::monomial(Var::A, 1, 6));
  r += LaurentPoly::monomial(Var::A, 1, 4) * basis_product(k - 1, m - 1);
  return r;
}

SkeinVector skein_product(const SkeinVector& a, const SkeinVector& b) {
  SkeinVector r;
  for (const auto& [k, ca] : a.terms())
    for (const auto& [m, cb] : b.terms()) r += (ca * cb) * basis_product(k, m);
  return r;
}

namespace {

// x^n for the core curve x = t, n >= 1. Its coefficient on t^n is (-A^-2)^{n-1}, a unit.
SkeinVector core_power(int n) {
  static std::vector<SkeinVector> cache{SkeinVector::basis(0), SkeinVector::basis(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) cache.push_back(skein_product(cache.back(), SkeinVector::basis(1)));
  return cache[static_cast<size_t>(n)];
}

}  // namespace

SkeinVector mirror(const SkeinVector& v) {
  // Rewrite over {t^0, x, x^2, ...}, conjugate the coordinates, rewrite back.
  SkeinVector rest = v, out;
  while (!rest.is_zero()) {
    const int n = rest.terms().rbegin()->first;
    const LaurentPoly c = rest.terms().rbegin()->second;
    if (n == 0) {
      out += c.conjugated() * SkeinVector::basis(0);
      break;
    }
    const int sgn = (n - 1) % 2 ? -1 : 1;
    const LaurentPoly coord = c * LaurentPoly::monomial(Var::A, sgn, 2 * (n - 1));
    rest -= coord * core_power(n);
    out += coord.conjugated() * core_power(n);
  }
  return out;
}

SkeinVector winding_class(int k) {
  if (k >= 0) return SkeinVector::basis(k);
  return mirror(SkeinVector::basis(-k));
}

SkeinVector product_of_windings(std::vector<int> windings) {
  if (windings.empty()) return SkeinVector::basis(0);
  std::sort(windings.begin(), windings.end(), [](int a, int b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) > std::abs(b) : a > b;
  });
  SkeinVector acc = winding_class(windings.front());
  for (size_t i = 1; i < windings.size(); ++i) acc = skein_product(acc, winding_class(windings[i]));
  return acc;
}

}  // namespace skein
