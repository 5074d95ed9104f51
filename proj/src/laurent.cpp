#include "skein/laurent.hpp"

#include <cctype>
#include <sstream>

namespace skein {

const char* var_name(Var v) { return v == Var::A ? "A" : "u"; }

LaurentPoly::LaurentPoly(Var v, std::map<int, Integer> terms) : var_(v), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(Var v, const Integer& c, int e) {
  LaurentPoly p(v);
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

Integer LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::check_var(const LaurentPoly& o) const {
  if (var_ != o.var_)
    throw MixedVariableError(std::string("mixed-variable expression (") + var_name(var_) + " vs " +
                             var_name(o.var_) + "); apply substitute first");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_var(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_var(b);
  std::map<int, Integer> out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out[ea + eb] += ca * cb;
  return LaurentPoly(a.var_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = one(var_);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

LaurentPoly LaurentPoly::conjugated() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  check_var(d);
  if (d.is_zero()) return std::nullopt;
  LaurentPoly rem = *this;
  LaurentPoly q(var_);
  const int dtop = d.max_exp();
  const int dlow = d.min_exp();
  const Integer& lead = d.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    // The remainder can only shrink to zero if its span stays at least the divisor's.
    if (rem.max_exp() - rem.min_exp() < dtop - dlow) return std::nullopt;
    const Integer& c = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer k = c / lead;
    int shift = rem.max_exp() - dtop;
    LaurentPoly step = monomial(var_, k, shift);
    q += step;
    rem -= d * step;
  }
  return q;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    Integer a = abs(c);
    if (a != 1) os << a.get_str();
    os << var_name(var_) << '^' << e;
    first = false;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text, Var v) {
  LaurentPoly p(v);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "0") return p;
  const char vc = var_name(v)[0];
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + text + "' at " + std::to_string(i) +
                                ": " + why);
  };
  if (s.empty()) fail("empty");
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Integer c = j > i ? Integer(s.substr(i, j - i)) : Integer(1);
    i = j;
    int e = 0;
    if (i < s.size() && s[i] == vc) {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t k = i;
        if (k < s.size() && s[k] == '-') ++k;
        size_t m = k;
        while (m < s.size() && std::isdigit(static_cast<unsigned char>(s[m]))) ++m;
        if (m == k) fail("missing exponent");
        e = std::stoi(s.substr(i, m - i));
        i = m;
      }
    } else if (j == i && i < s.size() && s[i] != '+' && s[i] != '-') {
      fail("unexpected character");
    }
    p += monomial(v, c * sign, e);
  }
  return p;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var_ != b.var_) return a.var_ < b.var_;
  return a.terms_ < b.terms_;
}

LaurentPoly delta_A() { return LaurentPoly(Var::A, {{2, -1}, {-2, -1}}); }
LaurentPoly delta_u() { return LaurentPoly(Var::u, {{1, 1}, {-1, -1}}); }

}  // namespace skein
