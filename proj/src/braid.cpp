#include "skein/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

namespace skein {

namespace {

void check_letter(const Letter& l, int strands) {
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
  if (!l.is_t && (l.index < 1 || l.index > strands - 1))
    throw std::out_of_range("sigma index " + std::to_string(l.index) + " out of range for " +
                            std::to_string(strands) + " strands");
}

std::string letter_text(const Letter& l) {
  std::string s = l.is_t ? "t" : "s" + std::to_string(l.index);
  if (l.sign < 0) s += "^-1";
  return s;
}

}  // namespace

MixedBraidWord::MixedBraidWord(int n, std::vector<Letter> ls) : strands(n), letters(std::move(ls)) {
  if (n < 1) throw std::invalid_argument("a mixed braid needs at least one moving strand");
  for (const auto& l : letters) check_letter(l, n);
}

int MixedBraidWord::sigma_count() const {
  int c = 0;
  for (const auto& l : letters) c += !l.is_t;
  return c;
}

int MixedBraidWord::t_count() const {
  int c = 0;
  for (const auto& l : letters)
    if (l.is_t) c += l.sign;
  return c;
}

MixedBraidWord MixedBraidWord::inverse() const {
  MixedBraidWord r;
  r.strands = strands;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(it->inverse());
  return r;
}

MixedBraidWord MixedBraidWord::operator*(const MixedBraidWord& o) const {
  if (o.strands != strands) throw StrandMismatch("cannot concatenate words on different strand counts");
  MixedBraidWord r = *this;
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

std::string MixedBraidWord::str() const {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += ' ';
    s += letter_text(l);
  }
  return s;
}

MixedBraidWord parse_word(const std::string& text, int strands) {
  if (strands < 1) throw ParseError("strand count must be positive", 0);
  MixedBraidWord w;
  w.strands = strands;
  size_t i = 0;
  const size_t n = text.size();
  auto read_int = [&](size_t& p, bool allow_sign) -> std::optional<long> {
    size_t start = p;
    if (allow_sign && p < n && text[p] == '-') ++p;
    size_t digits = p;
    while (p < n && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == digits) {
      p = start;
      return std::nullopt;
    }
    return std::strtol(text.c_str() + start, nullptr, 10);
  };
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const size_t tok = i;
    const char head = text[i++];
    if (head != 't' && head != 's') throw ParseError(std::string("unknown token '") + head + "'", tok);
    auto idx = read_int(i, false);
    bool primed = false;
    if (i < n && text[i] == '\'') {
      if (head != 't' || !idx) throw ParseError("prime is only allowed on tK", i);
      primed = true;
      ++i;
    }
    long expo = 1;
    if (i < n && text[i] == '^') {
      ++i;
      auto e = read_int(i, true);
      if (!e) throw ParseError("malformed exponent", i);
      expo = *e;
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    if (head == 's') {
      if (!idx) throw ParseError("sigma token needs an index", tok);
      if (*idx < 1 || *idx > strands - 1)
        throw ParseError("index s" + std::to_string(*idx) + " out of range for " +
                             std::to_string(strands) + " strands",
                         tok);
      const int sg = expo < 0 ? -1 : 1;
      for (long r = 0; r < std::labs(expo); ++r) w.letters.push_back(Letter::S(static_cast<int>(*idx), sg));
    } else {
      const int k = idx ? static_cast<int>(*idx) : 0;
      if (k > strands - 1)
        throw ParseError("index t" + std::to_string(k) + " out of range for " + std::to_string(strands) +
                             " strands",
                         tok);
      auto part = expand_looping(k, primed || k == 0, static_cast<int>(expo), strands);
      w.letters.insert(w.letters.end(), part.letters.begin(), part.letters.end());
    }
  }
  return w;
}

MixedBraidWord expand_looping(int i, bool primed, int k, int strands) {
  if (i < 0) throw std::out_of_range("negative looping index");
  MixedBraidWord w;
  w.strands = std::max(strands, i + 1);
  if (k == 0) return w;
  if (primed || i == 0) {
    // g_i...g_1 t^k g_1^-1...g_i^-1
    for (int j = i; j >= 1; --j) w.letters.push_back(Letter::S(j, 1));
    for (int r = 0; r < std::abs(k); ++r) w.letters.push_back(Letter::T(k > 0 ? 1 : -1));
    for (int j = 1; j <= i; ++j) w.letters.push_back(Letter::S(j, -1));
    return w;
  }
  // t_i is not a conjugate of t, so its powers repeat the whole defining word.
  MixedBraidWord one;
  one.strands = w.strands;
  for (int j = i; j >= 1; --j) one.letters.push_back(Letter::S(j, 1));
  one.letters.push_back(Letter::T(1));
  for (int j = 1; j <= i; ++j) one.letters.push_back(Letter::S(j, 1));
  if (k < 0) one = one.inverse();
  for (int r = 0; r < std::abs(k); ++r) w.letters.insert(w.letters.end(), one.letters.begin(), one.letters.end());
  return w;
}

int exponent_sum(const MixedBraidWord& w) {
  int e = 0;
  for (const auto& l : w.letters)
    if (!l.is_t) e += l.sign;
  return e;
}

MixedBraidWord free_reduce(const MixedBraidWord& w) {
  MixedBraidWord r;
  r.strands = w.strands;
  for (const auto& l : w.letters) {
    if (!r.letters.empty() && r.letters.back() == l.inverse())
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

MixedBraidWord apply_move(const MixedBraidWord& w, const Move& m) {
  switch (m.kind) {
    case MoveKind::Conj:
      if (m.beta.strands != w.strands) throw StrandMismatch("conjugating word has a different strand count");
      return m.beta.inverse() * w * m.beta;
    case MoveKind::Stab: {
      MixedBraidWord r = w;
      r.strands = w.strands + 1;
      r.letters.push_back(Letter::S(w.strands, m.sign));
      return r;
    }
    case MoveKind::LoopConj: {
      MixedBraidWord r;
      r.strands = w.strands;
      r.letters.push_back(Letter::T(m.sign));
      r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
      r.letters.push_back(Letter::T(-m.sign));
      return r;
    }
    case MoveKind::Bbm: {
      MixedBraidWord r;
      r.strands = w.strands + 1;
      for (const auto& l : w.letters) {
        if (l.is_t) {
          auto t1 = expand_looping(1, false, l.sign, r.strands);
          r.letters.insert(r.letters.end(), t1.letters.begin(), t1.letters.end());
        } else {
          r.letters.push_back(Letter::S(l.index + 1, l.sign));
        }
      }
      r.letters.push_back(Letter::S(1, m.sign));
      return r;
    }
  }
  throw std::logic_error("unknown move");
}

LoopMonomial::LoopMonomial(LoopKind k, std::map<int, int> exps, MixedBraidWord tl)
    : kind(k), exponents(std::move(exps)), tail(std::move(tl)) {
  std::erase_if(exponents, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [i, e] : exponents)
    if (i < 0) throw std::out_of_range("negative looping index");
  for (const auto& l : tail.letters)
    if (l.is_t) throw std::invalid_argument("monomial tail may only contain sigma letters");
  // t_0 = t'_0, so monomials without higher loops carry a single canonical kind.
  if (max_index() <= 0) kind = LoopKind::Primed;
}

int LoopMonomial::exponent_total() const {
  int s = 0;
  for (const auto& [i, e] : exponents) s += e;
  return s;
}

int LoopMonomial::max_index() const { return exponents.empty() ? -1 : exponents.rbegin()->first; }

MixedBraidWord LoopMonomial::to_word(int strands) const {
  int n = std::max({strands, max_index() + 1, tail.strands, 1});
  MixedBraidWord w;
  w.strands = n;
  for (const auto& [i, e] : exponents) {
    auto part = expand_looping(i, kind == LoopKind::Primed, e, n);
    w.letters.insert(w.letters.end(), part.letters.begin(), part.letters.end());
  }
  w.letters.insert(w.letters.end(), tail.letters.begin(), tail.letters.end());
  return w;
}

std::string LoopMonomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, e] : exponents) {
    if (!first) os << ' ';
    first = false;
    os << 't';
    if (i > 0) os << i << (kind == LoopKind::Primed ? "'" : "");
    if (e != 1) os << '^' << e;
  }
  if (!tail.letters.empty()) os << (first ? "" : " ") << "| " << tail.str();
  if (first && tail.letters.empty()) os << '1';
  return os.str();
}

int index_of(const LoopMonomial& m) {
  return m.exponents.empty() ? 0 : static_cast<int>(m.exponents.size()) - 1;
}

std::strong_ordering compare_monomials(const LoopMonomial& a, const LoopMonomial& b) {
  // (a) exponent sums
  if (auto c = a.exponent_total() <=> b.exponent_total(); c != 0) return c;
  // (b)(i) index
  if (auto c = index_of(a) <=> index_of(b); c != 0) return c;
  // (b)(ii)(alpha) first differing looping index: smaller index means larger monomial
  auto ia = a.exponents.begin();
  auto ib = b.exponents.begin();
  for (; ia != a.exponents.end() && ib != b.exponents.end(); ++ia, ++ib)
    if (ia->first != ib->first) return ia->first < ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
  // (beta), (gamma) exponents scanned from the last looping generator backwards
  auto ra = a.exponents.rbegin();
  auto rb = b.exponents.rbegin();
  for (; ra != a.exponents.rend(); ++ra, ++rb) {
    int k = ra->second, l = rb->second;
    if (k == l) continue;
    if (std::abs(k) != std::abs(l)) return std::abs(k) < std::abs(l) ? std::strong_ordering::less : std::strong_ordering::greater;
    return k > l ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // (delta) equal loop parts; deterministic refinement by kind and tail
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.tail.letters.size() <=> b.tail.letters.size(); c != 0) return c;
  return a.tail.letters <=> b.tail.letters;
}

std::strong_ordering compare_D(std::pair<int, int> a, std::pair<int, int> b) {
  if (a.first < 0 || a.second < 0 || b.first < 0 || b.second < 0)
    throw std::invalid_argument("compare_D expects nonnegative indices");
  if (auto c = a.first + a.second <=> b.first + b.second; c != 0) return c;
  return a.first <=> b.first;
}

}  // namespace skein
