#pragma once

#include <map>
#include <string>
#include <tuple>

#include "skein/braid.hpp"
#include "skein/laurent.hpp"

namespace skein {

/// Exact arithmetic in the two-strand algebra H_{1,2}, over Z[u^+-1].
///
/// Elements are stored in the plain basis t^a t_1^b sigma^eps (a, b in Z, eps in {0,1});
/// t and t_1 commute and t t_1 is central, which makes left multiplication by sigma
/// a finite rewrite:
///   sigma t   = t_1 sigma - d t_1
///   sigma t_1 = t sigma + d t_1          (d = u - u^-1)
namespace h12 {

struct Key {
  int a = 0;  // exponent of t
  int b = 0;  // exponent of t_1
  int eps = 0;
  friend auto operator<=>(const Key&, const Key&) = default;
};

class Elem {
 public:
  Elem() = default;
  static Elem one();
  static Elem basis(Key k, const LaurentPoly& c = LaurentPoly::one(Var::u));
  static Elem t(int k = 1) { return basis({k, 0, 0}); }
  static Elem t1(int k = 1) { return basis({0, k, 0}); }
  static Elem sigma(int sign = 1);

  const std::map<Key, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(Key k, const LaurentPoly& c);
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator*(const LaurentPoly& c, const Elem& e);
  friend bool operator==(const Elem&, const Elem&) = default;
  std::string str() const;

 private:
  std::map<Key, LaurentPoly> terms_;
};

/// Image of a word on at most two strands.
Elem from_word(const MixedBraidWord& w);

/// Inductive-basis coordinates: P(a,k) = t^a t'_1^k and Q(a,k) = t^a t'_1^k sigma = t^a sigma t^k.
struct PrimedKey {
  int a = 0;
  int k = 0;
  bool sigma = false;
  friend auto operator<=>(const PrimedKey&, const PrimedKey&) = default;
};

Elem primed_basis(const PrimedKey& pk);

/// Rewrites a plain-basis element in the primed basis {t^a t'_1^k, t^a t'_1^k sigma}.
std::map<PrimedKey, LaurentPoly> to_primed(const Elem& e);

}  // namespace h12
}  // namespace skein
