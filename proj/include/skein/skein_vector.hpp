#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Linear combination of basis labels t^n (n >= 0) of KBSM(ST) with coefficients in Z[A^+-1].
/// t^0 is the affine unknot.
class SkeinVector {
 public:
  SkeinVector() = default;
  static SkeinVector basis(int n, const LaurentPoly& c = LaurentPoly::one(Var::A));

  const std::map<int, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(int n) const;

  SkeinVector& add(int n, const LaurentPoly& c);
  SkeinVector& operator+=(const SkeinVector& o);
  SkeinVector& operator-=(const SkeinVector& o);
  SkeinVector operator-() const;
  friend SkeinVector operator+(SkeinVector a, const SkeinVector& b) { return a += b; }
  friend SkeinVector operator-(SkeinVector a, const SkeinVector& b) { return a -= b; }
  friend SkeinVector operator*(const LaurentPoly& c, const SkeinVector& v);
  friend bool operator==(const SkeinVector&, const SkeinVector&) = default;

  // "-A^-2 t^2 + (-A^2) t^0" style, descending labels.
  std::string str() const;

 private:
  std::map<int, LaurentPoly> terms_;
};

/// Product of basis elements p_k * p_m in the skein algebra of the annulus:
///   p_k p_m = -A^-2 p_{k+m} + A^6 p_{k+m-2} + A^4 p_{k-1} p_{m-1}   (k >= m >= 1)
///   p_k p_0 = delta p_k
SkeinVector basis_product(int k, int m);

/// Bilinear extension of basis_product.
SkeinVector skein_product(const SkeinVector& a, const SkeinVector& b);

/// Image under the reflection of the annulus (A -> A^-1). The core curve and t^0 are fixed;
/// t^n is not, since its self-crossings change sign.
SkeinVector mirror(const SkeinVector& v);

/// Closure of t^k on one strand: t^k for k >= 0, the mirror of t^{-k} for k < 0.
SkeinVector winding_class(int k);

/// Product of winding_class(w) over the list, folded from the largest |w| down; empty list gives t^0.
SkeinVector product_of_windings(std::vector<int> windings);

}  // namespace skein
