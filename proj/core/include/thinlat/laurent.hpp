#pragma once

#include "thinlat/poly.hpp"

#include <map>
#include <string>

namespace thinlat {

/// Laurent polynomial over Q(sqrt(m)): exponent -> coefficient map with no
/// stored zeros. The tag names the variable (v or t); constants are
/// tag-agnostic.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(QuadElem(c)) {}
  LaurentPoly(const QuadElem& c);
  LaurentPoly(const QuadElem& c, long exp, char var = 'v');

  static LaurentPoly variable(char var = 'v') { return LaurentPoly(QuadElem(1), 1, var); }
  static LaurentPoly from_poly(const Poly& p, char var = 'v');

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  char var() const { return var_; }
  long min_exp() const;
  long max_exp() const;
  QuadElem coeff(long e) const;
  const std::map<long, QuadElem>& terms() const { return c_; }

  bool all_coeffs_rational() const;
  bool all_coeffs_integer() const;
  QuadElem constant_term() const { return coeff(0); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const QuadElem& s);

  friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
  friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) { return l -= r; }
  friend LaurentPoly operator*(LaurentPoly l, const LaurentPoly& r) { return l *= r; }
  friend LaurentPoly operator*(LaurentPoly l, const QuadElem& s) { return l *= s; }
  friend LaurentPoly operator*(const QuadElem& s, LaurentPoly r) { return r *= s; }

  friend bool operator==(const LaurentPoly& l, const LaurentPoly& r) { return l.c_ == r.c_; }
  friend bool operator!=(const LaurentPoly& l, const LaurentPoly& r) { return !(l == r); }

  /// v -> 1/v (exponent negation); the entrywise half of the star involution.
  LaurentPoly bar() const;
  /// Multiply by v^k.
  LaurentPoly shifted(long k) const;
  LaurentPoly pow(long e) const;

  /// Exact evaluation; x must be invertible when negative exponents occur.
  QuadElem eval(const QuadElem& x) const;

  /// v -> c * u, also retagging the variable to `new_var` (e.g. v = 2t).
  LaurentPoly substitute_scaled(const QuadElem& c, char new_var) const;

  /// Divide every coefficient by the common rational content.
  LaurentPoly primitive() const;
  Rational content() const;

  /// Numerator polynomial after clearing v^{-min_exp}; pairs with
  /// denominator_exponent() to reconstruct the value.
  Poly numerator_poly() const;
  long denominator_exponent() const;  // k with value = numerator / v^k

  std::string str() const;

 private:
  void set_coeff(long e, const QuadElem& q);
  static char merge_var(const LaurentPoly& a, const LaurentPoly& b);

  std::map<long, QuadElem> c_;
  char var_ = 'v';
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_one(const LaurentPoly& p) { return p.is_one(); }

}  // namespace thinlat
