#pragma once

#include "thinlat/laurent.hpp"
#include "thinlat/poly.hpp"

#include <string>

namespace thinlat {

/// Normalized rational function over Q(sqrt(m)): numerator/denominator
/// coprime, denominator monic and nonzero. Equality is literal equality of
/// the normalized parts.
class RatFunc {
 public:
  RatFunc() : num_(), den_(QuadElem(1)) {}
  RatFunc(long c) : num_(QuadElem(c)), den_(QuadElem(1)) {}
  RatFunc(const QuadElem& c) : num_(c), den_(QuadElem(1)) {}
  RatFunc(const Poly& p) : num_(p), den_(QuadElem(1)) {}
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc variable() { return RatFunc(Poly::variable()); }
  static RatFunc from_laurent(const LaurentPoly& p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// True iff the denominator is a power of the variable.
  bool is_laurent() const { return is_unit_monomial(den_); }
  LaurentPoly to_laurent(char var = 'v') const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc l, const RatFunc& r) { return l += r; }
  friend RatFunc operator-(RatFunc l, const RatFunc& r) { return l -= r; }
  friend RatFunc operator*(RatFunc l, const RatFunc& r) { return l *= r; }
  friend RatFunc operator/(RatFunc l, const RatFunc& r) { return l /= r; }

  friend bool operator==(const RatFunc& l, const RatFunc& r) {
    return l.num_ == r.num_ && l.den_ == r.den_;
  }
  friend bool operator!=(const RatFunc& l, const RatFunc& r) { return !(l == r); }

  /// Exact evaluation; throws when the denominator vanishes.
  QuadElem eval(const QuadElem& x) const;

  std::string str(const std::string& var = "v") const;

 private:
  void normalize();
  Poly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline bool is_one(const RatFunc& f) { return f.is_one(); }

}  // namespace thinlat
