#pragma once

#include "thinlat/rational.hpp"

#include <iosfwd>
#include <string>

namespace thinlat {

/// Element a + b*sqrt(m) of a real quadratic field Q(sqrt(m)).
///
/// m is the square-free radicand of the ambient field. Elements with b = 0
/// are stored with m = 0 ("plain rational") and combine with any field;
/// arithmetic between elements of two genuinely different fields throws.
class QuadElem {
 public:
  QuadElem() : a_(0), b_(0), m_(0) {}
  QuadElem(long v) : a_(v), b_(0), m_(0) {}
  QuadElem(const Rational& a) : a_(a), b_(0), m_(0) { a_.canonicalize(); }
  QuadElem(const Rational& a, const Rational& b, long m);

  /// sqrt(n) for a positive integer n, radicand normalized to its
  /// square-free kernel: sqrt(12) is stored as 2*sqrt(3).
  static QuadElem sqrt_of(const Integer& n);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long m() const { return m_; }

  bool is_zero() const { return thinlat::is_zero(a_) && thinlat::is_zero(b_); }
  bool is_one() const { return a_ == 1 && thinlat::is_zero(b_); }
  bool is_rational() const { return thinlat::is_zero(b_); }

  /// Galois involution tau: b -> -b.
  QuadElem conj() const;
  /// a^2 - b^2 m, rational.
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(m_); }
  /// 2a, rational.
  Rational field_trace() const { return 2 * a_; }

  QuadElem inverse() const;
  QuadElem pow(long e) const;

  /// Sign under the real embedding sqrt(m) > 0. Exact.
  int sign() const;

  QuadElem operator-() const;
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);

  friend QuadElem operator+(QuadElem l, const QuadElem& r) { return l += r; }
  friend QuadElem operator-(QuadElem l, const QuadElem& r) { return l -= r; }
  friend QuadElem operator*(QuadElem l, const QuadElem& r) { return l *= r; }
  friend QuadElem operator/(QuadElem l, const QuadElem& r) { return l /= r; }

  friend bool operator==(const QuadElem& l, const QuadElem& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.m_ == r.m_;
  }
  friend bool operator!=(const QuadElem& l, const QuadElem& r) { return !(l == r); }
  friend bool operator<(const QuadElem& l, const QuadElem& r) { return (l - r).sign() < 0; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadElem& q);

 private:
  // Shared field context for two operands; throws on a genuine mismatch.
  static long merge_context(long m1, long m2);
  void normalize();

  Rational a_, b_;
  long m_;
};

inline bool is_zero(const QuadElem& q) { return q.is_zero(); }
inline bool is_one(const QuadElem& q) { return q.is_one(); }

QuadElem abs(const QuadElem& q);

}  // namespace thinlat
