#include "thinlat/quadratic.hpp"

#include <ostream>
#include <sstream>

namespace thinlat {

QuadElem::QuadElem(const Rational& a, const Rational& b, long m) : a_(a), b_(b), m_(m) {
  a_.canonicalize();
  b_.canonicalize();
  if (!thinlat::is_zero(b_)) {
    if (m_ < 2) throw std::invalid_argument("QuadElem: radicand must be >= 2");
    if (!is_square_free(Integer(m_))) throw std::invalid_argument("QuadElem: radicand must be square-free");
  }
  normalize();
}

void QuadElem::normalize() {
  if (thinlat::is_zero(b_)) m_ = 0;
}

QuadElem QuadElem::sqrt_of(const Integer& n) {
  SquareSplit s = split_square(n);
  if (s.kernel == 1) return QuadElem(Rational(s.square_root));
  return QuadElem(Rational(0), Rational(s.square_root), s.kernel.get_si());
}

long QuadElem::merge_context(long m1, long m2) {
  if (m1 == 0) return m2;
  if (m2 == 0 || m1 == m2) return m1;
  throw std::invalid_argument("QuadElem: mixing elements of Q(sqrt(" + std::to_string(m1) +
                              ")) and Q(sqrt(" + std::to_string(m2) + "))");
}

QuadElem QuadElem::conj() const {
  QuadElem r = *this;
  r.b_ = -r.b_;
  r.normalize();
  return r;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw std::domain_error("QuadElem: division by zero");
  Rational n = norm();
  QuadElem r = conj();
  r.a_ /= n;
  r.b_ /= n;
  r.normalize();
  return r;
}

QuadElem QuadElem::pow(long e) const {
  QuadElem base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  QuadElem acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

int QuadElem::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 m.
  int cmp = sgn(a_ * a_ - b_ * b_ * Rational(m_));
  return cmp == 0 ? 0 : cmp * sa;
}

QuadElem QuadElem::operator-() const {
  QuadElem r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  m_ = merge_context(m_, o.m_);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  m_ = merge_context(m_, o.m_);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  long m = merge_context(m_, o.m_);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(m);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  m_ = m;
  normalize();
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) { return *this *= o.inverse(); }

std::string QuadElem::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadElem& q) {
  if (q.is_rational()) return os << q.a().get_str();
  bool have_a = !thinlat::is_zero(q.a());
  if (have_a) os << q.a().get_str();
  const Rational& b = q.b();
  if (have_a && sgn(b) > 0) os << "+";
  if (b == -1)
    os << "-";
  else if (b != 1)
    os << b.get_str() << "*";
  os << "sqrt(" << q.m() << ")";
  return os;
}

QuadElem abs(const QuadElem& q) { return q.sign() < 0 ? -q : q; }

}  // namespace thinlat
