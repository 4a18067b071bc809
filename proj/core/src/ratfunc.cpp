#include "thinlat/ratfunc.hpp"

namespace thinlat {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(QuadElem(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_exact_div(num_, g);
    den_ = poly_exact_div(den_, g);
  }
  QuadElem lead_inv = den_.lead().inverse();
  num_ *= lead_inv;
  den_ *= lead_inv;
}

RatFunc RatFunc::from_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return RatFunc();
  return RatFunc(p.numerator_poly(), Poly::monomial(static_cast<int>(p.denominator_exponent())));
}

LaurentPoly RatFunc::to_laurent(char var) const {
  if (!is_laurent()) throw std::domain_error("RatFunc::to_laurent: denominator is not a monomial");
  return LaurentPoly::from_poly(num_, var).shifted(-den_.degree());
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: division by zero");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  QuadElem lead_inv = r.den_.lead().inverse();
  r.num_ *= lead_inv;
  r.den_ *= lead_inv;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  if (num_.is_zero()) {
    den_ = Poly(QuadElem(1));
    return *this;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  // Cross-reduce before multiplying to keep degrees down.
  Poly g1 = poly_gcd(num_, o.den_);
  Poly g2 = poly_gcd(o.num_, den_);
  Poly n1 = g1.degree() > 0 ? poly_exact_div(num_, g1) : num_;
  Poly d2 = g1.degree() > 0 ? poly_exact_div(o.den_, g1) : o.den_;
  Poly n2 = g2.degree() > 0 ? poly_exact_div(o.num_, g2) : o.num_;
  Poly d1 = g2.degree() > 0 ? poly_exact_div(den_, g2) : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (num_.is_zero()) {
    den_ = Poly(QuadElem(1));
    return *this;
  }
  QuadElem lead_inv = den_.lead().inverse();
  num_ *= lead_inv;
  den_ *= lead_inv;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

QuadElem RatFunc::eval(const QuadElem& x) const {
  QuadElem d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RatFunc::eval: denominator vanishes");
  return num_.eval(x) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  std::string n = num_.str(var);
  std::string d = den_.str(var);
  auto wrap = [](const std::string& s) {
    return s.find_first_of("+-") != std::string::npos || s.find('*') != std::string::npos
               ? "(" + s + ")"
               : s;
  };
  return wrap(n) + "/" + wrap(d);
}

}  // namespace thinlat
