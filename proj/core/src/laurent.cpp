#include "thinlat/laurent.hpp"

#include <sstream>

namespace thinlat {

LaurentPoly::LaurentPoly(const QuadElem& c) {
  if (!c.is_zero()) c_[0] = c;
}

LaurentPoly::LaurentPoly(const QuadElem& c, long exp, char var) : var_(var) {
  if (!c.is_zero()) c_[exp] = c;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p, char var) {
  LaurentPoly r;
  r.var_ = var;
  const auto& cs = p.coeffs();
  for (size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) r.c_[static_cast<long>(i)] = cs[i];
  return r;
}

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
}

long LaurentPoly::min_exp() const {
  if (c_.empty()) return 0;
  return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (c_.empty()) return 0;
  return c_.rbegin()->first;
}

QuadElem LaurentPoly::coeff(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? QuadElem() : it->second;
}

bool LaurentPoly::all_coeffs_rational() const {
  for (const auto& [e, q] : c_)
    if (!q.is_rational()) return false;
  return true;
}

bool LaurentPoly::all_coeffs_integer() const {
  for (const auto& [e, q] : c_)
    if (!q.is_rational() || !is_integer(q.a())) return false;
  return true;
}

void LaurentPoly::set_coeff(long e, const QuadElem& q) {
  if (q.is_zero())
    c_.erase(e);
  else
    c_[e] = q;
}

char LaurentPoly::merge_var(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_constant()) return b.var_;
  if (b.is_constant() || a.var_ == b.var_) return a.var_;
  throw std::invalid_argument(std::string("LaurentPoly: mixing variables ") + a.var_ + " and " + b.var_);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, q] : r.c_) q = -q;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  var_ = merge_var(*this, o);
  for (const auto& [e, q] : o.c_) set_coeff(e, coeff(e) + q);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  var_ = merge_var(*this, o);
  for (const auto& [e, q] : o.c_) set_coeff(e, coeff(e) - q);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  var_ = merge_var(*this, o);
  std::map<long, QuadElem> r;
  for (const auto& [e1, q1] : c_)
    for (const auto& [e2, q2] : o.c_) {
      auto it = r.find(e1 + e2);
      if (it == r.end())
        r.emplace(e1 + e2, q1 * q2);
      else
        it->second += q1 * q2;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  c_ = std::move(r);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const QuadElem& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [e, q] : c_) q *= s;
  return *this;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.var_ = var_;
  for (const auto& [e, q] : c_) r.c_[-e] = q;
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  r.var_ = var_;
  for (const auto& [e, q] : c_) r.c_[e + k] = q;
  return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e == 0) return LaurentPoly(QuadElem(1));
  if (c_.size() == 1) {
    // monomial fast path
    const auto& [exp, q] = *c_.begin();
    return LaurentPoly(q.pow(e), exp * e, var_);
  }
  if (e < 0) throw std::domain_error("LaurentPoly::pow: negative power of non-monomial");
  LaurentPoly acc(QuadElem(1)), base = *this;
  long k = e;
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

QuadElem LaurentPoly::eval(const QuadElem& x) const {
  QuadElem acc;
  for (const auto& [e, q] : c_) acc += q * x.pow(e);
  return acc;
}

LaurentPoly LaurentPoly::substitute_scaled(const QuadElem& c, char new_var) const {
  LaurentPoly r;
  r.var_ = new_var;
  for (const auto& [e, q] : c_) {
    QuadElem coeff = q * c.pow(e);
    if (!coeff.is_zero()) r.c_[e] = coeff;
  }
  return r;
}

Rational LaurentPoly::content() const {
  Rational g(0);
  for (const auto& [e, q] : c_) {
    g = rat_gcd(g, q.a());
    g = rat_gcd(g, q.b());
  }
  return g;
}

LaurentPoly LaurentPoly::primitive() const {
  if (is_zero()) return *this;
  QuadElem inv(1 / content());
  LaurentPoly r = *this;
  for (auto& [e, q] : r.c_) q *= inv;
  return r;
}

Poly LaurentPoly::numerator_poly() const {
  if (is_zero()) return Poly();
  long shift = std::min(min_exp(), 0L);
  std::vector<QuadElem> cs(static_cast<size_t>(max_exp() - shift) + 1);
  for (const auto& [e, q] : c_) cs[static_cast<size_t>(e - shift)] = q;
  return Poly(std::move(cs));
}

long LaurentPoly::denominator_exponent() const {
  if (is_zero()) return 0;
  return -std::min(min_exp(), 0L);
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, q] = *it;
    std::string cs = q.str();
    if (!first) {
      if (cs.size() && cs[0] == '-' && q.is_rational()) {
        os << "-";
        cs = cs.substr(1);
      } else {
        os << "+";
      }
    } else if (!q.is_rational()) {
      cs = q.str();
    }
    bool unit = cs == "1" && e != 0;
    if (!q.is_rational() && e != 0)
      os << "(" << cs << ")";
    else if (!unit)
      os << cs;
    if (e != 0) {
      if (!unit) os << "*";
      os << var_;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace thinlat
