#include "thinlat/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace thinlat {

Poly::Poly(const QuadElem& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<QuadElem> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int deg, const QuadElem& c) {
  if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  if (c.is_zero()) return Poly();
  std::vector<QuadElem> v(static_cast<size_t>(deg) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const QuadElem& Poly::lead() const {
  if (c_.empty()) throw std::domain_error("Poly::lead on zero polynomial");
  return c_.back();
}

QuadElem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return QuadElem();
  return c_[static_cast<size_t>(i)];
}

int Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return 0;
}

bool Poly::all_coeffs_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const QuadElem& q) { return q.is_rational(); });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<QuadElem> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const QuadElem& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

QuadElem Poly::eval(const QuadElem& x) const {
  QuadElem acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<QuadElem> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * QuadElem(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<QuadElem> r(c_.size() + static_cast<size_t>(k));
  std::copy(c_.begin(), c_.end(), r.begin() + k);
  return Poly(std::move(r));
}

Poly Poly::pow(unsigned long e) const {
  Poly acc(QuadElem(1)), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::scale_variable(const QuadElem& c) const {
  Poly r = *this;
  QuadElem p(1);
  for (size_t i = 0; i < r.c_.size(); ++i) {
    r.c_[i] *= p;
    p = p * c;
  }
  r.trim();
  return r;
}

Rational Poly::content() const {
  Rational g(0);
  for (const auto& q : c_) {
    g = rat_gcd(g, q.a());
    g = rat_gcd(g, q.b());
  }
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Rational c = content();
  Poly r = *this;
  QuadElem inv(1 / c);
  for (auto& q : r.c_) q *= inv;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  QuadElem inv = lead().inverse();
  for (auto& q : r.c_) q *= inv;
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const QuadElem& q = c_[i];
    if (q.is_zero()) continue;
    std::string cs = q.str();
    bool negated = false;
    if (!first) {
      if (cs.size() && cs[0] == '-' && q.is_rational()) {
        os << "-";
        cs = cs.substr(1);
        negated = true;
      } else {
        os << "+";
      }
    }
    bool needs_parens = !q.is_rational() && i > 0;
    bool unit_coeff = (q.is_one() || (negated && cs == "1")) && i > 0;
    if (needs_parens) os << "(" << (negated ? "-" : "") << q.str() << ")";
    else if (!unit_coeff) os << cs;
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

PolyDivRem poly_divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
  Poly rem = p;
  if (p.degree() < q.degree()) return {Poly(), rem};
  std::vector<QuadElem> quo(static_cast<size_t>(p.degree() - q.degree()) + 1);
  QuadElem lq_inv = q.lead().inverse();
  std::vector<QuadElem> rc(rem.coeffs());
  const auto& qc = q.coeffs();
  int dq = q.degree();
  for (int k = p.degree() - dq; k >= 0; --k) {
    QuadElem f = rc[static_cast<size_t>(k + dq)] * lq_inv;
    if (f.is_zero()) continue;
    quo[static_cast<size_t>(k)] = f;
    for (int j = 0; j <= dq; ++j) rc[static_cast<size_t>(k + j)] -= f * qc[static_cast<size_t>(j)];
  }
  rc.resize(static_cast<size_t>(std::max(dq, 0)));
  return {Poly(std::move(quo)), Poly(std::move(rc))};
}

Poly poly_exact_div(const Poly& p, const Poly& q) {
  PolyDivRem dr = poly_divrem(p, q);
  if (!dr.rem.is_zero()) throw std::domain_error("poly_exact_div: division not exact");
  return dr.quo;
}

bool poly_divides(const Poly& d, const Poly& p) {
  if (d.is_zero()) return p.is_zero();
  return poly_divrem(p, d).rem.is_zero();
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  // Monomial fast path; RatFunc denominators are usually powers of the
  // variable.
  auto monomial_of = [](const Poly& f) {
    for (int i = 0; i < f.degree(); ++i)
      if (!f.coeff(i).is_zero()) return -1;
    return f.degree();
  };
  int mp = monomial_of(p), mq = monomial_of(q);
  if (mp >= 0) return Poly::monomial(std::min(mp, q.valuation()));
  if (mq >= 0) return Poly::monomial(std::min(mq, p.valuation()));

  // Primitive Euclid: content-strip every remainder to keep coefficients small.
  Poly a = p.primitive(), b = q.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = poly_divrem(a, b).rem;
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.primitive();
  }
  return a.monic();
}

bool is_unit_monomial(const Poly& p) {
  if (p.is_zero()) return false;
  if (!p.lead().is_one()) return false;
  for (int i = 0; i < p.degree(); ++i)
    if (!p.coeff(i).is_zero()) return false;
  return true;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly f = p.monic();
  if (f.degree() == 0) return out;
  Poly d = poly_gcd(f, f.derivative());
  Poly b = poly_exact_div(f, d);
  Poly c = poly_exact_div(f.derivative(), d);
  Poly z = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly a = poly_gcd(b, z);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = poly_exact_div(b, a);
    c = poly_exact_div(z, a);
    z = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
  if (!p.all_coeffs_rational())
    throw std::domain_error("rational_roots: coefficients are not all rational");
  std::vector<std::pair<Rational, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  Poly f = p;
  int val = f.valuation();
  if (val > 0) {
    std::vector<QuadElem> shifted(f.coeffs().begin() + val, f.coeffs().end());
    f = Poly(std::move(shifted));
    out.emplace_back(Rational(0), val);
  }
  // Clear to integer coefficients.
  Integer den = 1;
  for (const auto& q : f.coeffs()) den = int_lcm(den, q.a().get_den());
  std::vector<Integer> ic;
  for (const auto& q : f.coeffs()) {
    Rational r = q.a() * Rational(den);
    ic.push_back(r.get_num());
  }
  auto divisors = [](Integer n) {
    n = abs(n);
    std::vector<Integer> ds;
    for (Integer i = 1; i * i <= n; ++i) {
      if (n % i == 0) {
        ds.push_back(i);
        if (i * i != n) ds.push_back(n / i);
      }
    }
    return ds;
  };
  if (f.degree() > 0) {
    std::vector<Integer> ps = divisors(ic.front());
    std::vector<Integer> qs = divisors(ic.back());
    std::vector<Rational> candidates;
    for (const auto& a : ps)
      for (const auto& b : qs)
        for (int s : {1, -1}) {
          Rational r(s * a, b);
          r.canonicalize();
          candidates.push_back(r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      while (f.degree() > 0 && f.eval(QuadElem(r)).is_zero()) {
        Poly lin({std::vector<QuadElem>{QuadElem(-r), QuadElem(1)}});
        f = poly_exact_div(f, lin);
        ++mult;
      }
      if (mult > 0) out.emplace_back(r, mult);
    }
  }
  return out;
}

std::vector<PolyFactor> factor_for_report(const Poly& p) {
  std::vector<PolyFactor> out;
  for (auto& [sf, mult] : squarefree_decomposition(p)) {
    Poly f = sf;
    int val = f.valuation();
    if (val > 0) {
      out.push_back({Poly::variable(), mult, true});
      std::vector<QuadElem> rest(f.coeffs().begin() + val, f.coeffs().end());
      f = Poly(std::move(rest));
    }
    if (f.degree() == 0) continue;
    if (f.all_coeffs_rational()) {
      for (auto& [root, rmult] : rational_roots(f)) {
        Poly lin({std::vector<QuadElem>{QuadElem(-root), QuadElem(1)}});
        out.push_back({lin, mult * rmult, true});
        for (int i = 0; i < rmult; ++i) f = poly_exact_div(f, lin);
      }
    }
    if (f.degree() == 0) continue;
    bool irred = f.degree() == 1;
    if (f.degree() == 2 && f.all_coeffs_rational()) {
      // No rational root survived; over Q a rootless quadratic is irreducible.
      irred = true;
    }
    out.push_back({f.monic(), mult, irred});
  }
  auto key = [](const Poly& f) { return f.str(); };
  std::sort(out.begin(), out.end(), [&](const PolyFactor& l, const PolyFactor& r) {
    if (l.factor.degree() != r.factor.degree()) return l.factor.degree() < r.factor.degree();
    return key(l.factor) < key(r.factor);
  });
  return out;
}

}  // namespace thinlat
