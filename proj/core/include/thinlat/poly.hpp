#pragma once

#include "thinlat/quadratic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace thinlat {

/// Dense univariate polynomial over Q(sqrt(m)), coefficients ascending.
/// The variable is anonymous; printing takes a name.
class Poly {
 public:
  Poly() = default;
  Poly(const QuadElem& c);
  Poly(long c) : Poly(QuadElem(c)) {}
  explicit Poly(std::vector<QuadElem> coeffs);

  static Poly monomial(int deg, const QuadElem& c = QuadElem(1));
  static Poly variable() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  const QuadElem& lead() const;
  QuadElem coeff(int i) const;
  const std::vector<QuadElem>& coeffs() const { return c_; }

  /// Largest k with x^k dividing the polynomial (0 for the zero poly).
  int valuation() const;
  bool all_coeffs_rational() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const QuadElem& s);

  friend Poly operator+(Poly l, const Poly& r) { return l += r; }
  friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
  friend Poly operator*(Poly l, const Poly& r) { return l *= r; }
  friend Poly operator*(Poly l, const QuadElem& s) { return l *= s; }
  friend Poly operator*(const QuadElem& s, Poly r) { return r *= s; }

  friend bool operator==(const Poly& l, const Poly& r) { return l.c_ == r.c_; }
  friend bool operator!=(const Poly& l, const Poly& r) { return !(l == r); }

  QuadElem eval(const QuadElem& x) const;
  Poly derivative() const;
  Poly shifted(int k) const;  // multiply by x^k, k >= 0
  Poly pow(unsigned long e) const;
  /// x -> c*x.
  Poly scale_variable(const QuadElem& c) const;

  /// Positive rational content over the (a, b) coordinate pairs.
  Rational content() const;
  Poly primitive() const;
  Poly monic() const;

  std::string str(const std::string& var = "v") const;

 private:
  void trim();
  std::vector<QuadElem> c_;
};

struct PolyDivRem {
  Poly quo, rem;
};

/// Euclidean division; divisor must be nonzero.
PolyDivRem poly_divrem(const Poly& p, const Poly& q);

/// Exact division; throws if the remainder is nonzero.
Poly poly_exact_div(const Poly& p, const Poly& q);

bool poly_divides(const Poly& d, const Poly& p);

/// Monic gcd. gcd(p, 0) = monic(p); gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

/// True iff p = x^k for some k >= 0 (p expected monic).
bool is_unit_monomial(const Poly& p);

/// Yun squarefree decomposition of a nonzero polynomial: list of
/// (factor, multiplicity) with factors monic, squarefree, pairwise coprime,
/// and p = lc * prod factor^mult.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

struct PolyFactor {
  Poly factor;  // monic
  int multiplicity = 1;
  bool known_irreducible = false;  // established for degree <= 2 over Q
};

/// Squarefree decomposition refined by monomial stripping, rational-root
/// extraction, and degree-2 irreducibility testing over Q. Factors of degree
/// >= 3 without rational roots are reported unrefined.
std::vector<PolyFactor> factor_for_report(const Poly& p);

/// All rational roots of a polynomial with rational coefficients, with
/// multiplicities. Throws if a coefficient is irrational.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

}  // namespace thinlat
