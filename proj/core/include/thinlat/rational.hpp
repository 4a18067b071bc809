#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thinlat {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer int_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// gcd on Q: gcd(p/q, r/s) = gcd(p,r)/lcm(q,s), the largest rational dividing
// both with integer quotients. Used for polynomial contents.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
  if (is_zero(a)) return abs(b);
  if (is_zero(b)) return abs(a);
  Rational g(int_gcd(a.get_num(), b.get_num()), int_lcm(a.get_den(), b.get_den()));
  g.canonicalize();
  return g;
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  if (inv && is_zero(b)) throw std::domain_error("rat_pow: zero to negative power");
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), k);
  r.canonicalize();
  if (inv) r = 1 / r;
  return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer isqrt_floor(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt_floor: negative argument");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// n = square * kernel with kernel square-free. Trial division; inputs here are
// small (radicands from matrix entries, user-supplied d).
struct SquareSplit {
  Integer square_root;  // s with n = s^2 * kernel
  Integer kernel;
};

inline SquareSplit split_square(const Integer& n_in) {
  if (sgn(n_in) <= 0) throw std::domain_error("split_square: argument must be positive");
  Integer n = n_in, s = 1, kernel = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) kernel *= p;
    if (e >= 2) s *= int_pow(p, e / 2);
  }
  kernel *= n;  // leftover prime
  return {s, kernel};
}

inline bool is_square_free(const Integer& n) {
  if (sgn(n) <= 0) return false;
  return split_square(n).square_root == 1;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse rational: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace thinlat
