#pragma once

#include "thinlat/quadratic.hpp"
#include "thinlat/laurent.hpp"
#include "thinlat/word.hpp"

#include <array>
#include <random>

namespace thinlat::testutil {

inline Rational random_rational(std::mt19937_64& rng, long height = 20) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, height);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline QuadElem random_quad(std::mt19937_64& rng, long m, long height = 20) {
  if (m == 0) return QuadElem(random_rational(rng, height));
  return QuadElem(random_rational(rng, height), random_rational(rng, height), m);
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, long m, int terms = 4, long span = 4,
                                  char var = 'v') {
  LaurentPoly p;
  std::uniform_int_distribution<long> exp(-span, span);
  for (int i = 0; i < terms; ++i)
    p += LaurentPoly(random_quad(rng, m, 6), exp(rng), var);
  return p;
}

inline Word random_word(std::mt19937_64& rng, int len) {
  Word w;
  std::uniform_int_distribution<int> letter(0, 3);
  while (static_cast<int>(w.length()) < len) w.push(static_cast<Letter>(letter(rng)));
  return w;
}

/// Minimal unit > 1 of the ring of integers of Q(sqrt(d)) by direct search
/// over coefficients; independent of the continued-fraction path.
inline QuadElem brute_force_fundamental_unit(long d) {
  bool half = d % 4 == 1;
  QuadElem sd = QuadElem::sqrt_of(Integer(d));
  const std::array<long, 2> targets = half ? std::array<long, 2>{4, -4} : std::array<long, 2>{1, -1};
  for (long b = 1; b <= 200000; ++b) {
    QuadElem best;
    Integer db2 = Integer(d) * b * b;
    for (long target : targets) {
      Integer a2 = db2 + target;
      if (sgn(a2) <= 0 || !is_perfect_square(a2)) continue;
      Integer a = isqrt_floor(a2);
      if (half && (a - Integer(b)) % 2 != 0) continue;
      Rational den(half ? 2 : 1);
      QuadElem cand = QuadElem(Rational(a) / den) + QuadElem(Rational(b) / den) * sd;
      if (QuadElem(1) < cand && (best.is_zero() || cand < best)) best = cand;
    }
    if (!best.is_zero()) return best;  // least b gives the least unit > 1
  }
  throw std::runtime_error("brute_force_fundamental_unit: search bound exceeded");
}

}  // namespace thinlat::testutil
