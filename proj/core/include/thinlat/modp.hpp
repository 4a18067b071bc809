#pragma once

#include "thinlat/laurent.hpp"
#include "thinlat/matrix.hpp"
#include "thinlat/quadratic.hpp"

#include <cstdint>

namespace thinlat {

/// Prime field for numeric screening. The modulus is fixed: it is = 11 mod 12,
/// so 3 is a quadratic residue and sqrt(3) = 3^((p+1)/4) mod p, letting
/// Q(sqrt(3)) coefficients project to F_p.
struct Fp {
  static constexpr uint64_t P = 1000000007ull;
  uint64_t v = 0;

  Fp() = default;
  Fp(long x) : v(x >= 0 ? static_cast<uint64_t>(x) % P : P - ((static_cast<uint64_t>(-(x + 1)) + 1) % P)) {
    if (v == P) v = 0;
  }

  friend Fp operator+(Fp a, Fp b) { return raw((a.v + b.v) % P); }
  friend Fp operator-(Fp a, Fp b) { return raw((a.v + P - b.v) % P); }
  friend Fp operator*(Fp a, Fp b) { return raw(a.v * b.v % P); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

  Fp pow(uint64_t e) const {
    Fp base = *this, acc = raw(1);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  Fp pow_signed(long e) const {
    if (e >= 0) return pow(static_cast<uint64_t>(e));
    return inverse().pow(static_cast<uint64_t>(-(e + 1)) + 1);
  }

  Fp inverse() const {
    if (v == 0) throw std::domain_error("Fp: inverse of zero");
    return pow(P - 2);
  }

  static Fp raw(uint64_t x) {
    Fp f;
    f.v = x;
    return f;
  }

  static Fp sqrt3() {
    static const Fp s = Fp(3).pow((P + 1) / 4);
    return s;
  }
};

inline bool is_zero(const Fp& x) { return x.v == 0; }
inline bool is_one(const Fp& x) { return x.v == 1; }

inline Fp to_fp(const Integer& n) {
  Integer r = n % Integer(static_cast<unsigned long>(Fp::P));
  if (sgn(r) < 0) r += Integer(static_cast<unsigned long>(Fp::P));
  return Fp::raw(r.get_ui());
}

inline Fp to_fp(const Rational& q) { return to_fp(q.get_num()) / to_fp(q.get_den()); }

/// Projection Q(sqrt(3)) -> F_p. Coefficients from other quadratic fields are
/// rejected; screening only ever sees Q and Q(sqrt(3)).
inline Fp to_fp(const QuadElem& q) {
  if (q.is_rational()) return to_fp(q.a());
  if (q.m() != 3) throw std::domain_error("to_fp: only Q(sqrt(3)) projects to F_p");
  return to_fp(q.a()) + to_fp(q.b()) * Fp::sqrt3();
}

inline Fp eval_fp(const LaurentPoly& p, Fp x) {
  Fp acc;
  for (const auto& [e, q] : p.terms()) acc = acc + to_fp(q) * x.pow_signed(e);
  return acc;
}

inline Mat4<Fp> eval_fp(const Mat4<LaurentPoly>& m, Fp x) {
  return m.map([&](const LaurentPoly& p) { return eval_fp(p, x); });
}

}  // namespace thinlat
