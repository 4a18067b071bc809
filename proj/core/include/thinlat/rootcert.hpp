#pragma once

#include "thinlat/poly.hpp"

#include <optional>
#include <vector>

namespace thinlat {

/// Closed rational interval [lo, hi].
struct RatInterval {
  Rational lo, hi;
};

/// [lo, hi] with lo^2 <= x <= hi^2, tightened to ~2^-bits.
RatInterval rat_sqrt_interval(const Rational& x, int bits);

/// Sturm chain of a squarefree rational polynomial.
std::vector<Poly> sturm_chain(const Poly& p);

/// Number of real roots in (a, b].
int sturm_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b);

/// Disjoint isolating intervals (a, b] for all real roots of a squarefree
/// rational polynomial, each refined to width <= tol.
std::vector<RatInterval> isolate_real_roots(const Poly& p, const Rational& tol);

/// One certified root region of a squarefree polynomial.
struct RootRegion {
  double approx_re = 0, approx_im = 0;
  bool certified_real = false;
  std::optional<RatInterval> real_interval;  // present for real roots
  Rational center_re, center_im;             // exact disk center (from approx)
  Rational radius_sq;                        // disk radius^2 bound (deg * |p/p'|)^2
  RatInterval modulus;                       // certified bounds on |root|
};

/// Certified regions for all deg(p) roots of a squarefree rational
/// polynomial: real roots via Sturm isolation, nonreal ones via
/// Durand-Kerner approximation plus the exact n*|p(z)/p'(z)| disk bound.
/// Returns nullopt when the nonreal disks fail to separate (caller reports
/// indeterminate rather than guessing).
std::optional<std::vector<RootRegion>> certify_roots(const Poly& p, int bits = 40);

}  // namespace thinlat
