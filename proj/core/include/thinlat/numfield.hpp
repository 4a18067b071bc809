#pragma once

#include "thinlat/quadratic.hpp"
#include "thinlat/word.hpp"

#include <vector>

namespace thinlat {

/// Real quadratic field Q(sqrt(d)) with its ring of integers
/// (Z[(1+sqrt(d))/2] when d = 1 mod 4, Z[sqrt(d)] otherwise).
class QuadraticField {
 public:
  explicit QuadraticField(long d);

  long d() const { return d_; }
  bool half_integer_basis() const { return d_ % 4 == 1; }

  QuadElem tau(const QuadElem& x) const { return x.conj(); }

  /// Membership in the ring of integers.
  bool is_integral(const QuadElem& x) const;

 private:
  long d_;
};

/// Continued fraction of (p0 + sqrt(d)) / q0 with q0 | d - p0^2, expanded
/// until the (P, Q) state repeats. partials[0] is the integer part; the
/// periodic block is partials[period_start..].
struct ContinuedFraction {
  std::vector<Integer> partials;
  size_t period_start = 0;
  size_t period_len = 0;
};

ContinuedFraction continued_fraction(long d, const Integer& p0, const Integer& q0,
                                     size_t max_terms = 100000);

/// Continued fraction of the standard generator of the ring of integers:
/// sqrt(d), or (1 + sqrt(d))/2 when d = 1 mod 4.
ContinuedFraction ring_generator_cf(long d);

struct UnitRecord {
  QuadElem eps;  // fundamental unit, least unit > 1
  int eps_norm;  // +1 or -1
  QuadElem u;    // positive unit eps^2 (or eps^{2k} on request)
};

/// Fundamental unit via continued-fraction convergents of the ring
/// generator; u = eps^2 so that u tau(u) = 1 always holds.
UnitRecord fundamental_unit(long d);

/// eps^{2k} for k >= 1.
UnitRecord unit_with_power(long d, long k);

struct IntegralTraceVerdict {
  bool pass = false;
  size_t words_checked = 0;
  std::vector<Word> failures;
  size_t fully_integral_entry_words = 0;  // words whose whole matrix lies in O_k
};

/// Traces of all words of length <= radius, specialized at v = u, are
/// algebraic integers. Evaluates both the Laurent trace at v = u and the
/// phi image at t = u/2 and requires them to agree. Refuses to run unless
/// the two-basis trace certificate has been established.
IntegralTraceVerdict certify_integral_traces(long d, const QuadElem& u, int radius,
                                             bool trace_certificate_established);

}  // namespace thinlat
