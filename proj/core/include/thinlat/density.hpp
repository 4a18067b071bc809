#pragma once

#include "thinlat/matrix.hpp"
#include "thinlat/poly.hpp"
#include "thinlat/quadratic.hpp"
#include "thinlat/rep.hpp"
#include "thinlat/word.hpp"

#include <array>
#include <string>
#include <vector>

namespace thinlat {

/// Fixed basis of sl4: the 12 off-diagonal elementary matrices in row-major
/// order, then E11-E22, E22-E33, E33-E44.
extern const std::array<Mat4<Rational>, 15>& sl4_basis();

/// Coordinates of a trace-zero matrix in the sl4 basis.
template <class F>
std::array<F, 15> sl4_coords(const Mat4<F>& x) {
  std::array<F, 15> c{};
  size_t idx = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      c[idx++] = x.at(i, j);
    }
  // diag (x1..x4), sum 0: coefficients of E11-E22, E22-E33, E33-E44 are the
  // partial sums x1, x1+x2, x1+x2+x3.
  F acc{};
  for (int k = 0; k < 3; ++k) {
    acc += x.at(k, k);
    c[static_cast<size_t>(12 + k)] = acc;
  }
  return c;
}

template <class F>
F field_from_rational(const Rational& r) {
  return F(r);
}
template <>
inline Rational field_from_rational<Rational>(const Rational& r) {
  return r;
}

/// 15x15 matrix of X -> g X g^{-1} on sl4 (g with det 1; inverse by
/// adjugate).
template <class F>
DMat<F> adjoint_operator(const Mat4<F>& g) {
  Mat4<F> ginv = adjugate4(g);
  DMat<F> out(15, 15);
  for (size_t col = 0; col < 15; ++col) {
    Mat4<F> b;
    const Mat4<Rational>& bq = sl4_basis()[col];
    for (size_t e = 0; e < 16; ++e) b.e[e] = field_from_rational<F>(bq.e[e]);
    Mat4<F> conj = g * b * ginv;
    auto coords = sl4_coords(conj);
    for (size_t rowi = 0; rowi < 15; ++rowi) out.at(rowi, col) = coords[rowi];
  }
  return out;
}

struct AdjointSpanResult {
  size_t dimension = 0;
  size_t words_used = 0;        // how many ball words were consumed
  size_t words_total = 0;       // ball size
  bool modp_certified = false;  // full rank certified by a mod-p minor
  uint64_t modulus = 0;
};

/// Dimension of span{ Ad(phi_t0(w)) : |w| <= radius } inside the 225-dim
/// operator space; 225 certifies absolute irreducibility of the adjoint
/// action. Exact arithmetic over Q(sqrt(d)) (rational t0 included).
AdjointSpanResult adjoint_span_dimension(const QuadElem& t0, int radius);

/// Normalized numerator of det(rho_v(w) - I) as a polynomial in v; its real
/// roots locate eigenvalue 1.
Poly eigenvalue_one_locus(const Word& w);

/// Span dimension of {images(w) * e : |w| <= radius} for arbitrary
/// generator images (test hook for reducible controls).
template <class F>
size_t orbit_span_dimension(const std::array<Mat4<F>, 4>& images, const std::array<F, 4>& e,
                            int radius) {
  SpanAccumulator<F> span(4);
  std::vector<std::array<F, 4>> stack{e};
  walk_ball(
      radius,
      [&](Letter l) {
        const Mat4<F>& m = images[static_cast<size_t>(l)];
        std::array<F, 4> next{};
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) next[static_cast<size_t>(i)] += m.at(i, j) * stack.back()[static_cast<size_t>(j)];
        stack.push_back(next);
      },
      [&]() { stack.pop_back(); },
      [&](const Word&) {
        span.insert(std::vector<F>(stack.back().begin(), stack.back().end()));
      });
  return span.rank();
}

/// Orbit dimensions of the longitude's v^{-3}-eigenvector under the
/// radius-3 ball, for phi_t0 and its transpose. Expected (4, 4).
std::pair<size_t, size_t> eigenvector_orbit_dim(const Rational& t0);

/// Whether the root multiset of a monic quartic Q^4 + c0 Q^3 + c1 Q^2 +
/// c2 Q + c3 (nonzero constant term) is closed under x -> 1/x.
bool charpoly_closed_under_inversion(const std::array<QuadElem, 4>& cp);

/// True iff the eigenvalue multiset {v, v, v, v^-3} (v = 2 t0) of the
/// longitude image is NOT closed under inversion.
bool inverse_eigenvalue_check(const QuadElem& t0);

enum class Tri { no, yes, indeterminate };

struct SpectralReport {
  std::string word;
  Rational t0;
  std::vector<double> moduli;        // sorted descending
  std::vector<double> error_bounds;  // interval half-widths
  Tri proximal = Tri::indeterminate;
  Tri positive_proximal = Tri::indeterminate;
};

/// Certified spectral scan: exact char poly, exact multiplicity structure,
/// Sturm-isolated real roots, disk-certified complex pairs. Flags are only
/// set when the modulus gaps certify; otherwise indeterminate.
SpectralReport proximality_report(const Word& w, const Rational& t0);

std::vector<SpectralReport> proximality_scan(const std::vector<Word>& corpus, const Rational& t0);

}  // namespace thinlat
