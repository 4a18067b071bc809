#pragma once

#include "thinlat/laurent.hpp"
#include "thinlat/matrix.hpp"
#include "thinlat/modp.hpp"
#include "thinlat/ratfunc.hpp"
#include "thinlat/word.hpp"

#include <array>
#include <string>

namespace thinlat {

/// One of the two parametric SL(4) families of the figure-eight knot group:
/// rho (parameter v, coefficients in Q(sqrt(3))) or phi (parameter t,
/// rational coefficients). Generator images and their exact adjugate
/// inverses are precomputed; both have determinant 1 identically.
class RepFamily {
 public:
  static const RepFamily& rho();
  static const RepFamily& phi();
  static const RepFamily& by_name(const std::string& name);

  const std::string& name() const { return name_; }
  char param() const { return param_; }

  const Mat4<LaurentPoly>& image(Letter l) const {
    return img_[static_cast<size_t>(l)];
  }

  Mat4<LaurentPoly> evaluate(const Word& w) const;

 private:
  RepFamily(std::string name, char param, Mat4<LaurentPoly> gx, Mat4<LaurentPoly> gy);
  std::string name_;
  char param_;
  std::array<Mat4<LaurentPoly>, 4> img_;  // x, x^-1, y, y^-1
};

/// Star involution on a Laurent matrix: transpose composed with v -> 1/v.
Mat4<LaurentPoly> laurent_star(const Mat4<LaurentPoly>& m);

inline LaurentPoly div_by_int(const LaurentPoly& p, long k) {
  return p * QuadElem(Rational(1, k));
}
inline RatFunc div_by_int(const RatFunc& p, long k) { return p * RatFunc(QuadElem(Rational(1, k))); }
inline QuadElem div_by_int(const QuadElem& p, long k) { return p * QuadElem(Rational(1, k)); }
inline Rational div_by_int(const Rational& p, long k) { return p / k; }
inline Fp div_by_int(const Fp& p, long k) { return p / Fp(k); }

/// Monic characteristic polynomial det(Q I - M) of a 4x4 matrix over a
/// commutative Q-algebra, as coefficients of Q^3, Q^2, Q^1, Q^0:
/// p(Q) = Q^4 + c[0] Q^3 + c[1] Q^2 + c[2] Q + c[3].
/// Computed from power-sum traces (Newton identities); exact.
template <class R>
std::array<R, 4> char_poly4(const Mat4<R>& m) {
  R s1 = m.trace();
  Mat4<R> m2 = m * m;
  R s2 = m2.trace();
  Mat4<R> m3 = m2 * m;
  R s3 = m3.trace();
  R s4 = (m3 * m).trace();
  // e1 = s1, k*ek = e_{k-1} s1 - e_{k-2} s2 + ... + (-1)^(k-1) s_k
  R e1 = s1;
  R e2 = div_by_int(e1 * s1 - s2, 2);
  R e3 = div_by_int(e2 * s1 - e1 * s2 + s3, 3);
  R e4 = div_by_int(e3 * s1 - e2 * s2 + e1 * s3 - s4, 4);
  R zero{};
  return {zero - e1, e2, zero - e3, e4};
}

/// Characteristic polynomial of the longitude image:
/// (Q - v)^3 (Q - v^-3) = Q^4 - (3v + v^-3) Q^3 + (3v^2 + 3v^-2) Q^2
///                        - (v^3 + 3v^-1) Q + 1.
std::array<LaurentPoly, 4> longitude_char_poly_target();

/// Substitute v = 2t in a Laurent matrix over v (conjugacy parameter match).
Mat4<LaurentPoly> substitute_v_eq_2t(const Mat4<LaurentPoly>& m);

/// Exact specialization of a Laurent matrix at an invertible field element.
Mat4<QuadElem> specialize(const Mat4<LaurentPoly>& m, const QuadElem& x);

/// Mod-p shadow of a family at a fixed parameter residue, for screening.
class FpRep {
 public:
  FpRep(const RepFamily& fam, Fp x0);
  const Mat4<Fp>& image(Letter l) const { return img_[static_cast<size_t>(l)]; }
  Mat4<Fp> evaluate(const Word& w) const;

 private:
  std::array<Mat4<Fp>, 4> img_;
};

}  // namespace thinlat
