#include "thinlat/rep.hpp"

#include <stdexcept>

namespace thinlat {

namespace {

QuadElem q(long num, long den = 1) { return QuadElem(Rational(num, den)); }
// a/den + (b/den)*sqrt(3)
QuadElem r3(long a, long b, long den) {
  return QuadElem(Rational(a, den), Rational(b, den), 3);
}

LaurentPoly c(const QuadElem& v, char var) { return LaurentPoly(v) + LaurentPoly(QuadElem(), 0, var); }
LaurentPoly mono(const QuadElem& v, long e, char var) { return LaurentPoly(v, e, var); }

Mat4<LaurentPoly> rho_x() {
  char V = 'v';
  Mat4<LaurentPoly> m;
  m.at(0, 0) = c(q(3, 2), V);
  m.at(0, 1) = c(q(1, 2), V);
  m.at(0, 2) = c(q(1, 2), V) + mono(q(1, 2), -1, V);
  // Signs of the (0,3)/(1,3) entries are the unique choice making x, y
  // satisfy the knot-group relation and the family conjugate to phi at
  // v = 2t; both entries vanish at v = 1, so the hyperbolic point does not
  // distinguish them.
  m.at(0, 3) = c(r3(0, -1, 6), V) + mono(r3(0, 1, 6), -1, V);
  m.at(1, 0) = c(q(-1, 2), V);
  m.at(1, 1) = c(q(1, 2), V);
  m.at(1, 2) = c(q(-1, 2), V) + mono(q(-1, 2), -1, V);
  m.at(1, 3) = c(r3(0, 1, 6), V) + mono(r3(0, -1, 6), -1, V);
  m.at(2, 0) = c(q(1), V);
  m.at(2, 1) = c(q(1), V);
  m.at(2, 2) = c(q(1), V);
  m.at(3, 3) = c(q(1), V);
  return m;
}

Mat4<LaurentPoly> rho_y() {
  char V = 'v';
  Mat4<LaurentPoly> m;
  m.at(0, 0) = mono(q(1), 1, V) + c(q(1, 2), V);
  m.at(0, 1) = mono(q(-1), 1, V) + c(q(1, 2), V);
  m.at(0, 2) = c(q(1, 2), V);
  m.at(0, 3) = c(r3(0, 7, 6), V) + mono(r3(0, -4, 6), 1, V);
  m.at(1, 0) = c(q(1, 2), V);
  m.at(1, 1) = c(q(1, 2), V);
  m.at(1, 2) = c(q(1, 2), V);
  m.at(1, 3) = mono(r3(0, 4, 6), -1, V) + c(r3(0, -1, 6), V);
  m.at(2, 0) = mono(q(1, 2), 1, V);
  m.at(2, 1) = mono(q(-1, 2), 1, V);
  m.at(2, 2) = c(q(1), V);
  m.at(2, 3) = c(r3(0, 1, 3), V) + mono(r3(0, -1, 3), 1, V);
  m.at(3, 0) = mono(r3(0, 1, 2), 1, V);
  m.at(3, 1) = mono(r3(0, -1, 2), 1, V);
  m.at(3, 3) = c(q(2), V) + mono(q(-1), 1, V);
  return m;
}

Mat4<LaurentPoly> phi_x() {
  char T = 't';
  Mat4<LaurentPoly> m;
  m.at(0, 0) = c(q(1), T);
  m.at(0, 2) = c(q(1), T);
  m.at(0, 3) = mono(q(1), 1, T) + c(q(-1), T);
  m.at(1, 1) = c(q(1), T);
  m.at(1, 2) = c(q(1), T);
  m.at(1, 3) = mono(q(1), 1, T);
  m.at(2, 2) = c(q(1), T);
  m.at(2, 3) = mono(q(1), 1, T) + c(q(1, 2), T);
  m.at(3, 3) = c(q(1), T);
  return m;
}

Mat4<LaurentPoly> phi_y() {
  char T = 't';
  Mat4<LaurentPoly> m;
  m.at(0, 0) = c(q(1), T);
  m.at(1, 0) = c(q(2), T) + mono(q(1), -1, T);
  m.at(1, 1) = c(q(1), T);
  m.at(2, 0) = c(q(2), T);
  m.at(2, 1) = c(q(1), T);
  m.at(2, 2) = c(q(1), T);
  m.at(3, 0) = c(q(1), T);
  m.at(3, 1) = c(q(1), T);
  m.at(3, 3) = c(q(1), T);
  return m;
}

}  // namespace

RepFamily::RepFamily(std::string name, char param, Mat4<LaurentPoly> gx, Mat4<LaurentPoly> gy)
    : name_(std::move(name)), param_(param) {
  LaurentPoly one(QuadElem(1));
  if (det4(gx) != one || det4(gy) != one)
    throw std::logic_error("RepFamily " + name_ + ": generator determinant is not 1");
  img_[0] = gx;
  img_[1] = adjugate4(gx);
  img_[2] = gy;
  img_[3] = adjugate4(gy);
}

const RepFamily& RepFamily::rho() {
  static const RepFamily fam("rho", 'v', rho_x(), rho_y());
  return fam;
}

const RepFamily& RepFamily::phi() {
  static const RepFamily fam("phi", 't', phi_x(), phi_y());
  return fam;
}

const RepFamily& RepFamily::by_name(const std::string& name) {
  if (name == "rho") return rho();
  if (name == "phi") return phi();
  throw std::invalid_argument("unknown representation family: " + name);
}

Mat4<LaurentPoly> RepFamily::evaluate(const Word& w) const {
  Mat4<LaurentPoly> acc = Mat4<LaurentPoly>::identity();
  for (Letter l : w.letters()) acc = acc * image(l);
  return acc;
}

Mat4<LaurentPoly> laurent_star(const Mat4<LaurentPoly>& m) {
  return m.transposed().map([](const LaurentPoly& p) { return p.bar(); });
}

std::array<LaurentPoly, 4> longitude_char_poly_target() {
  char V = 'v';
  LaurentPoly c3 = LaurentPoly(QuadElem(-3), 1, V) + LaurentPoly(QuadElem(-1), -3, V);
  LaurentPoly c2 = LaurentPoly(QuadElem(3), 2, V) + LaurentPoly(QuadElem(3), -2, V);
  LaurentPoly c1 = LaurentPoly(QuadElem(-1), 3, V) + LaurentPoly(QuadElem(-3), -1, V);
  LaurentPoly c0 = LaurentPoly(QuadElem(1));
  return {c3, c2, c1, c0};
}

Mat4<LaurentPoly> substitute_v_eq_2t(const Mat4<LaurentPoly>& m) {
  return m.map([](const LaurentPoly& p) { return p.substitute_scaled(QuadElem(2), 't'); });
}

Mat4<QuadElem> specialize(const Mat4<LaurentPoly>& m, const QuadElem& x) {
  return m.map([&](const LaurentPoly& p) { return p.eval(x); });
}

FpRep::FpRep(const RepFamily& fam, Fp x0) {
  for (int i = 0; i < 4; ++i)
    img_[static_cast<size_t>(i)] = eval_fp(fam.image(static_cast<Letter>(i)), x0);
}

Mat4<Fp> FpRep::evaluate(const Word& w) const {
  Mat4<Fp> acc = Mat4<Fp>::identity();
  for (Letter l : w.letters()) acc = acc * image(l);
  return acc;
}

}  // namespace thinlat
