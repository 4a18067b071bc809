#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thinlat/catalog.hpp"
#include "thinlat/density.hpp"

#include "test_util.hpp"

using namespace thinlat;
using namespace thinlat::testutil;

namespace {
Mat4<QuadElem> phi_at(const Word& w, const Rational& t0) {
  return specialize(RepFamily::phi().evaluate(w), QuadElem(t0));
}
}  // namespace

TEST_CASE("adjoint action is a homomorphism preserving the trace pairing") {
  std::mt19937_64 rng(51);
  // Gram matrix of tr(XY) on the sl4 basis
  DMat<Rational> killing(15, 15);
  for (size_t i = 0; i < 15; ++i)
    for (size_t j = 0; j < 15; ++j)
      killing.at(i, j) = (sl4_basis()[i] * sl4_basis()[j]).trace();

  for (int k = 0; k < 8; ++k) {
    Word u = random_word(rng, 3), v = random_word(rng, 3);
    Rational t0(3, 2);
    auto gu = phi_at(u, t0), gv = phi_at(v, t0);
    DMat<QuadElem> au = adjoint_operator(gu), av = adjoint_operator(gv);
    CHECK(adjoint_operator(Mat4<QuadElem>(gu * gv)) == au * av);

    // Ad(g)^T K Ad(g) = K
    DMat<QuadElem> kq(15, 15);
    for (size_t i = 0; i < 15; ++i)
      for (size_t j = 0; j < 15; ++j) kq.at(i, j) = QuadElem(killing.at(i, j));
    DMat<QuadElem> aut(15, 15);
    for (size_t i = 0; i < 15; ++i)
      for (size_t j = 0; j < 15; ++j) aut.at(i, j) = au.at(j, i);
    CHECK(aut * kq * au == kq);
  }
}

TEST_CASE("adjoint span certifies density away from the hyperbolic point") {
  auto full = adjoint_span_dimension(QuadElem(1), 6);
  CHECK(full.dimension == 225);
  CHECK(full.modp_certified);

  auto r3 = adjoint_span_dimension(QuadElem(Rational(1, 2)), 3);
  auto r4 = adjoint_span_dimension(QuadElem(Rational(1, 2)), 4);
  CHECK(r3.dimension <= r4.dimension);  // spans nest
  CHECK(r4.dimension < 225);
}

TEST_CASE("eigenvalue-one locus") {
  Word comm = commutator(Word::parse("x^2"), Word::parse("y"));
  Poly locus = eigenvalue_one_locus(comm);
  REQUIRE_FALSE(locus.is_zero());
  Poly target({std::vector<QuadElem>{QuadElem(1), QuadElem(1), QuadElem(1)}});
  for (const auto& f : factor_for_report(locus)) {
    if (is_unit_monomial(f.factor)) continue;
    CHECK(f.factor == target);
    CHECK(f.known_irreducible);
  }

  CHECK(eigenvalue_one_locus(Word()).is_zero());
  CHECK(eigenvalue_one_locus(catalog().relator.relator).is_zero());
  // a conjugate of the relator vanishes identically too
  Word conj = Word::parse("x y") * catalog().relator.relator * Word::parse("x y").inverse();
  CHECK(eigenvalue_one_locus(conj).is_zero());
}

TEST_CASE("eigenvector orbit dimensions") {
  auto dims = eigenvector_orbit_dim(Rational(1));
  CHECK(dims.first == 4);
  CHECK(dims.second == 4);
  CHECK_THROWS_AS(eigenvector_orbit_dim(Rational(1, 2)), std::invalid_argument);

  // reducible negative control: 2+2 block representation fixes a 2-plane
  std::array<Mat4<Rational>, 4> toy{};
  auto block = [](Mat4<Rational>& m, Rational a, Rational b, Rational c, Rational d, int off) {
    m.at(off, off) = a;
    m.at(off, off + 1) = b;
    m.at(off + 1, off) = c;
    m.at(off + 1, off + 1) = d;
  };
  block(toy[0], 1, 1, 0, 1, 0);
  block(toy[0], 1, 0, 1, 1, 2);
  block(toy[2], 3, 1, 2, 1, 0);  // no common eigenvector with toy[0] in block 1
  block(toy[2], 2, 0, 0, Rational(1, 2), 2);
  toy[1] = adjugate4(toy[0]);
  toy[3] = adjugate4(toy[2]);
  std::array<Rational, 4> e{1, 0, 0, 0};
  CHECK(orbit_span_dimension(toy, e, 3) == 2);

  // orbit spans nest with the radius
  std::array<Mat4<QuadElem>, 4> img;
  for (int i = 0; i < 4; ++i)
    img[static_cast<size_t>(i)] = specialize(RepFamily::phi().image(static_cast<Letter>(i)), QuadElem(1));
  std::array<QuadElem, 4> e1{QuadElem(1), QuadElem(0), QuadElem(0), QuadElem(0)};
  size_t d1 = orbit_span_dimension(img, e1, 1);
  size_t d2 = orbit_span_dimension(img, e1, 2);
  size_t d3 = orbit_span_dimension(img, e1, 3);
  CHECK(d1 <= d2);
  CHECK(d2 <= d3);
}

TEST_CASE("inverse eigenvalue check") {
  CHECK(inverse_eigenvalue_check(QuadElem(1)));
  CHECK_FALSE(inverse_eigenvalue_check(QuadElem(Rational(1, 2))));

  // closure control: diag(a, 1/a, b, 1/b)
  Mat4<QuadElem> sym;
  sym.at(0, 0) = QuadElem(2);
  sym.at(1, 1) = QuadElem(Rational(1, 2));
  sym.at(2, 2) = QuadElem(3);
  sym.at(3, 3) = QuadElem(Rational(1, 3));
  CHECK(charpoly_closed_under_inversion(char_poly4(sym)));
  Mat4<QuadElem> asym;
  asym.at(0, 0) = QuadElem(2);
  asym.at(1, 1) = QuadElem(2);
  asym.at(2, 2) = QuadElem(2);
  asym.at(3, 3) = QuadElem(Rational(1, 8));
  CHECK_FALSE(charpoly_closed_under_inversion(char_poly4(asym)));
}

TEST_CASE("proximality reports") {
  // longitude at t = 1: moduli {2, 2, 2, 1/8}, repeated maximum
  auto rep = proximality_report(catalog().longitude.longitude, Rational(1));
  CHECK(rep.proximal == Tri::no);
  REQUIRE(rep.moduli.size() == 4);
  CHECK(rep.moduli[0] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(rep.moduli[3] == doctest::Approx(0.125).epsilon(1e-9));
  // floating moduli agree with the exact char-poly roots within the bounds
  for (size_t i = 0; i < 4; ++i) {
    double exact = i < 3 ? 2.0 : 0.125;
    CHECK(std::abs(rep.moduli[i] - exact) <= rep.error_bounds[i] + 1e-12);
  }

  CHECK(proximality_report(Word(), Rational(1)).proximal == Tri::no);

  auto repw = proximality_report(Word::parse("x y x y^2 x^3 y X Y^2"), Rational(1));
  CHECK(repw.proximal == Tri::yes);
  CHECK(repw.positive_proximal == Tri::yes);
}
