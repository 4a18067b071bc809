#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thinlat/catalog.hpp"
#include "thinlat/form.hpp"
#include "thinlat/numfield.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <optional>

using namespace thinlat;
using namespace thinlat::testutil;

namespace {
Mat4<QuadElem> tau_transpose(const Mat4<QuadElem>& m) {
  return m.transposed().map([](const QuadElem& x) { return x.conj(); });
}

// Independent signature oracle: Jacobi's rule from leading principal minors
// (requires them nonzero; returns nullopt otherwise). The caller may permute
// the basis first; permutation congruence preserves the signature.
std::optional<std::pair<int, int>> jacobi_signature_at(const Mat4<QuadElem>& q,
                                                       const std::array<int, 4>& perm) {
  std::array<QuadElem, 4> minors;
  for (int k = 1; k <= 4; ++k) {
    DMat<QuadElem> sub(static_cast<size_t>(k), static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        sub.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
            q.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    // exact determinant by elimination over the field
    QuadElem det(1);
    size_t n = static_cast<size_t>(k);
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      while (piv < n && sub.at(piv, col).is_zero()) ++piv;
      if (piv == n) return std::nullopt;
      if (piv != col) {
        for (size_t j = 0; j < n; ++j) std::swap(sub.at(piv, j), sub.at(col, j));
        det = -det;
      }
      det *= sub.at(col, col);
      QuadElem inv = sub.at(col, col).inverse();
      for (size_t i = col + 1; i < n; ++i) {
        QuadElem f = sub.at(i, col) * inv;
        for (size_t j = col; j < n; ++j) sub.at(i, j) -= f * sub.at(col, j);
      }
    }
    minors[static_cast<size_t>(k - 1)] = det;
  }
  int pos = 0, neg = 0, prev = 1;
  for (const auto& m : minors) {
    if (!m.is_rational()) return std::nullopt;  // tau-fixedness is part of the oracle
    int s = m.sign();
    if (s == 0) return std::nullopt;
    if (s == prev)
      ++pos;
    else
      ++neg;
    prev = s;
  }
  return std::make_pair(pos, neg);
}

std::optional<std::pair<int, int>> jacobi_signature(const Mat4<QuadElem>& q) {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    if (auto sig = jacobi_signature_at(q, perm)) return sig;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}
}  // namespace

TEST_CASE("invariant form of both families") {
  for (auto* fam : {&RepFamily::rho(), &RepFamily::phi()}) {
    InvariantForm f = solve_invariant_form(*fam);
    CHECK(f.solution_dim == 1);
    CHECK_FALSE(f.det.is_zero());
    CHECK(f.star_symmetric);
    CHECK(laurent_star(f.q) == f.q);
    auto sig = symmetric_signature(specialize(f.q, QuadElem(1)));
    CHECK(sig.first == 3);
    CHECK(sig.second == 1);
    CHECK(verify_invariance(f, *fam, 3).empty());
  }
}

TEST_CASE("invariance holds for the relator and identity trivially") {
  InvariantForm f = solve_invariant_form(RepFamily::rho());
  for (const Word& w : {Word(), catalog().relator.relator}) {
    Mat4<LaurentPoly> a = RepFamily::rho().evaluate(w);
    CHECK(laurent_star(a) * f.q * a == f.q);
  }
}

TEST_CASE("specialization at a positive unit is Hermitian") {
  InvariantForm f = solve_invariant_form(RepFamily::phi());
  UnitRecord unit = fundamental_unit(2);
  // brute expansion oracle for u tau(u) = 1
  CHECK(unit.u == QuadElem(Rational(3), Rational(2), 2));
  CHECK((QuadElem(Rational(3), Rational(2), 2) * QuadElem(Rational(3), Rational(-2), 2)).is_one());

  Mat4<QuadElem> qu = hermitian_specialize(f, 2, unit.u);
  CHECK(is_tau_hermitian(qu));

  // u = 1 reduces to the symmetric form at the hyperbolic point
  Mat4<QuadElem> q1 = hermitian_specialize(f, 2, QuadElem(1));
  CHECK(q1 == specialize(f.q, QuadElem(1)));
  CHECK(q1.transposed() == q1);

  CHECK_THROWS_AS(hermitian_specialize(f, 2, QuadElem(Rational(1), Rational(1), 2)),
                  std::invalid_argument);  // 1 + sqrt(2) has norm -1, not a positive unit
}

TEST_CASE("diagonalization") {
  // diagonal input: basis stays the identity
  Mat4<QuadElem> d;
  d.at(0, 0) = QuadElem(2);
  d.at(1, 1) = QuadElem(-3);
  d.at(2, 2) = QuadElem(Rational(1, 2));
  d.at(3, 3) = QuadElem(5);
  DiagonalizedForm r = diagonalize(d, 2);
  CHECK(r.basis == Mat4<QuadElem>::identity());
  CHECK(r.diag[0] == QuadElem(2));
  CHECK(r.integer_diag[2] == 2);  // 1/2 -> kernel of 1*2

  InvariantForm f = solve_invariant_form(RepFamily::phi());
  for (long dd : {2L, 5L}) {
    UnitRecord unit = fundamental_unit(dd);
    Mat4<QuadElem> qu = hermitian_specialize(f, dd, unit.u);
    DiagonalizedForm diag = diagonalize(qu, dd);

    // exact congruence
    Mat4<QuadElem> conj = tau_transpose(diag.basis) * qu * diag.basis;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j)
          CHECK(conj.at(i, j) == diag.diag[static_cast<size_t>(i)]);
        else
          CHECK(conj.at(i, j).is_zero());
      }
    CHECK_FALSE(det4(diag.basis).is_zero());
    for (size_t i = 0; i < 4; ++i) {
      CHECK(diag.diag[i].is_rational());
      CHECK(sgn(diag.integer_diag[i]) != 0);
      // J = Delta * (nonzero rational square)
      Rational ratio = Rational(diag.integer_diag[i]) / diag.diag[i].a();
      CHECK(sgn(ratio) > 0);
      CHECK(is_perfect_square(ratio.get_num()));
      CHECK(is_perfect_square(ratio.get_den()));
    }

    // sign multiset matches the Jacobi signature oracle
    auto sig = jacobi_signature(qu);
    REQUIRE(sig.has_value());
    int pos = 0, neg = 0;
    for (const auto& j : diag.integer_diag) (sgn(j) > 0 ? pos : neg) += 1;
    CHECK(pos == sig->first);
    CHECK(neg == sig->second);

    // determinant class: prod Delta = N(det M) * det Q(u)
    QuadElem prod(1);
    for (const auto& x : diag.diag) prod *= x;
    QuadElem dm = det4(diag.basis);
    CHECK(prod == dm * dm.conj() * det4(qu));
  }
}

TEST_CASE("degenerate form is rejected") {
  Mat4<QuadElem> z;
  CHECK_THROWS_AS(diagonalize(z, 2), std::domain_error);
}
