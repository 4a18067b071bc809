#include "thinlat/matrix.hpp"

namespace thinlat {

BareissResult bareiss_inverse(const DMat<Poly>& m_in) {
  if (m_in.rows != m_in.cols) throw std::invalid_argument("bareiss_inverse: not square");
  const size_t n = m_in.rows;
  // Augmented [M | I].
  DMat<Poly> a(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a.at(i, j) = m_in.at(i, j);
    a.at(i, n + i) = Poly(QuadElem(1));
  }
  int sign = 1;
  Poly prev(QuadElem(1));
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a.at(piv, k).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("bareiss_inverse: singular matrix");
    if (piv != k) {
      for (size_t j = 0; j < 2 * n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      sign = -sign;
    }
    const Poly pivot = a.at(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      const Poly mult = a.at(i, k);
      for (size_t j = k + 1; j < 2 * n; ++j)
        a.at(i, j) = poly_exact_div(pivot * a.at(i, j) - mult * a.at(k, j), prev);
      a.at(i, k) = Poly();
    }
    prev = pivot;
  }
  Poly det = a.at(n - 1, n - 1);
  if (sign < 0) det = -det;

  // Back substitution: solve U X = det_signed * W with all-exact divisions.
  // (Row swaps were applied to both halves, so U X = a(n-1,n-1) * W up to
  // the shared sign, which cancels.)
  const Poly dd = a.at(n - 1, n - 1);
  DMat<Poly> x(n, n);
  for (size_t col = 0; col < n; ++col) {
    for (size_t i = n; i-- > 0;) {
      Poly rhs = dd * a.at(i, n + col);
      for (size_t j = i + 1; j < n; ++j) rhs -= a.at(i, j) * x.at(j, col);
      x.at(i, col) = poly_exact_div(rhs, a.at(i, i));
    }
  }
  // x solves M x = dd * I; rescale convention so that M x = det * I.
  if (sign < 0)
    for (auto& p : x.a) p = -p;
  return {std::move(x), std::move(det)};
}

}  // namespace thinlat
