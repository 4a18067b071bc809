#pragma once

#include "thinlat/poly.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace thinlat {

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_one(double x) { return x == 1.0; }

/// 4x4 matrix over an exact ring T. T needs +, -, *, default ctor = 0 and
/// construction from long for 0/1.
template <class T>
struct Mat4 {
  std::array<T, 16> e{};

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = T(1);
    return m;
  }

  T& at(int i, int j) { return e[static_cast<size_t>(4 * i + j)]; }
  const T& at(int i, int j) const { return e[static_cast<size_t>(4 * i + j)]; }

  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const T& aik = a.at(i, k);
        if (is_zero_value(aik)) continue;
        for (int j = 0; j < 4; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  friend Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }

  friend Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }

  friend bool operator==(const Mat4& a, const Mat4& b) { return a.e == b.e; }
  friend bool operator!=(const Mat4& a, const Mat4& b) { return !(a == b); }

  Mat4 transposed() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  Mat4 scaled(const T& s) const {
    Mat4 r;
    for (size_t i = 0; i < 16; ++i) r.e[i] = e[i] * s;
    return r;
  }

  T trace() const { return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 3); }

  bool is_identity() const {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j ? !is_one_value(at(i, j)) : !is_zero_value(at(i, j))) return false;
      }
    return true;
  }

  bool is_zero() const {
    for (const auto& x : e)
      if (!is_zero_value(x)) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const -> Mat4<decltype(f(e[0]))> {
    Mat4<decltype(f(e[0]))> r;
    for (size_t i = 0; i < 16; ++i) r.e[i] = f(e[i]);
    return r;
  }

 private:
  static bool is_zero_value(const T& x) {
    using thinlat::is_zero;
    return is_zero(x);
  }
  static bool is_one_value(const T& x) {
    using thinlat::is_one;
    return is_one(x);
  }
};

namespace detail {
template <class T>
T det3(const std::array<T, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}
}  // namespace detail

/// Exact determinant by cofactor expansion (division-free).
template <class T>
T det4(const Mat4<T>& m) {
  T acc{};
  for (int j = 0; j < 4; ++j) {
    std::array<T, 9> minor;
    int idx = 0;
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        if (c == j) continue;
        minor[static_cast<size_t>(idx++)] = m.at(r, c);
      }
    T term = m.at(0, j) * detail::det3(minor);
    if (j % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

/// Adjugate (transpose of cofactors): M * adj(M) = det(M) * I. For det = 1
/// matrices this is the exact inverse, division-free.
template <class T>
Mat4<T> adjugate4(const Mat4<T>& m) {
  Mat4<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::array<T, 9> minor;
      int idx = 0;
      for (int rr = 0; rr < 4; ++rr) {
        if (rr == i) continue;
        for (int cc = 0; cc < 4; ++cc) {
          if (cc == j) continue;
          minor[static_cast<size_t>(idx++)] = m.at(rr, cc);
        }
      }
      T cof = detail::det3(minor);
      if ((i + j) % 2 == 1) cof = T{} - cof;
      r.at(j, i) = cof;
    }
  return r;
}

/// Dense dynamic matrix over an exact field F.
template <class F>
struct DMat {
  size_t rows = 0, cols = 0;
  std::vector<F> a;

  DMat() = default;
  DMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  static DMat identity(size_t n) {
    DMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }

  F& at(size_t i, size_t j) { return a[i * cols + j]; }
  const F& at(size_t i, size_t j) const { return a[i * cols + j]; }

  friend bool operator==(const DMat& l, const DMat& r) {
    return l.rows == r.rows && l.cols == r.cols && l.a == r.a;
  }

  friend DMat operator*(const DMat& l, const DMat& r) {
    if (l.cols != r.rows) throw std::invalid_argument("DMat: dimension mismatch");
    DMat out(l.rows, r.cols);
    for (size_t i = 0; i < l.rows; ++i)
      for (size_t k = 0; k < l.cols; ++k) {
        const F& lik = l.at(i, k);
        using thinlat::is_zero;
        if (is_zero(lik)) continue;
        for (size_t j = 0; j < r.cols; ++j) out.at(i, j) += lik * r.at(k, j);
      }
    return out;
  }
};

/// In-place row reduction to (unreduced) echelon form. Returns the rank.
template <class F>
size_t row_echelon(DMat<F>& m) {
  using thinlat::is_zero;
  size_t rank = 0;
  for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    size_t piv = rank;
    while (piv < m.rows && is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    F inv = F(1) / m.at(rank, col);
    for (size_t j = col; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) * inv;
    for (size_t i = rank + 1; i < m.rows; ++i) {
      if (is_zero(m.at(i, col))) continue;
      F f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class F>
size_t matrix_rank(DMat<F> m) {
  return row_echelon(m);
}

/// Basis of the right nullspace {x : M x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(DMat<F> m) {
  using thinlat::is_zero;
  size_t n = m.cols;
  // Reduced echelon with recorded pivot columns.
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m.rows; ++col) {
    size_t piv = rank;
    while (piv < m.rows && is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    F inv = F(1) / m.at(rank, col);
    for (size_t j = col; j < n; ++j) m.at(rank, j) = m.at(rank, j) * inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == rank || is_zero(m.at(i, col))) continue;
      F f = m.at(i, col);
      for (size_t j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<F> x(n);
    x[free_col] = F(1);
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = F(0) - m.at(r, free_col);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Field inverse via Gauss-Jordan; throws on singular input.
template <class F>
DMat<F> matrix_inverse(DMat<F> m) {
  using thinlat::is_zero;
  if (m.rows != m.cols) throw std::invalid_argument("matrix_inverse: not square");
  size_t n = m.rows;
  DMat<F> inv = DMat<F>::identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(m.at(piv, col))) ++piv;
    if (piv == n) throw std::domain_error("matrix_inverse: singular matrix");
    if (piv != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    F pinv = F(1) / m.at(col, col);
    for (size_t j = 0; j < n; ++j) {
      m.at(col, j) = m.at(col, j) * pinv;
      inv.at(col, j) = inv.at(col, j) * pinv;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(m.at(i, col))) continue;
      F f = m.at(i, col);
      for (size_t j = 0; j < n; ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

/// Fraction-free (Bareiss) solve over a polynomial ring:
/// returns (X, d) with  M * X = d * I  and d = det(M), all entries exact
/// polynomials. Controls intermediate swell: every entry stays a minor of M.
struct BareissResult {
  DMat<Poly> scaled_inverse;
  Poly det;
};

BareissResult bareiss_inverse(const DMat<Poly>& m_in);

/// Incremental row-span tracker over a field F: feeds vectors one by one,
/// keeps a reduced echelon basis, reports the rank. Single-writer.
template <class F>
class SpanAccumulator {
 public:
  explicit SpanAccumulator(size_t dim) : dim_(dim) {}

  size_t rank() const { return rows_.size(); }

  /// Returns true when the vector enlarged the span.
  bool insert(std::vector<F> v) {
    using thinlat::is_zero;
    if (v.size() != dim_) throw std::invalid_argument("SpanAccumulator: wrong dimension");
    for (const auto& [piv, row] : rows_) {
      if (is_zero(v[piv])) continue;
      F f = v[piv];
      for (size_t j = piv; j < dim_; ++j) v[j] = v[j] - f * row[j];
    }
    size_t piv = 0;
    while (piv < dim_ && is_zero(v[piv])) ++piv;
    if (piv == dim_) return false;
    F inv = F(1) / v[piv];
    for (size_t j = piv; j < dim_; ++j) v[j] = v[j] * inv;
    rows_.emplace_back(piv, std::move(v));
    // Keep rows sorted by pivot so reduction stays one pass.
    for (size_t i = rows_.size(); i-- > 1 && rows_[i].first < rows_[i - 1].first;)
      std::swap(rows_[i], rows_[i - 1]);
    return true;
  }

 private:
  size_t dim_;
  std::vector<std::pair<size_t, std::vector<F>>> rows_;
};

}  // namespace thinlat
