#include "thinlat/density.hpp"

#include "thinlat/catalog.hpp"
#include "thinlat/rootcert.hpp"

#include <algorithm>
#include <optional>

namespace thinlat {

const std::array<Mat4<Rational>, 15>& sl4_basis() {
  static const std::array<Mat4<Rational>, 15> basis = [] {
    std::array<Mat4<Rational>, 15> b{};
    size_t idx = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        b[idx].at(i, j) = 1;
        ++idx;
      }
    for (int k = 0; k < 3; ++k) {
      b[static_cast<size_t>(12 + k)].at(k, k) = 1;
      b[static_cast<size_t>(12 + k)].at(k + 1, k + 1) = -1;
    }
    return b;
  }();
  return basis;
}

namespace {

// Row echelon over Z/p with runtime modulus, for the fast span certificate.
class ZpSpan {
 public:
  explicit ZpSpan(uint64_t p) : p_(p) {}
  size_t rank() const { return rows_.size(); }

  bool insert(std::vector<uint64_t> v) {
    for (auto& [piv, row] : rows_) {
      if (v[piv] == 0) continue;
      uint64_t f = p_ - v[piv];
      for (size_t j = piv; j < v.size(); ++j) v[j] = (v[j] + f * row[j]) % p_;
    }
    size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    uint64_t inv = powmod(v[piv], p_ - 2);
    for (size_t j = piv; j < v.size(); ++j) v[j] = v[j] * inv % p_;
    rows_.emplace_back(piv, std::move(v));
    for (size_t i = rows_.size(); i-- > 1 && rows_[i].first < rows_[i - 1].first;)
      std::swap(rows_[i], rows_[i - 1]);
    return true;
  }

  uint64_t powmod(uint64_t b, uint64_t e) const {
    uint64_t a = 1;
    b %= p_;
    while (e) {
      if (e & 1) a = a * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return a;
  }

 private:
  uint64_t p_;
  std::vector<std::pair<size_t, std::vector<uint64_t>>> rows_;
};

struct ZpProjection {
  uint64_t p;
  uint64_t sqrt_m;  // root of the field radicand, 0 when rational

  // nullopt when a denominator hits the modulus.
  std::optional<uint64_t> operator()(const QuadElem& x, const ZpSpan& zp) const {
    auto rat = [&](const Rational& r) -> std::optional<uint64_t> {
      uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
      if (den == 0) return std::nullopt;
      uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
      return num * zp.powmod(den, p - 2) % p;
    };
    auto a = rat(x.a());
    if (!a) return std::nullopt;
    if (x.is_rational()) return a;
    auto b = rat(x.b());
    if (!b) return std::nullopt;
    return (*a + *b * sqrt_m) % p;
  }
};

constexpr uint64_t kSpanPrimes[] = {1000000007ull, 1000000009ull, 998244353ull, 2147483647ull};

// Tonelli-Shanks; nullopt when m is not a residue.
std::optional<uint64_t> sqrt_mod(uint64_t m, uint64_t p) {
  ZpSpan h(p);
  m %= p;
  if (m == 0) return 0;
  if (h.powmod(m, (p - 1) / 2) != 1) return std::nullopt;
  if (p % 4 == 3) return h.powmod(m, (p + 1) / 4);
  uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  uint64_t z = 2;
  while (h.powmod(z, (p - 1) / 2) == 1) ++z;
  uint64_t c = h.powmod(z, q);
  uint64_t x = h.powmod(m, (q + 1) / 2);
  uint64_t t = h.powmod(m, q);
  uint64_t mexp = s;
  while (t != 1) {
    uint64_t i = 0, tt = t;
    while (tt != 1 && i < mexp) {
      tt = tt * tt % p;
      ++i;
    }
    if (i == mexp) return std::nullopt;
    uint64_t b = c;
    for (uint64_t j = 0; j + i + 1 < mexp; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    mexp = i;
  }
  return x;
}

std::optional<ZpProjection> make_projection(uint64_t p, long m) {
  if (m == 0) return ZpProjection{p, 0};
  auto root = sqrt_mod(static_cast<uint64_t>(m), p);
  if (!root) return std::nullopt;
  return ZpProjection{p, *root};
}

}  // namespace

AdjointSpanResult adjoint_span_dimension(const QuadElem& t0, int radius) {
  if (t0.is_zero()) throw std::invalid_argument("adjoint_span_dimension: t0 must be nonzero");
  std::array<Mat4<QuadElem>, 4> img;
  for (int i = 0; i < 4; ++i)
    img[static_cast<size_t>(i)] = specialize(RepFamily::phi().image(static_cast<Letter>(i)), t0);

  AdjointSpanResult res;

  // Fast certificate: rank over Z/p lower-bounds the exact rank (a nonzero
  // minor mod p lifts), so a mod-p rank of 225 is an exact answer.
  for (uint64_t p : kSpanPrimes) {
    auto proj = make_projection(p, t0.m());
    if (!proj) continue;
    ZpSpan span(p);
    bool projectable = true;
    size_t total = 0, used = 0;
    std::vector<Mat4<QuadElem>> stack{Mat4<QuadElem>::identity()};
    walk_ball(
        radius, [&](Letter l) { stack.push_back(stack.back() * img[static_cast<size_t>(l)]); },
        [&]() { stack.pop_back(); },
        [&](const Word&) {
          ++total;
          if (!projectable || span.rank() == 225) return;
          ++used;
          DMat<QuadElem> ad = adjoint_operator(stack.back());
          std::vector<uint64_t> v(225);
          for (size_t i = 0; i < 225; ++i) {
            auto val = (*proj)(ad.a[i], span);
            if (!val) {
              projectable = false;
              return;
            }
            v[i] = *val;
          }
          span.insert(std::move(v));
        });
    if (!projectable) continue;
    res.words_total = total;
    res.words_used = used;
    if (span.rank() == 225) {
      res.dimension = 225;
      res.modp_certified = true;
      res.modulus = p;
      return res;
    }
    break;  // below 225: fall through to the exact pass for the true rank
  }

  SpanAccumulator<QuadElem> span(225);
  res.words_total = res.words_used = 0;
  std::vector<Mat4<QuadElem>> stack{Mat4<QuadElem>::identity()};
  walk_ball(
      radius, [&](Letter l) { stack.push_back(stack.back() * img[static_cast<size_t>(l)]); },
      [&]() { stack.pop_back(); },
      [&](const Word&) {
        ++res.words_total;
        if (span.rank() == 225) return;
        ++res.words_used;
        DMat<QuadElem> ad = adjoint_operator(stack.back());
        span.insert(std::move(ad.a));
      });
  res.dimension = span.rank();
  res.modp_certified = false;
  return res;
}

Poly eigenvalue_one_locus(const Word& w) {
  Mat4<LaurentPoly> m = RepFamily::rho().evaluate(w);
  for (int i = 0; i < 4; ++i) m.at(i, i) -= LaurentPoly(QuadElem(1));
  LaurentPoly det = det4(m);
  if (det.is_zero()) return Poly();
  Poly num = det.numerator_poly();
  return num.primitive().monic();
}

std::pair<size_t, size_t> eigenvector_orbit_dim(const Rational& t0) {
  if (t0 == Rational(1, 2))
    throw std::invalid_argument("eigenvector_orbit_dim: t0 = 1/2 is the hyperbolic point");
  QuadElem t(t0);
  std::array<Mat4<QuadElem>, 4> img;
  for (int i = 0; i < 4; ++i)
    img[static_cast<size_t>(i)] = specialize(RepFamily::phi().image(static_cast<Letter>(i)), t);
  Mat4<QuadElem> lam = specialize(RepFamily::phi().evaluate(catalog().longitude.longitude), t);

  QuadElem v = QuadElem(2) * t;
  QuadElem ev = v.pow(-3);

  auto eigvec = [&](const Mat4<QuadElem>& m) {
    DMat<QuadElem> shifted(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        shifted.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
            m.at(i, j) - (i == j ? ev : QuadElem());
    auto ns = nullspace(shifted);
    if (ns.size() != 1)
      throw std::domain_error("eigenvector_orbit_dim: eigenspace dimension " +
                              std::to_string(ns.size()) + ", expected 1");
    std::array<QuadElem, 4> e;
    for (int i = 0; i < 4; ++i) e[static_cast<size_t>(i)] = ns[0][static_cast<size_t>(i)];
    return e;
  };

  size_t dim = orbit_span_dimension(img, eigvec(lam), 3);
  std::array<Mat4<QuadElem>, 4> img_t;
  for (int i = 0; i < 4; ++i) img_t[static_cast<size_t>(i)] = img[static_cast<size_t>(i)].transposed();
  size_t dim_t = orbit_span_dimension(img_t, eigvec(lam.transposed()), 3);
  return {dim, dim_t};
}

bool charpoly_closed_under_inversion(const std::array<QuadElem, 4>& cp) {
  const QuadElem& c3 = cp[3];
  if (c3.is_zero()) throw std::domain_error("charpoly_closed_under_inversion: zero constant term");
  // Reciprocal polynomial (roots inverted): Q^4 + (c2/c3) Q^3 + (c1/c3) Q^2
  // + (c0/c3) Q + 1/c3. Closure is literal equality with the original.
  return cp[0] == cp[2] / c3 && cp[1] == cp[1] / c3 && cp[2] == cp[0] / c3 &&
         QuadElem(1) / c3 == c3;
}

bool inverse_eigenvalue_check(const QuadElem& t0) {
  if (t0.is_zero()) throw std::invalid_argument("inverse_eigenvalue_check: t0 must be nonzero");
  Mat4<QuadElem> lam = specialize(RepFamily::phi().evaluate(catalog().longitude.longitude), t0);
  return !charpoly_closed_under_inversion(char_poly4(lam));
}

namespace {

// One modulus class: a real root, or a conjugate pair (two eigenvalues of
// exactly equal modulus), or an exact +/- real pair.
struct ModulusClass {
  RatInterval modulus;
  int eigen_count;  // eigenvalues in the class, multiplicity included
  bool simple_real; // single real eigenvalue of multiplicity 1
  int real_sign;
  bool exact;
};

bool strictly_above(const RatInterval& a, const RatInterval& b) { return a.lo > b.hi; }

}  // namespace

SpectralReport proximality_report(const Word& w, const Rational& t0) {
  SpectralReport rep;
  rep.word = w.str();
  rep.t0 = t0;
  Mat4<QuadElem> m = specialize(RepFamily::phi().evaluate(w), QuadElem(t0));
  auto cp = char_poly4(m);
  Poly p({std::vector<QuadElem>{cp[3], cp[2], cp[1], cp[0], QuadElem(1)}});

  std::vector<ModulusClass> classes;
  bool certified = true;
  for (auto& [factor, mult] : squarefree_decomposition(p)) {
    Poly f = factor;
    for (auto& [root, rmult] : rational_roots(f)) {
      classes.push_back({{abs(root), abs(root)}, mult * rmult, mult * rmult == 1, sgn(root), true});
      Poly lin({std::vector<QuadElem>{QuadElem(-root), QuadElem(1)}});
      for (int i = 0; i < rmult; ++i) f = poly_exact_div(f, lin);
    }
    if (f.degree() == 0) continue;
    // Exact +/- pairs inside this factor: roots shared with f(-Q).
    Poly f_neg = f.scale_variable(QuadElem(-1));
    Poly pm_gcd = poly_gcd(f, f_neg);
    auto pm_chain = pm_gcd.degree() > 0 ? sturm_chain(pm_gcd) : std::vector<Poly>{};

    auto regions = certify_roots(f, 48);
    if (!regions) {
      certified = false;
      break;
    }
    std::vector<bool> used(regions->size(), false);
    for (size_t i = 0; i < regions->size(); ++i) {
      if (used[i]) continue;
      const RootRegion& r = (*regions)[i];
      if (r.certified_real) {
        bool pm_paired = false;
        if (pm_gcd.degree() > 0 && r.real_interval)
          pm_paired = sturm_count(pm_chain, r.real_interval->lo, r.real_interval->hi) > 0;
        int sign = 0;
        if (r.real_interval) {
          if (sgn(r.real_interval->lo) > 0) sign = 1;
          else if (sgn(r.real_interval->hi) < 0) sign = -1;
        }
        if (pm_paired) {
          // Merge with the mirrored root: equal moduli by construction.
          for (size_t j = i + 1; j < regions->size(); ++j) {
            const RootRegion& s = (*regions)[j];
            if (used[j] || !s.certified_real || !s.real_interval || !r.real_interval) continue;
            if (s.real_interval->lo == -r.real_interval->hi && s.real_interval->hi == -r.real_interval->lo) {
              used[j] = true;
              break;
            }
          }
          classes.push_back({r.modulus, 2 * mult, false, 0, false});
        } else {
          classes.push_back({r.modulus, mult, mult == 1, sign, false});
        }
        used[i] = true;
      } else {
        // Conjugate partner: mirrored center.
        size_t partner = i;
        double best = 1e300;
        for (size_t j = i + 1; j < regions->size(); ++j) {
          if (used[j] || (*regions)[j].certified_real) continue;
          double dr = (*regions)[j].approx_re - r.approx_re;
          double di = (*regions)[j].approx_im + r.approx_im;
          double dd = dr * dr + di * di;
          if (dd < best) {
            best = dd;
            partner = j;
          }
        }
        used[i] = true;
        if (partner != i) used[partner] = true;
        classes.push_back({r.modulus, 2 * mult, false, 0, false});
      }
    }
  }

  std::sort(classes.begin(), classes.end(), [](const ModulusClass& a, const ModulusClass& b) {
    return a.modulus.hi > b.modulus.hi;
  });
  for (const auto& c : classes) {
    double mid = Rational((c.modulus.lo + c.modulus.hi) / 2).get_d();
    double err = Rational((c.modulus.hi - c.modulus.lo) / 2).get_d();
    for (int i = 0; i < c.eigen_count; ++i) {
      rep.moduli.push_back(mid);
      rep.error_bounds.push_back(err);
    }
  }

  if (!certified || classes.empty()) return rep;

  const ModulusClass& top = classes.front();
  bool separated = true;
  for (size_t i = 1; i < classes.size(); ++i)
    if (!strictly_above(top.modulus, classes[i].modulus)) separated = false;

  if (separated) {
    if (top.simple_real) {
      rep.proximal = Tri::yes;
      rep.positive_proximal =
          top.real_sign > 0 ? Tri::yes : (top.real_sign < 0 ? Tri::no : Tri::indeterminate);
    } else {
      rep.proximal = Tri::no;
      rep.positive_proximal = Tri::no;
    }
    return rep;
  }
  if (classes.size() >= 2 && classes[0].exact && classes[1].exact &&
      classes[0].modulus.lo == classes[1].modulus.lo) {
    rep.proximal = Tri::no;
    rep.positive_proximal = Tri::no;
    return rep;
  }
  return rep;  // indeterminate
}

std::vector<SpectralReport> proximality_scan(const std::vector<Word>& corpus, const Rational& t0) {
  std::vector<SpectralReport> out;
  out.reserve(corpus.size());
  for (const Word& w : corpus) out.push_back(proximality_report(w, t0));
  return out;
}

}  // namespace thinlat
