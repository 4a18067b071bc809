#include "thinlat/rootcert.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace thinlat {

RatInterval rat_sqrt_interval(const Rational& x, int bits) {
  if (sgn(x) < 0) throw std::domain_error("rat_sqrt_interval: negative argument");
  if (sgn(x) == 0) return {Rational(0), Rational(0)};
  // sqrt(p/q) = sqrt(p q)/q; scale by 4^bits for precision.
  Integer scale = int_pow(2, static_cast<unsigned long>(bits));
  Integer n = x.get_num() * x.get_den() * scale * scale;
  Integer lo = isqrt_floor(n);
  Rational den(x.get_den() * scale);
  Rational l(lo);
  l /= den;
  Rational h(lo + 1);
  h /= den;
  return {l, h};
}

namespace {

Rational eval_rat(const Poly& p, const Rational& x) {
  Rational acc(0);
  const auto& cs = p.coeffs();
  for (size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i].a();
  return acc;
}

int sign_at(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, prev = 0;
  for (const Poly& p : chain) {
    int s = sgn(eval_rat(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

struct ComplexRat {
  Rational re, im;
  ComplexRat operator*(const ComplexRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexRat operator+(const ComplexRat& o) const { return {re + o.re, im + o.im}; }
  Rational norm2() const { return re * re + im * im; }
};

ComplexRat eval_complex(const Poly& p, const ComplexRat& z) {
  ComplexRat acc{Rational(0), Rational(0)};
  const auto& cs = p.coeffs();
  for (size_t i = cs.size(); i-- > 0;) {
    acc = acc * z;
    acc.re += cs[i].a();
  }
  return acc;
}

std::vector<std::complex<double>> durand_kerner(const Poly& p) {
  int n = p.degree();
  std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = p.coeff(i).a().get_d();
  double lead = std::abs(c.back());
  for (auto& x : c) x /= lead;
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
  };
  std::vector<std::complex<double>> r(static_cast<size_t>(n));
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> w = 1.0;
  for (int i = 0; i < n; ++i) {
    r[static_cast<size_t>(i)] = w;
    w *= seed;
    w += std::complex<double>(0.13, 0.05);
  }
  for (int iter = 0; iter < 600; ++iter) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> num = eval(r[static_cast<size_t>(i)]);
      std::complex<double> den = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)];
      if (std::abs(den) < 1e-300) den = 1e-300;
      std::complex<double> delta = num / den;
      r[static_cast<size_t>(i)] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  return r;
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("to_rational: non-finite double");
  Rational r(x);  // exact binary expansion
  return r;
}

}  // namespace

std::vector<Poly> sturm_chain(const Poly& p) {
  if (!p.all_coeffs_rational()) throw std::domain_error("sturm_chain: irrational coefficients");
  std::vector<Poly> chain;
  chain.push_back(p.primitive());
  chain.push_back(p.derivative().primitive());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly rem = poly_divrem(chain[chain.size() - 2], chain.back()).rem;
    if (rem.is_zero()) break;
    chain.push_back((-rem).primitive());
  }
  return chain;
}

int sturm_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sign_at(chain, a) - sign_at(chain, b);
}

std::vector<RatInterval> isolate_real_roots(const Poly& p, const Rational& tol) {
  std::vector<RatInterval> out;
  if (p.degree() <= 0) return out;
  auto chain = sturm_chain(p);
  // Cauchy bound: 1 + max |a_i / a_n|.
  Rational bound(1);
  Rational lead = abs(p.lead().a());
  for (int i = 0; i < p.degree(); ++i) {
    Rational c = abs(p.coeff(i).a()) / lead;
    if (c > bound) bound = c;
  }
  bound += 1;
  struct Seg {
    Rational a, b;
    int count;
  };
  std::vector<Seg> work{{-bound, bound, sturm_count(chain, -bound, bound)}};
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1 && s.b - s.a <= tol) {
      out.push_back({s.a, s.b});
      continue;
    }
    Rational mid = (s.a + s.b) / 2;
    // Nudge off a root so interval endpoints stay regular.
    if (sgn(eval_rat(p, mid)) == 0) {
      out.push_back({mid, mid});
      Rational eps = (s.b - s.a) / 1024;
      int left = sturm_count(chain, s.a, mid - eps);
      int right = sturm_count(chain, mid + eps, s.b);
      if (left > 0) work.push_back({s.a, mid - eps, left});
      if (right > 0) work.push_back({mid + eps, s.b, right});
      continue;
    }
    int left = sturm_count(chain, s.a, mid);
    if (left > 0) work.push_back({s.a, mid, left});
    if (s.count - left > 0) work.push_back({mid, s.b, s.count - left});
  }
  std::sort(out.begin(), out.end(), [](const RatInterval& l, const RatInterval& r) { return l.lo < r.lo; });
  return out;
}

std::optional<std::vector<RootRegion>> certify_roots(const Poly& p, int bits) {
  if (p.degree() <= 0) return std::vector<RootRegion>{};
  Rational tol(Integer(1), int_pow(2, static_cast<unsigned long>(bits)));
  tol.canonicalize();
  Poly der = p.derivative();
  std::vector<RootRegion> regions;

  auto reals = isolate_real_roots(p, tol);
  for (const auto& iv : reals) {
    RootRegion r;
    r.certified_real = true;
    r.real_interval = iv;
    r.center_re = (iv.lo + iv.hi) / 2;
    r.center_im = 0;
    r.approx_re = r.center_re.get_d();
    Rational alo = std::min(abs(iv.lo), abs(iv.hi));
    Rational ahi = std::max(abs(iv.lo), abs(iv.hi));
    if (sgn(iv.lo) != sgn(iv.hi)) alo = 0;  // interval straddles 0
    r.modulus = {alo, ahi};
    regions.push_back(std::move(r));
  }

  size_t nonreal = static_cast<size_t>(p.degree()) - reals.size();
  if (nonreal == 0) return regions;

  auto approx = durand_kerner(p);
  // Keep approximations with significant imaginary part, one per conjugate
  // pair partner as well; match count against the Sturm-certified number.
  std::vector<std::complex<double>> cplx;
  for (auto z : approx)
    if (std::abs(z.imag()) > 1e-9) cplx.push_back(z);
  if (cplx.size() != nonreal) return std::nullopt;

  for (auto z : cplx) {
    // A couple of Newton polishing steps in double.
    for (int it = 0; it < 4; ++it) {
      std::complex<double> pv = 0, dv = 0;
      for (size_t i = p.coeffs().size(); i-- > 0;) pv = pv * z + p.coeff(static_cast<int>(i)).a().get_d();
      for (size_t i = der.coeffs().size(); i-- > 0;) dv = dv * z + der.coeff(static_cast<int>(i)).a().get_d();
      if (std::abs(dv) < 1e-280) break;
      z -= pv / dv;
    }
    RootRegion r;
    r.approx_re = z.real();
    r.approx_im = z.imag();
    r.center_re = to_rational(z.real());
    r.center_im = to_rational(z.imag());
    ComplexRat zc{r.center_re, r.center_im};
    Rational pv2 = eval_complex(p, zc).norm2();
    Rational dv2 = eval_complex(der, zc).norm2();
    if (sgn(dv2) == 0) return std::nullopt;
    r.radius_sq = Rational(p.degree() * p.degree()) * pv2 / dv2;
    // Certified nonreal: the disk must avoid the real axis.
    if (!(r.center_im * r.center_im > r.radius_sq)) return std::nullopt;
    r.certified_real = false;
    RatInterval cmod = rat_sqrt_interval(zc.norm2(), bits);
    RatInterval rad = rat_sqrt_interval(r.radius_sq, bits);
    Rational lo = cmod.lo - rad.hi;
    if (sgn(lo) < 0) lo = 0;
    r.modulus = {lo, cmod.hi + rad.hi};
    regions.push_back(std::move(r));
  }

  // Disk disjointness: with exactly deg(p) regions (counting real isolating
  // intervals) and each containing at least one root, pigeonhole gives a
  // bijection; overlapping disks void the certificate.
  for (size_t i = reals.size(); i < regions.size(); ++i)
    for (size_t j = i + 1; j < regions.size(); ++j) {
      Rational dx = regions[i].center_re - regions[j].center_re;
      Rational dy = regions[i].center_im - regions[j].center_im;
      Rational dist2 = dx * dx + dy * dy;
      RatInterval ri = rat_sqrt_interval(regions[i].radius_sq, bits);
      RatInterval rj = rat_sqrt_interval(regions[j].radius_sq, bits);
      Rational sum = ri.hi + rj.hi;
      if (!(dist2 > sum * sum)) return std::nullopt;
    }
  return regions;
}

}  // namespace thinlat
