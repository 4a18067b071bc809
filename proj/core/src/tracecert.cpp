#include "thinlat/tracecert.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace thinlat {

namespace {

std::vector<Fp> flatten_fp(const Mat4<Fp>& m) {
  std::vector<Fp> v(16);
  for (int i = 0; i < 16; ++i) v[static_cast<size_t>(i)] = m.e[static_cast<size_t>(i)];
  return v;
}

LaurentPoly trace_of_product(const Mat4<LaurentPoly>& a, const Mat4<LaurentPoly>& b) {
  LaurentPoly acc;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) acc += a.at(r, c) * b.at(c, r);
  return acc;
}

}  // namespace

RatFunc Basis16::gram_inv(size_t j, size_t k) const {
  Poly den = inv_den;
  Poly num = inv_num.at(j, k);
  // gram^{-1} = v^{vshift} * G^{-1}
  if (vshift >= 0)
    num = num * Poly::monomial(static_cast<int>(vshift));
  else
    den = den * Poly::monomial(static_cast<int>(-vshift));
  return RatFunc(num, den);
}

Basis16 find_basis(uint64_t seed, BasisStrategy strategy, int pool_radius) {
  const RepFamily& fam = RepFamily::rho();
  std::mt19937_64 rng(0xBA5150000ull ^ seed);
  std::uniform_int_distribution<uint64_t> dist(2, Fp::P - 2);
  Fp v0 = Fp::raw(dist(rng));
  FpRep shadow(fam, v0);

  std::vector<Word> pool = enumerate_ball(pool_radius);
  if (strategy == BasisStrategy::randomized) {
    // identity stays first; the rest is shuffled
    std::shuffle(pool.begin() + 1, pool.end(), rng);
  }

  Basis16 b;
  SpanAccumulator<Fp> span(16);
  for (const Word& w : pool) {
    if (b.words.size() == 16) break;
    if (!span.insert(flatten_fp(shadow.evaluate(w)))) continue;
    b.words.push_back(w);
  }
  if (b.words.size() != 16)
    throw std::domain_error("find_basis: ball exhausted before 16 independent images");
  if (!b.words[0].is_identity())
    throw std::logic_error("find_basis: identity image was not independent first");

  for (const Word& w : b.words) b.mats.push_back(fam.evaluate(w));
  b.gram.resize(256);
  for (size_t i = 0; i < 16; ++i)
    for (size_t j = i; j < 16; ++j) {
      LaurentPoly t = trace_of_product(b.mats[i], b.mats[j]);
      b.gram[16 * i + j] = t;
      b.gram[16 * j + i] = t;
    }

  // Clear the common v-power so the Gram matrix becomes polynomial, then
  // invert fraction-free.
  long mu = 0;
  for (const auto& t : b.gram)
    if (!t.is_zero()) mu = std::min(mu, t.min_exp());
  b.vshift = -mu;
  DMat<Poly> g(16, 16);
  for (size_t i = 0; i < 16; ++i)
    for (size_t j = 0; j < 16; ++j)
      g.at(i, j) = b.gram[16 * i + j].shifted(-mu).numerator_poly();
  BareissResult inv = bareiss_inverse(g);  // throws when singular
  b.inv_num = std::move(inv.scaled_inverse);
  b.inv_den = std::move(inv.det);
  return b;
}

DualBasis dual_basis(const Basis16& b) {
  DualBasis d;
  d.mats.resize(16);
  // g_j* = sum_k (T^{-1})_{jk} g_k; assemble numerators as Laurent and
  // normalize once per entry.
  for (size_t j = 0; j < 16; ++j) {
    Mat4<LaurentPoly> num;
    for (size_t k = 0; k < 16; ++k) {
      LaurentPoly coeff = LaurentPoly::from_poly(b.inv_num.at(j, k)).shifted(b.vshift);
      if (coeff.is_zero()) continue;
      for (int e = 0; e < 16; ++e)
        num.e[static_cast<size_t>(e)] += coeff * b.mats[k].e[static_cast<size_t>(e)];
    }
    for (int e = 0; e < 16; ++e) {
      const LaurentPoly& n = num.e[static_cast<size_t>(e)];
      d.mats[j].e[static_cast<size_t>(e)] =
          RatFunc(n.numerator_poly(),
                  b.inv_den * Poly::monomial(static_cast<int>(n.denominator_exponent())));
    }
  }
  return d;
}

DMat<RatFunc> regular_rep(const Basis16& b, const Word& gamma) {
  const RepFamily& fam = RepFamily::rho();
  Mat4<LaurentPoly> mg = fam.evaluate(gamma);
  // t_{jk} = tr(g_j . gamma . g_k); alpha_{ij} = sum_k (T^{-1})_{ik} t_{jk}.
  std::vector<LaurentPoly> t(256);
  std::vector<Mat4<LaurentPoly>> gk_after;
  gk_after.reserve(16);
  for (size_t k = 0; k < 16; ++k) gk_after.push_back(mg * b.mats[k]);
  for (size_t j = 0; j < 16; ++j)
    for (size_t k = 0; k < 16; ++k) t[16 * j + k] = trace_of_product(b.mats[j], gk_after[k]);

  DMat<RatFunc> alpha(16, 16);
  for (size_t i = 0; i < 16; ++i)
    for (size_t j = 0; j < 16; ++j) {
      LaurentPoly num;
      for (size_t k = 0; k < 16; ++k) {
        const Poly& c = b.inv_num.at(i, k);
        if (c.is_zero() || t[16 * j + k].is_zero()) continue;
        num += LaurentPoly::from_poly(c) * t[16 * j + k];
      }
      num = num.shifted(b.vshift);
      alpha.at(i, j) =
          RatFunc(num.numerator_poly(),
                  b.inv_den * Poly::monomial(static_cast<int>(num.denominator_exponent())));
    }
  return alpha;
}

DenominatorReport denominator_report(const Basis16& b, const std::string& label) {
  DenominatorReport rep;
  rep.basis_label = label;
  rep.words = b.words;
  std::map<std::string, Poly> seen;
  for (const char* gen : {"x", "x^-1", "y", "y^-1"}) {
    DMat<RatFunc> alpha = regular_rep(b, Word::parse(gen));
    for (const RatFunc& f : alpha.a) {
      const Poly& den = f.den();
      if (den.degree() == 0) continue;
      for (const PolyFactor& pf : factor_for_report(den)) {
        if (pf.factor.degree() == 0) continue;
        seen.emplace(pf.factor.str(), pf.factor);
        if (!pf.known_irreducible && !is_unit_monomial(pf.factor)) rep.only_v_and_low_degree = false;
      }
    }
  }
  for (auto& [k, p] : seen) rep.factors.push_back(p);
  return rep;
}

namespace {

bool is_v_monomial_factor(const Poly& p) { return is_unit_monomial(p); }

}  // namespace

TraceCertificate certify_traces(const DenominatorReport& a, const DenominatorReport& b,
                                int corpus_radius) {
  TraceCertificate cert;
  cert.report_a = a;
  cert.report_b = b;

  std::set<std::string> a_nonv;
  for (const Poly& p : a.factors)
    if (!is_v_monomial_factor(p)) a_nonv.insert(p.str());
  for (const Poly& p : b.factors)
    if (!is_v_monomial_factor(p) && a_nonv.count(p.str())) cert.intersection_non_v.push_back(p);

  if (!cert.intersection_non_v.empty()) {
    for (const Poly& p : cert.intersection_non_v)
      cert.failures.push_back("shared non-monomial denominator factor: " + p.str());
  }

  cert.corpus_integer_laurent = true;
  for (const auto& [w, tr] : ball_traces(RepFamily::rho(), corpus_radius)) {
    ++cert.corpus_words;
    if (!tr.all_coeffs_integer()) {
      cert.corpus_integer_laurent = false;
      cert.failures.push_back("non-integral trace at word: " + w.str());
      if (cert.failures.size() > 8) break;
    }
  }
  cert.pass = cert.intersection_non_v.empty() && cert.corpus_integer_laurent;
  return cert;
}

TraceCertificate default_trace_certificate(uint64_t seed_a, uint64_t seed_b, int corpus_radius) {
  Basis16 a = find_basis(seed_a, BasisStrategy::shortlex);
  DenominatorReport ra = denominator_report(a, "shortlex");
  std::set<std::string> a_nonv;
  for (const Poly& p : ra.factors)
    if (!is_unit_monomial(p)) a_nonv.insert(p.str());

  // Redraw the random basis until its non-v denominator factors are disjoint
  // from the shortlex ones.
  for (uint64_t attempt = 0; attempt < 32; ++attempt) {
    Basis16 b = find_basis(seed_b + attempt, BasisStrategy::randomized);
    DenominatorReport rb = denominator_report(b, "randomized");
    bool disjoint = true;
    for (const Poly& p : rb.factors)
      if (!is_unit_monomial(p) && a_nonv.count(p.str())) disjoint = false;
    if (!disjoint) continue;
    return certify_traces(ra, rb, corpus_radius);
  }
  throw std::domain_error(
      "default_trace_certificate: no disjoint second basis found in 32 redraws");
}

std::vector<std::pair<Word, LaurentPoly>> ball_traces(const RepFamily& fam, int radius) {
  std::vector<std::pair<Word, LaurentPoly>> out;
  std::vector<Mat4<LaurentPoly>> stack{Mat4<LaurentPoly>::identity()};
  walk_ball(
      radius, [&](Letter l) { stack.push_back(stack.back() * fam.image(l)); },
      [&]() { stack.pop_back(); },
      [&](const Word& w) { out.emplace_back(w, stack.back().trace()); });
  return out;
}

}  // namespace thinlat
