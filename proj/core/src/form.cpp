#include "thinlat/form.hpp"

#include "thinlat/numfield.hpp"

#include <algorithm>

namespace thinlat {

namespace {

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return poly_exact_div(a * b, poly_gcd(a, b)).monic();
}

// tau-sesquilinear pairing tau(u)^T Q w.
QuadElem pair_with(const Mat4<QuadElem>& q, const std::array<QuadElem, 4>& u,
                   const std::array<QuadElem, 4>& w, bool conjugate_left) {
  QuadElem acc;
  for (int i = 0; i < 4; ++i) {
    if (u[static_cast<size_t>(i)].is_zero()) continue;
    QuadElem ui = conjugate_left ? u[static_cast<size_t>(i)].conj() : u[static_cast<size_t>(i)];
    for (int j = 0; j < 4; ++j)
      acc += ui * q.at(i, j) * w[static_cast<size_t>(j)];
  }
  return acc;
}

struct CongruenceResult {
  Mat4<QuadElem> basis;
  std::array<QuadElem, 4> diag;
};

// Column-by-column congruence diagonalization. conjugate_left selects the
// Hermitian (tau on the left slot) vs symmetric pairing.
CongruenceResult congruence_diagonalize(const Mat4<QuadElem>& q, bool conjugate_left, long d) {
  std::array<std::array<QuadElem, 4>, 4> basis;
  for (int i = 0; i < 4; ++i) basis[static_cast<size_t>(i)][static_cast<size_t>(i)] = QuadElem(1);

  auto B = [&](const std::array<QuadElem, 4>& u, const std::array<QuadElem, 4>& w) {
    return pair_with(q, u, w, conjugate_left);
  };

  for (size_t i = 0; i < 4; ++i) {
    if (B(basis[i], basis[i]).is_zero()) {
      // Least j with nonzero mixed term; mix with a scalar from a small
      // candidate set (the vanishing locus is a proper subset, so one hits).
      bool fixed = false;
      for (size_t j = i + 1; j < 4 && !fixed; ++j) {
        if (B(basis[i], basis[j]).is_zero()) continue;
        std::vector<QuadElem> cands = {QuadElem(1), QuadElem(2), QuadElem(Rational(1, 2))};
        if (d >= 2) {
          cands.push_back(QuadElem::sqrt_of(Integer(d)));
          cands.push_back(QuadElem(1) + QuadElem::sqrt_of(Integer(d)));
        }
        for (const QuadElem& c : cands) {
          std::array<QuadElem, 4> trial = basis[i];
          for (size_t e = 0; e < 4; ++e) trial[e] += c * basis[j][e];
          if (!B(trial, trial).is_zero()) {
            basis[i] = trial;
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) throw std::domain_error("congruence_diagonalize: degenerate form");
    }
    QuadElem dii = B(basis[i], basis[i]);
    for (size_t j = i + 1; j < 4; ++j) {
      QuadElem c = B(basis[i], basis[j]) / dii;
      if (c.is_zero()) continue;
      for (size_t e = 0; e < 4; ++e) basis[j][e] -= c * basis[i][e];
    }
  }

  CongruenceResult r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.basis.at(i, j) = basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
  for (size_t i = 0; i < 4; ++i) r.diag[i] = B(basis[i], basis[i]);
  return r;
}

}  // namespace

std::pair<int, int> symmetric_signature(const Mat4<QuadElem>& q) {
  CongruenceResult r = congruence_diagonalize(q, false, 0);
  int pos = 0, neg = 0;
  for (const QuadElem& x : r.diag) {
    int s = x.sign();
    if (s > 0) ++pos;
    if (s < 0) ++neg;
  }
  return {pos, neg};
}

InvariantForm solve_invariant_form(const RepFamily& fam) {
  InvariantForm out;
  out.family = fam.name();

  DMat<RatFunc> sys(32, 16);
  size_t row = 0;
  for (Letter g : {Letter::x, Letter::y}) {
    Mat4<LaurentPoly> a = fam.image(g);
    // phi is a family in t; the star involution lives in v = 2t.
    if (fam.param() == 't')
      a = a.map([](const LaurentPoly& p) { return p.substitute_scaled(QuadElem(Rational(1, 2)), 'v'); });
    Mat4<LaurentPoly> astar = laurent_star(a);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            RatFunc coef = RatFunc::from_laurent(astar.at(i, k) * a.at(l, j));
            if (k == i && l == j) coef -= RatFunc(1);
            sys.at(row, static_cast<size_t>(4 * k + l)) = coef;
          }
        ++row;
      }
  }
  auto ns = nullspace(sys);
  out.solution_dim = static_cast<int>(ns.size());
  if (out.solution_dim == 0)
    throw std::domain_error("solve_invariant_form: no invariant form (dimension 0)");
  if (out.solution_dim > 1)
    throw std::domain_error("solve_invariant_form: solution dimension " +
                            std::to_string(out.solution_dim) + " signals reducibility");

  // Clear denominators to Laurent entries.
  Poly den(QuadElem(1));
  for (const RatFunc& f : ns[0]) den = poly_lcm(den, f.den());
  std::array<LaurentPoly, 16> ent;
  for (size_t e = 0; e < 16; ++e) {
    RatFunc scaled = ns[0][e] * RatFunc(den);
    if (!scaled.is_polynomial())
      throw std::logic_error("solve_invariant_form: denominator clearing failed");
    ent[e] = LaurentPoly::from_poly(scaled.num());
  }
  // Content normalization and centered valuation.
  Rational content(0);
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& p : ent) {
    if (p.is_zero()) continue;
    content = rat_gcd(content, p.content());
    if (first) {
      lo = p.min_exp();
      hi = p.max_exp();
      first = false;
    } else {
      lo = std::min(lo, p.min_exp());
      hi = std::max(hi, p.max_exp());
    }
  }
  long shift = -((lo + hi) >= 0 ? (lo + hi) / 2 : -((-lo - hi + 1) / 2));
  QuadElem inv_content(1 / content);
  for (auto& p : ent) p = (p * inv_content).shifted(shift);

  Mat4<LaurentPoly> q;
  for (size_t e = 0; e < 16; ++e) q.e[e] = ent[e];

  // Enforce Q* = Q. The line is star-stable, so Q* = +/- v^k Q; fix k by a
  // monomial (odd k via an extra (1+v) factor), then the sign by v - 1/v.
  auto star_ratio = [&](const Mat4<LaurentPoly>& m) -> std::pair<int, long> {
    Mat4<LaurentPoly> s = laurent_star(m);
    long span = 0;
    for (const auto& p : m.e)
      if (!p.is_zero()) span = std::max(span, std::max(std::abs(p.min_exp()), std::abs(p.max_exp())));
    for (long k = -2 * span - 2; k <= 2 * span + 2; ++k) {
      bool plus = true, minus = true;
      for (size_t e = 0; e < 16 && (plus || minus); ++e) {
        LaurentPoly shifted = m.e[e].shifted(k);
        if (!(s.e[e] == shifted)) plus = false;
        if (!(s.e[e] == -shifted)) minus = false;
      }
      if (plus) return {1, k};
      if (minus) return {-1, k};
    }
    throw std::logic_error("solve_invariant_form: star image is not proportional to the form");
  };
  auto [sign0, k0] = star_ratio(q);
  if (k0 % 2 != 0) {
    // (1+v) shifts the star exponent by one, making it even.
    LaurentPoly one_plus_v = LaurentPoly(QuadElem(1)) + LaurentPoly(QuadElem(1), 1, 'v');
    q = q.map([&](const LaurentPoly& p) { return p * one_plus_v; });
    auto [s1, k1] = star_ratio(q);
    sign0 = s1;
    k0 = k1;
  }
  // (v^{k/2} Q)* = v^{-k/2} Q* = sign v^{k/2} Q.
  if (k0 != 0) q = q.map([&](const LaurentPoly& p) { return p.shifted(k0 / 2); });
  if (sign0 < 0) {
    LaurentPoly v_minus = LaurentPoly(QuadElem(1), 1, 'v') - LaurentPoly(QuadElem(1), -1, 'v');
    q = q.map([&](const LaurentPoly& p) { return p * v_minus; });
  }
  if (!(laurent_star(q) == q))
    throw std::logic_error("solve_invariant_form: star symmetrization failed");

  // First nonzero entry: content 1, positive leading coefficient.
  for (const auto& p : q.e) {
    if (p.is_zero()) continue;
    QuadElem scale(1 / p.content());
    if (p.terms().rbegin()->second.sign() < 0) scale = -scale;
    q = q.map([&](const LaurentPoly& e) { return e * scale; });
    break;
  }
  // Sign convention: signature (3,1) at the v = 1 point.
  auto sig = symmetric_signature(specialize(q, QuadElem(1)));
  if (sig.first == 1 && sig.second == 3)
    q = q.map([](const LaurentPoly& p) { return -p; });
  out.q = q;
  out.det = det4(q);
  out.star_symmetric = laurent_star(q) == q;
  return out;
}

std::vector<Word> verify_invariance(const InvariantForm& form, const RepFamily& fam, int radius) {
  std::vector<Word> failures;
  auto to_v = [&](const Mat4<LaurentPoly>& m) {
    if (fam.param() == 't')
      return m.map([](const LaurentPoly& p) { return p.substitute_scaled(QuadElem(Rational(1, 2)), 'v'); });
    return m;
  };
  std::array<Mat4<LaurentPoly>, 4> img;
  for (int i = 0; i < 4; ++i) img[static_cast<size_t>(i)] = to_v(fam.image(static_cast<Letter>(i)));
  std::vector<Mat4<LaurentPoly>> stack{Mat4<LaurentPoly>::identity()};
  walk_ball(
      radius, [&](Letter l) { stack.push_back(stack.back() * img[static_cast<size_t>(l)]); },
      [&]() { stack.pop_back(); },
      [&](const Word& w) {
        const Mat4<LaurentPoly>& a = stack.back();
        if (!(laurent_star(a) * form.q * a == form.q)) failures.push_back(w);
      });
  return failures;
}

Mat4<QuadElem> hermitian_specialize(const InvariantForm& form, long d, const QuadElem& u) {
  QuadraticField field(d);
  if (!field.is_integral(u) || !field.is_integral(u.conj()))
    throw std::invalid_argument("hermitian_specialize: u is not an algebraic integer");
  if (!(u * u.conj()).is_one())
    throw std::invalid_argument("hermitian_specialize: u * tau(u) != 1, not a positive unit");
  for (const auto& p : form.q.e)
    if (!p.all_coeffs_rational())
      throw std::invalid_argument(
          "hermitian_specialize: form has irrational coefficients; specialize the phi-side form");
  return specialize(form.q, u);
}

bool is_tau_hermitian(const Mat4<QuadElem>& q) {
  return q.transposed().map([](const QuadElem& x) { return x.conj(); }) == q;
}

DiagonalizedForm diagonalize(const Mat4<QuadElem>& q, long d) {
  if (!is_tau_hermitian(q)) throw std::invalid_argument("diagonalize: matrix is not tau-Hermitian");
  CongruenceResult r = congruence_diagonalize(q, true, d);
  DiagonalizedForm out;
  out.basis = r.basis;
  out.diag = r.diag;
  for (size_t i = 0; i < 4; ++i) {
    const QuadElem& x = r.diag[i];
    if (!x.is_rational())
      throw std::logic_error("diagonalize: diagonal entry is not tau-fixed");
    if (x.is_zero()) throw std::domain_error("diagonalize: degenerate form");
    // Delta_i * (den)^2 = num * den: strip the square part, keep the sign.
    Integer n = x.a().get_num() * x.a().get_den();
    int sign = sgn(n);
    SquareSplit s = split_square(abs(n));
    out.integer_diag[i] = Integer(sign) * s.kernel;
  }
  return out;
}

}  // namespace thinlat
