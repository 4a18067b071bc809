#include "thinlat/numfield.hpp"

#include "thinlat/rep.hpp"
#include "thinlat/tracecert.hpp"

#include <map>

namespace thinlat {

QuadraticField::QuadraticField(long d) : d_(d) {
  if (d < 2 || !is_square_free(Integer(d)))
    throw std::invalid_argument("QuadraticField: d must be square-free and >= 2, got " +
                                std::to_string(d));
}

bool QuadraticField::is_integral(const QuadElem& x) const {
  if (!x.is_rational() && x.m() != d_)
    throw std::invalid_argument("QuadraticField::is_integral: element of a different field");
  if (!half_integer_basis()) return is_integer(x.a()) && is_integer(x.b());
  // d = 1 mod 4: a, b in (1/2)Z with matching parity; equivalently trace and
  // norm are rational integers.
  Rational a2 = 2 * x.a(), b2 = 2 * x.b();
  if (!is_integer(a2) || !is_integer(b2)) return false;
  return (a2.get_num() - b2.get_num()) % 2 == 0;
}

ContinuedFraction continued_fraction(long d, const Integer& p0, const Integer& q0,
                                     size_t max_terms) {
  Integer D(d);
  if (q0 == 0 || (D - p0 * p0) % q0 != 0)
    throw std::invalid_argument("continued_fraction: q0 must divide d - p0^2");
  Integer sq = isqrt_floor(D);
  if (sq * sq == D) throw std::invalid_argument("continued_fraction: d is a perfect square");

  ContinuedFraction cf;
  Integer p = p0, q = q0;
  std::map<std::pair<std::string, std::string>, size_t> seen;
  for (size_t k = 0; k < max_terms; ++k) {
    auto key = std::make_pair(p.get_str(), q.get_str());
    auto it = seen.find(key);
    if (it != seen.end()) {
      cf.period_start = it->second;
      cf.period_len = k - it->second;
      return cf;
    }
    seen.emplace(key, k);
    // floor((p + sqrt(d)) / q), exact for either sign of q
    Integer num = p + sq;
    Integer a;
    if (q > 0) {
      mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    } else {
      Integer num2 = p + sq + 1;  // ceil adjustment under negative q
      mpz_cdiv_q(a.get_mpz_t(), num2.get_mpz_t(), q.get_mpz_t());
    }
    cf.partials.push_back(a);
    p = a * q - p;
    q = (D - p * p) / q;
  }
  throw std::runtime_error("continued_fraction: no period within max_terms");
}

ContinuedFraction ring_generator_cf(long d) {
  if (d % 4 == 1) return continued_fraction(d, 1, 2);
  return continued_fraction(d, 0, 1);
}

UnitRecord fundamental_unit(long d) {
  QuadraticField field(d);
  bool half = field.half_integer_basis();
  QuadElem sqrt_d = QuadElem::sqrt_of(Integer(d));
  QuadElem omega = half ? (QuadElem(1) + sqrt_d) * QuadElem(Rational(1, 2)) : sqrt_d;
  QuadElem omega_bar = omega.conj();

  ContinuedFraction cf = continued_fraction(d, half ? 1 : 0, half ? 2 : 1, 100000);
  // Regenerate enough partial quotients to cover two periods.
  size_t need = cf.period_start + 2 * cf.period_len + 2;
  std::vector<Integer> a = cf.partials;
  {
    size_t idx = cf.period_start;
    while (a.size() < need) {
      a.push_back(cf.partials[idx]);
      ++idx;
      if (idx >= cf.partials.size()) idx = cf.period_start;
    }
  }
  Integer p_prev = 1, q_prev = 0;
  Integer p = a[0], q = 1;
  for (size_t k = 0;; ++k) {
    // candidate p_k - q_k * tau(omega)
    QuadElem eta = QuadElem(Rational(p)) - QuadElem(Rational(q)) * omega_bar;
    Rational n = eta.norm();
    if ((n == 1 || n == -1) && QuadElem(1) < eta) {
      UnitRecord rec;
      rec.eps = eta;
      rec.eps_norm = n == 1 ? 1 : -1;
      rec.u = eta * eta;
      return rec;
    }
    if (k + 1 >= a.size())
      throw std::runtime_error("fundamental_unit: no unit among convergents (d=" +
                               std::to_string(d) + ")");
    Integer pn = a[k + 1] * p + p_prev;
    Integer qn = a[k + 1] * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
}

UnitRecord unit_with_power(long d, long k) {
  if (k < 1) throw std::invalid_argument("unit_with_power: k must be >= 1");
  UnitRecord rec = fundamental_unit(d);
  rec.u = rec.eps.pow(2 * k);
  return rec;
}

IntegralTraceVerdict certify_integral_traces(long d, const QuadElem& u, int radius,
                                             bool trace_certificate_established) {
  if (!trace_certificate_established)
    throw std::logic_error(
        "certify_integral_traces: two-basis trace certificate must be established first");
  QuadraticField field(d);
  if (!(u * u.conj()).is_one())
    throw std::invalid_argument("certify_integral_traces: u tau(u) != 1");

  IntegralTraceVerdict verdict;
  QuadElem t0 = u * QuadElem(Rational(1, 2));
  const RepFamily& phi = RepFamily::phi();
  std::array<Mat4<QuadElem>, 4> img;
  for (int i = 0; i < 4; ++i) img[static_cast<size_t>(i)] = specialize(phi.image(static_cast<Letter>(i)), t0);

  std::vector<Mat4<QuadElem>> stack{Mat4<QuadElem>::identity()};
  std::vector<Mat4<LaurentPoly>> sym{Mat4<LaurentPoly>::identity()};
  const RepFamily& rho = RepFamily::rho();
  bool all_ok = true;
  walk_ball(
      radius,
      [&](Letter l) {
        stack.push_back(stack.back() * img[static_cast<size_t>(l)]);
        sym.push_back(sym.back() * rho.image(l));
      },
      [&]() {
        stack.pop_back();
        sym.pop_back();
      },
      [&](const Word& w) {
        ++verdict.words_checked;
        QuadElem tr_phi = stack.back().trace();
        QuadElem tr_laurent = sym.back().trace().eval(u);
        if (tr_phi != tr_laurent || !field.is_integral(tr_phi)) {
          all_ok = false;
          if (verdict.failures.size() < 16) verdict.failures.push_back(w);
        }
        bool entries_integral = true;
        for (const QuadElem& e : stack.back().e)
          if (!field.is_integral(e)) {
            entries_integral = false;
            break;
          }
        if (entries_integral) ++verdict.fully_integral_entry_words;
      });
  verdict.pass = all_ok;
  return verdict;
}

}  // namespace thinlat
