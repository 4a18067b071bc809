#include <CLI11.hpp>
#include <json.hpp>

#include "thinlat/catalog.hpp"
#include "thinlat/certificate.hpp"
#include "thinlat/density.hpp"
#include "thinlat/form.hpp"
#include "thinlat/intertwiner.hpp"
#include "thinlat/numfield.hpp"
#include "thinlat/rep.hpp"
#include "thinlat/tracecert.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;
using namespace thinlat;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 2;
constexpr int kExitInputError = 3;

struct OutputOptions {
  std::string cert_dir = "thinlat-certs";
  std::string out_path;
  bool markdown = false;
};

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

int emit(json body, long timing_ms, const OutputOptions& opts) {
  body = finalize_certificate(std::move(body), timing_ms);
  store_certificate(body, opts.cert_dir);
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path);
    out << body.dump(2) << "\n";
  }
  if (opts.markdown)
    std::cout << render_markdown(body);
  else
    std::cout << body.dump(2) << "\n";
  return certificate_passes(body) ? kExitPass : kExitCheckFailed;
}

json trace_table(const std::string& family, int radius) {
  json table = json::object();
  const RepFamily& fam = RepFamily::by_name(family);
  for (const auto& [w, tr] : ball_traces(fam, radius)) {
    LaurentPoly in_v = fam.param() == 't' ? tr.substitute_scaled(QuadElem(Rational(1, 2)), 'v') : tr;
    table[w.str()] = in_v.str();
  }
  return table;
}

int cmd_verify(const std::string& family, int radius, const OutputOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  json body;
  body["command"] = "verify";
  body["inputs"] = {{"family", family}, {"radius", radius}};

  json verdicts, witnesses;
  const WordCatalog& cat = catalog();  // throws when discovery fails

  verdicts["relator_nontrivial"] = pass(!cat.relator.relator.is_identity());
  verdicts["relator_length_within_12"] = pass(cat.relator.relator.length() <= 12);
  verdicts["relator_identity_rho"] = pass(RepFamily::rho().evaluate(cat.relator.relator).is_identity());
  verdicts["relator_identity_phi"] = pass(RepFamily::phi().evaluate(cat.relator.relator).is_identity());
  witnesses["relator"] = cat.relator.relator.str();
  witnesses["relator_candidate_used"] = cat.relator.candidate_used;
  witnesses["relator_screened_words"] = cat.relator.screened_words;

  witnesses["longitude"] = cat.longitude.longitude.str();
  verdicts["longitude_char_poly"] =
      pass(char_poly4(RepFamily::rho().evaluate(cat.longitude.longitude)) ==
           longitude_char_poly_target());
  verdicts["longitude_commutes_with_meridian"] = pass(peripheral_commutes());
  verdicts["longitude_commutes_under_rho"] = pass(peripheral_commutes_rho());

  LaurentPoly one(QuadElem(1));
  bool dets = true;
  for (auto* fam : {&RepFamily::rho(), &RepFamily::phi()})
    for (Letter l : {Letter::x, Letter::y})
      if (!(det4(fam->image(l)) == one)) dets = false;
  verdicts["generator_determinants_one"] = pass(dets);

  try {
    Intertwiner c = find_intertwiner();
    verdicts["intertwiner_rank_one"] = pass(c.nullspace_dim == 1);
    verdicts["intertwiner_invertible"] = pass(!c.det.is_zero());
    json centries = json::array();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) centries.push_back(c.C.at(i, j).str("t"));
    witnesses["intertwiner"] = centries;
    witnesses["intertwiner_det"] = c.det.str("t");
  } catch (const std::exception& e) {
    verdicts["intertwiner_rank_one"] = "FAIL";
    witnesses["intertwiner_error"] = e.what();
  }

  verdicts["trace_tables_agree_at_v_2t"] = pass(traces_agree_at_v_eq_2t(radius));
  witnesses["trace_table"] = trace_table(family, std::min(radius, 3));

  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  body["verdicts"] = verdicts;
  body["witnesses"] = witnesses;
  return emit(std::move(body), ms, opts);
}

int cmd_trace_cert(uint64_t seed_a, uint64_t seed_b, int radius, const OutputOptions& opts) {
  if (seed_a == seed_b)
    throw CLI::ValidationError("--seed-b must differ from --seed-a: the two bases must be independent");
  auto start = std::chrono::steady_clock::now();
  json body;
  body["command"] = "trace-cert";
  body["inputs"] = {{"seed_a", seed_a}, {"seed_b", seed_b}, {"radius", radius}};
  body["upstream"] = {{"verify", require_upstream_pass(opts.cert_dir, "verify")}};

  TraceCertificate cert = default_trace_certificate(seed_a, seed_b, radius);

  json verdicts, witnesses;
  verdicts["two_bases_found"] = "PASS";  // find_basis throws otherwise
  verdicts["non_monomial_factor_sets_disjoint"] = pass(cert.intersection_non_v.empty());
  verdicts["corpus_traces_integer_laurent"] = pass(cert.corpus_integer_laurent);

  auto factors = [](const DenominatorReport& r) {
    json a = json::array();
    for (const Poly& f : r.factors) a.push_back(f.str());
    return a;
  };
  auto words = [](const DenominatorReport& r) {
    json a = json::array();
    for (const Word& w : r.words) a.push_back(w.str());
    return a;
  };
  witnesses["basis_a_words"] = words(cert.report_a);
  witnesses["basis_b_words"] = words(cert.report_b);
  witnesses["basis_a_factors"] = factors(cert.report_a);
  witnesses["basis_b_factors"] = factors(cert.report_b);
  json inter = json::array();
  for (const Poly& f : cert.intersection_non_v) inter.push_back(f.str());
  witnesses["intersection_excluding_v"] = inter;
  witnesses["corpus_words"] = cert.corpus_words;
  if (!cert.failures.empty()) witnesses["failures"] = cert.failures;

  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  body["verdicts"] = verdicts;
  body["witnesses"] = witnesses;
  return emit(std::move(body), ms, opts);
}

json form_entries(const Mat4<LaurentPoly>& q) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(q.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

int cmd_form(int radius, const OutputOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  json body;
  body["command"] = "form";
  body["inputs"] = {{"radius", radius}};
  body["upstream"] = {{"verify", require_upstream_pass(opts.cert_dir, "verify")}};

  json verdicts, witnesses;
  for (auto* fam : {&RepFamily::rho(), &RepFamily::phi()}) {
    InvariantForm f = solve_invariant_form(*fam);
    const std::string& n = f.family;
    verdicts["solution_dimension_one_" + n] = pass(f.solution_dim == 1);
    verdicts["det_nonzero_" + n] = pass(!f.det.is_zero());
    verdicts["star_symmetric_" + n] = pass(f.star_symmetric);
    auto fails = verify_invariance(f, *fam, radius);
    verdicts["invariance_radius_" + std::to_string(radius) + "_" + n] = pass(fails.empty());
    auto sig = symmetric_signature(specialize(f.q, QuadElem(1)));
    verdicts["signature_31_at_v1_" + n] = pass(sig.first == 3 && sig.second == 1);
    witnesses["q_" + n] = form_entries(f.q);
    witnesses["det_" + n] = f.det.str();
  }

  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  body["verdicts"] = verdicts;
  body["witnesses"] = witnesses;
  return emit(std::move(body), ms, opts);
}

int cmd_specialize(long d, long unit_power, int radius, const OutputOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  json body;
  body["command"] = "specialize";
  body["inputs"] = {{"d", d}, {"unit_power", unit_power}, {"radius", radius}};
  body["upstream"] = {{"verify", require_upstream_pass(opts.cert_dir, "verify")},
                      {"trace-cert", require_upstream_pass(opts.cert_dir, "trace-cert")},
                      {"form", require_upstream_pass(opts.cert_dir, "form")}};

  QuadraticField field(d);  // rejects non-square-free d (input error)
  UnitRecord unit = unit_with_power(d, unit_power);

  json verdicts, witnesses;
  witnesses["fundamental_unit"] = unit.eps.str();
  witnesses["fundamental_unit_norm"] = unit.eps_norm;
  witnesses["u"] = unit.u.str();
  verdicts["unit_tau_inverse"] = pass((unit.u * unit.u.conj()).is_one());
  verdicts["unit_integral"] = pass(field.is_integral(unit.u));

  InvariantForm fphi = solve_invariant_form(RepFamily::phi());
  Mat4<QuadElem> qu = hermitian_specialize(fphi, d, unit.u);
  verdicts["hermitian"] = pass(is_tau_hermitian(qu));
  json qrows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(qu.at(i, j).str());
    qrows.push_back(row);
  }
  witnesses["q_at_u"] = qrows;

  // Specialized corpus invariance: B* Q(u) B = Q(u) with star = tau-transpose.
  {
    QuadElem t0 = unit.u * QuadElem(Rational(1, 2));
    std::array<Mat4<QuadElem>, 4> img;
    for (int i = 0; i < 4; ++i)
      img[static_cast<size_t>(i)] = specialize(RepFamily::phi().image(static_cast<Letter>(i)), t0);
    bool inv_ok = true;
    std::vector<Mat4<QuadElem>> stack{Mat4<QuadElem>::identity()};
    walk_ball(
        radius, [&](Letter l) { stack.push_back(stack.back() * img[static_cast<size_t>(l)]); },
        [&]() { stack.pop_back(); },
        [&](const Word&) {
          if (!inv_ok) return;
          Mat4<QuadElem> bs = stack.back().transposed().map([](const QuadElem& x) { return x.conj(); });
          if (!(bs * qu * stack.back() == qu)) inv_ok = false;
        });
    verdicts["corpus_invariance"] = pass(inv_ok);
  }

  IntegralTraceVerdict traces = certify_integral_traces(d, unit.u, radius, true);
  verdicts["integral_traces"] = pass(traces.pass);
  witnesses["trace_words_checked"] = traces.words_checked;
  witnesses["fully_integral_entry_words"] = traces.fully_integral_entry_words;

  DiagonalizedForm diag = diagonalize(qu, d);
  Mat4<QuadElem> mstar = diag.basis.transposed().map([](const QuadElem& x) { return x.conj(); });
  Mat4<QuadElem> conj = mstar * qu * diag.basis;
  bool diag_ok = true, tau_fixed = true, nonzero_int = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && !conj.at(i, j).is_zero()) diag_ok = false;
  for (size_t i = 0; i < 4; ++i) {
    if (!(conj.at(static_cast<int>(i), static_cast<int>(i)) == diag.diag[i])) diag_ok = false;
    if (!diag.diag[i].is_rational()) tau_fixed = false;
    if (sgn(diag.integer_diag[i]) == 0) nonzero_int = false;
  }
  verdicts["congruence_diagonal_exact"] = pass(diag_ok);
  verdicts["diagonal_tau_fixed"] = pass(tau_fixed);
  verdicts["integer_diagonal_nonzero"] = pass(nonzero_int);
  // Determinant class: prod(Delta) = N(det M) det Q(u).
  QuadElem prod(1);
  for (const auto& x : diag.diag) prod *= x;
  QuadElem dm = det4(diag.basis);
  verdicts["determinant_class"] = pass(prod == dm * dm.conj() * det4(qu));

  json mrows = json::array(), deltas = json::array(), js = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(diag.basis.at(i, j).str());
    mrows.push_back(row);
  }
  for (const auto& x : diag.diag) deltas.push_back(x.str());
  for (const auto& j : diag.integer_diag) js.push_back(j.get_str());
  witnesses["basis_change"] = mrows;
  witnesses["delta"] = deltas;
  witnesses["j_diagonal"] = js;
  int sig_pos = 0, sig_neg = 0;
  for (const auto& j : diag.integer_diag) (sgn(j) > 0 ? sig_pos : sig_neg) += 1;
  witnesses["signature"] = {sig_pos, sig_neg};

  // Density at t = u/2, exact over Q(sqrt(d)).
  {
    QuadElem t0 = unit.u * QuadElem(Rational(1, 2));
    AdjointSpanResult span = adjoint_span_dimension(t0, 6);
    verdicts["adjoint_span_full"] = pass(span.dimension == 225);
    witnesses["adjoint_span_dimension"] = span.dimension;
    witnesses["adjoint_span_modp_certified"] = span.modp_certified;
    verdicts["longitude_inverse_eigenvalue"] = pass(inverse_eigenvalue_check(t0));
  }

  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  body["verdicts"] = verdicts;
  body["witnesses"] = witnesses;
  return emit(std::move(body), ms, opts);
}

int cmd_density(const std::string& t_str, int radius, const OutputOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Rational t0 = rat_parse(t_str);
  if (sgn(t0) == 0) throw CLI::ValidationError("--t must be nonzero");
  json body;
  body["command"] = "density";
  body["inputs"] = {{"t", rat_str(t0)}, {"radius", radius}};
  body["upstream"] = {{"verify", require_upstream_pass(opts.cert_dir, "verify")}};

  json verdicts, witnesses;
  AdjointSpanResult span = adjoint_span_dimension(QuadElem(t0), radius);
  verdicts["adjoint_span_full"] = pass(span.dimension == 225);
  witnesses["adjoint_span_dimension"] = span.dimension;
  witnesses["adjoint_span_words"] = span.words_total;
  witnesses["adjoint_span_modp_certified"] = span.modp_certified;
  // Specialization bounds the function-field rank from below, so full rank
  // at one rational point certifies rank 225 over Q(t): density holds for
  // all but finitely many parameters.
  witnesses["function_field_rank_certified"] = span.dimension == 225;

  verdicts["longitude_inverse_eigenvalue"] = pass(inverse_eigenvalue_check(QuadElem(t0)));
  if (t0 != Rational(1, 2)) {
    auto dims = eigenvector_orbit_dim(t0);
    verdicts["eigenvector_orbit_full"] = pass(dims.first == 4 && dims.second == 4);
    witnesses["eigenvector_orbit_dims"] = {dims.first, dims.second};
  }

  Poly locus = eigenvalue_one_locus(commutator(Word::parse("x^2"), Word::parse("y")));
  json lf = json::array();
  bool only_vvp1 = true;
  for (const auto& f : factor_for_report(locus)) {
    lf.push_back(f.factor.str());
    if (!is_unit_monomial(f.factor) && !(f.factor == Poly({std::vector<QuadElem>{QuadElem(1), QuadElem(1), QuadElem(1)}})))
      only_vvp1 = false;
  }
  witnesses["eigenvalue_one_locus_factors"] = lf;
  verdicts["commutator_locus_v2v1"] = pass(only_vvp1);

  json prox = json::array();
  std::vector<Word> corpus = enumerate_ball(2);
  corpus.push_back(catalog().longitude.longitude);
  corpus.push_back(Word::parse("x y x y^2 x^3 y X Y^2"));
  for (const auto& rep : proximality_scan(corpus, t0)) {
    json row;
    row["word"] = rep.word;
    row["moduli"] = rep.moduli;
    row["error_bounds"] = rep.error_bounds;
    auto tri = [](Tri t) { return t == Tri::yes ? "yes" : t == Tri::no ? "no" : "indeterminate"; };
    row["proximal"] = tri(rep.proximal);
    row["positive_proximal"] = tri(rep.positive_proximal);
    prox.push_back(row);
  }
  witnesses["proximality_table"] = prox;

  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  body["verdicts"] = verdicts;
  body["witnesses"] = witnesses;
  return emit(std::move(body), ms, opts);
}

int cmd_report(const OutputOptions& opts) {
  std::ostringstream os;
  os << "# thinlat pipeline report\n\n";
  bool any = false;
  for (const char* cmd : {"verify", "trace-cert", "form", "specialize", "density"}) {
    auto cert = load_certificate(opts.cert_dir, cmd);
    if (!cert) continue;
    any = true;
    os << render_markdown(*cert) << "\n";
  }
  if (!any) {
    std::cerr << "no certificates found in " << opts.cert_dir << "\n";
    return kExitInputError;
  }
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path);
    out << os.str();
  } else {
    std::cout << os.str();
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for the SL(4) representation pipeline of the figure-eight knot group"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  OutputOptions opts;
  app.add_option("--cert-dir", opts.cert_dir, "Certificate store directory")->capture_default_str();
  app.add_option("--out", opts.out_path, "Also write the certificate to this path");
  app.add_flag("--markdown", opts.markdown, "Render human-readable markdown instead of JSON");

  std::string family = "rho";
  int radius = 4;
  auto* verify = app.add_subcommand("verify", "Relator, longitude, determinant and conjugacy checks");
  verify->add_option("--family", family, "Trace table family to print (rho|phi)")
      ->check(CLI::IsMember({"rho", "phi"}));
  verify->add_option("--radius", radius, "Trace agreement ball radius")->capture_default_str();

  uint64_t seed_a = 0, seed_b = 1;
  int tc_radius = 6;
  auto* tc = app.add_subcommand("trace-cert", "Two-basis trace denominator certificate");
  tc->add_option("--seed-a", seed_a, "Shortlex basis screening seed")->capture_default_str();
  tc->add_option("--seed-b", seed_b, "Randomized basis seed")->capture_default_str();
  tc->add_option("--radius", tc_radius, "Trace corpus radius")->capture_default_str();

  int form_radius = 6;
  auto* form = app.add_subcommand("form", "Invariant Hermitian form certificates");
  form->add_option("--radius", form_radius, "Invariance corpus radius")->capture_default_str();

  long d = 2, unit_power = 1;
  int sp_radius = 6;
  auto* sp = app.add_subcommand("specialize", "Specialize at a positive unit of Q(sqrt(d))");
  sp->add_option("--d", d, "Square-free d of the real quadratic field")->required();
  sp->add_option("--unit-power", unit_power, "Use eps^(2k) as the positive unit")->capture_default_str();
  sp->add_option("--radius", sp_radius, "Corpus radius")->capture_default_str();

  std::string t_str = "1";
  int den_radius = 6;
  auto* den = app.add_subcommand("density", "Adjoint span and spectral density checks");
  den->add_option("--t", t_str, "Rational parameter p/q")->capture_default_str();
  den->add_option("--radius", den_radius, "Ball radius for the adjoint span")->capture_default_str();

  auto* rep = app.add_subcommand("report", "Render all stored certificates as markdown");
  (void)rep;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(family, radius, opts);
    if (tc->parsed()) return cmd_trace_cert(seed_a, seed_b, tc_radius, opts);
    if (form->parsed()) return cmd_form(form_radius, opts);
    if (sp->parsed()) return cmd_specialize(d, unit_power, sp_radius, opts);
    if (den->parsed()) return cmd_density(t_str, den_radius, opts);
    if (rep->parsed()) return cmd_report(opts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}
