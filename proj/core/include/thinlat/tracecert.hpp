#pragma once

#include "thinlat/matrix.hpp"
#include "thinlat/rep.hpp"
#include "thinlat/word.hpp"

#include <string>
#include <vector>

namespace thinlat {

/// 16 group words whose images span M(4) over the function field.
/// words[0] is the identity; the Gram matrix tr(g_i g_j) is certified
/// invertible by an exact fraction-free determinant.
struct Basis16 {
  std::vector<Word> words;
  std::vector<Mat4<LaurentPoly>> mats;
  std::vector<LaurentPoly> gram;  // row-major 16x16, traces tr(g_i g_j)

  // Exact inverse data: gram = v^{-vshift} * G with G polynomial, and
  // G * inv_num = inv_den * I.
  DMat<Poly> inv_num;
  Poly inv_den;
  long vshift = 0;

  /// (gram^{-1})_{jk} as a rational function.
  RatFunc gram_inv(size_t j, size_t k) const;
};

enum class BasisStrategy { shortlex, randomized };

/// Greedy independent-image search over the radius-5 ball (numeric rank
/// screening mod p, exact Gram certificate afterwards). Deterministic for a
/// fixed seed; the shortlex strategy ignores the seed except for the
/// screening point.
Basis16 find_basis(uint64_t seed, BasisStrategy strategy, int pool_radius = 5);

struct DualBasis {
  std::vector<Mat4<RatFunc>> mats;  // tr(g_i g_j*) = delta_ij
};

DualBasis dual_basis(const Basis16& b);

/// Regular-representation matrix alpha(gamma):
/// alpha_{ij} = tr(g_j . gamma . g_i*), exact.
DMat<RatFunc> regular_rep(const Basis16& b, const Word& gamma);

struct DenominatorReport {
  std::string basis_label;
  std::vector<Word> words;
  std::vector<Poly> factors;  // monic squarefree factors, deduped, sorted
  bool only_v_and_low_degree = true;
};

/// Denominator factors over all alpha entries for the four generator
/// letters x, x^-1, y, y^-1.
DenominatorReport denominator_report(const Basis16& b, const std::string& label);

struct TraceCertificate {
  bool pass = false;
  DenominatorReport report_a, report_b;
  std::vector<Poly> intersection_non_v;  // must be empty
  size_t corpus_words = 0;
  bool corpus_integer_laurent = false;  // every trace in Z[v, 1/v]
  std::vector<std::string> failures;
};

/// Lemma-style two-basis certificate: the non-monomial denominator factor
/// sets must be disjoint, and every trace in the radius-`corpus_radius`
/// ball must be a Laurent polynomial with integer coefficients.
TraceCertificate certify_traces(const DenominatorReport& a, const DenominatorReport& b,
                                int corpus_radius);

/// Convenience: build the two default bases (shortlex, randomized) and
/// certify. The randomized basis is redrawn until its non-v factors are
/// disjoint from the shortlex ones.
TraceCertificate default_trace_certificate(uint64_t seed_a, uint64_t seed_b, int corpus_radius);

/// Traces of all words of length <= radius under a family, exact.
std::vector<std::pair<Word, LaurentPoly>> ball_traces(const RepFamily& fam, int radius);

}  // namespace thinlat
