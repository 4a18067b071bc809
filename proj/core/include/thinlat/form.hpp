#pragma once

#include "thinlat/matrix.hpp"
#include "thinlat/quadratic.hpp"
#include "thinlat/rep.hpp"

#include <array>
#include <string>
#include <vector>

namespace thinlat {

/// Invariant form of a family: A* Q A = Q for every image A, where
/// A* = transpose composed with v -> 1/v. Solved as the nullspace of a
/// 32-equation system over the function field; the solution line is
/// 1-dimensional, cleared to Laurent entries, and normalized so Q* = Q,
/// first nonzero entry content 1 with positive leading sign, valuation
/// centered, and signature (3,1) at the v = 1 specialization.
struct InvariantForm {
  std::string family;
  Mat4<LaurentPoly> q;
  int solution_dim = 0;
  LaurentPoly det;
  bool star_symmetric = false;
};

InvariantForm solve_invariant_form(const RepFamily& fam);

/// A* Q A = Q for every word of length <= radius; returns offending words.
std::vector<Word> verify_invariance(const InvariantForm& form, const RepFamily& fam, int radius);

/// Exact Sylvester signature (positives, negatives) of a symmetric matrix
/// over Q(sqrt(m)) embedded via sqrt(m) > 0.
std::pair<int, int> symmetric_signature(const Mat4<QuadElem>& q);

/// Q specialized at a positive unit u of Q(sqrt(d)): tau_d(u) = 1/u, so the
/// star involution becomes transpose composed with tau_d and Q(u) is
/// Hermitian. Throws if u is not an integral unit with u tau(u) = 1.
Mat4<QuadElem> hermitian_specialize(const InvariantForm& form, long d, const QuadElem& u);

bool is_tau_hermitian(const Mat4<QuadElem>& q);

struct DiagonalizedForm {
  Mat4<QuadElem> basis;                 // M, columns are the new basis
  std::array<QuadElem, 4> diag;         // Delta = M* Q M, tau-fixed entries
  std::array<Integer, 4> integer_diag;  // J, squarefree integer kernels
};

/// tau-Hermitian congruence diagonalization (Gram-Schmidt with the
/// e_i + e_j / e_i + sqrt(d) e_j pivot fallback), then integerization by
/// rational squares.
DiagonalizedForm diagonalize(const Mat4<QuadElem>& q, long d);

}  // namespace thinlat
