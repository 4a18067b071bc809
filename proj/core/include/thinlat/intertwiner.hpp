#pragma once

#include "thinlat/rep.hpp"

#include <optional>

namespace thinlat {

struct Intertwiner {
  Mat4<RatFunc> C;        // rho_{2t}(g) C = C phi_t(g), entries in Q(sqrt(3))(t)
  int nullspace_dim = 0;  // must be 1
  RatFunc det;            // must be nonzero
};

/// Solves the 32-equation linear system for the matrix conjugating phi_t
/// into rho_{2t}. The solution space must be 1-dimensional (irreducibility)
/// with invertible generator; anything else throws.
Intertwiner find_intertwiner();

/// tr rho_{2t}(w) == tr phi_t(w) exactly for every word of length <= radius.
bool traces_agree_at_v_eq_2t(int radius);

}  // namespace thinlat
