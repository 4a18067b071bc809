#pragma once

#include "thinlat/rep.hpp"
#include "thinlat/word.hpp"

#include <optional>
#include <vector>

namespace thinlat {

/// Prefix-sharing evaluation over the reduced ball: one matrix product per
/// node. visit(word, image) runs for every word of length <= radius.
template <class T, class ImageFn, class VisitFn>
void walk_ball_images(int radius, const Mat4<T>& identity_mat, ImageFn image, VisitFn visit) {
  std::vector<Mat4<T>> stack{identity_mat};
  walk_ball(
      radius, [&](Letter l) { stack.push_back(stack.back() * image(l)); },
      [&]() { stack.pop_back(); },
      [&](const Word& w) { visit(w, stack.back()); });
}

struct RelatorResult {
  Word relator;
  bool candidate_used = false;   // primary candidate verified directly
  size_t screened_words = 0;     // ball size scanned mod p
  size_t screen_hits = 0;        // words surviving the numeric screen
};

/// Shortlex-least nontrivial word mapping to the exact identity under both
/// families. The candidate w x w^-1 y^-1 with w = x^-1 y x y^-1 is tried
/// first; the ball is then screened mod p (both families at random
/// parameters) up to the candidate length, or up to max_len when the
/// candidate fails, and survivors are confirmed symbolically in shortlex
/// order. Returns nullopt when nothing verifies within max_len.
std::optional<RelatorResult> discover_relator(int max_len, uint64_t screen_seed = 0);

struct LongitudeResult {
  Word longitude;
  std::vector<Word> alternates;  // same-length exact matches
  size_t screened_words = 0;
  size_t commuting_candidates = 0;
};

/// Word commuting with the meridian x under phi (exact) whose rho image has
/// characteristic polynomial (Q - v)^3 (Q - v^-3) (exact). Candidates are
/// centralizer words from the ball, corrected by meridian powers, screened
/// numerically before exact confirmation.
std::optional<LongitudeResult> discover_longitude(int max_len, uint64_t screen_seed = 0);

struct WordCatalog {
  Word meridian;  // x
  RelatorResult relator;
  LongitudeResult longitude;
};

/// Builds (or loads from the THINLAT_CACHE directory, re-verifying) the
/// catalog of distinguished words. Throws if discovery fails.
const WordCatalog& catalog();

/// Exact commutation of phi(x) and phi(longitude).
bool peripheral_commutes();
/// Same statement evaluated in the rho family (conjugation invariance).
bool peripheral_commutes_rho();

}  // namespace thinlat
