#include "thinlat/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

namespace thinlat {

namespace {

Fp random_param(std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> dist(2, Fp::P - 2);
  return Fp::raw(dist(rng));
}

bool exact_identity_both(const Word& w) {
  return RepFamily::rho().evaluate(w).is_identity() && RepFamily::phi().evaluate(w).is_identity();
}

Word primary_relator_candidate() {
  Word w = Word::parse("X y x Y");
  Word x = Word::parse("x");
  Word y = Word::parse("y");
  return w * x * w.inverse() * y.inverse();
}

std::vector<Word> rotations_and_inverse(const Word& w) {
  std::vector<Word> out;
  const auto& ls = w.letters();
  for (size_t s = 0; s < ls.size(); ++s) {
    std::vector<Letter> rot(ls.begin() + static_cast<long>(s), ls.end());
    rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<long>(s));
    Word r{std::vector<Letter>(rot)};
    if (r.length() == ls.size()) {
      out.push_back(r);
      out.push_back(r.inverse());
    }
  }
  return out;
}

}  // namespace

std::optional<RelatorResult> discover_relator(int max_len, uint64_t screen_seed) {
  RelatorResult res;
  Word candidate = primary_relator_candidate();
  std::optional<Word> best;
  if (static_cast<int>(candidate.length()) <= max_len && exact_identity_both(candidate)) {
    res.candidate_used = true;
    best = candidate;
    // Conjugates by rotation are relators of the same length; take the least.
    for (const Word& r : rotations_and_inverse(candidate))
      if (r < *best && exact_identity_both(r)) best = r;
  }

  // Screen the ball for anything shortlex-smaller (or for any relator at all
  // when the candidate failed).
  int screen_radius = best ? static_cast<int>(best->length()) : max_len;
  std::mt19937_64 rng(0x7541C0DEull + screen_seed);
  FpRep rho_p(RepFamily::rho(), random_param(rng));
  FpRep phi_p(RepFamily::phi(), random_param(rng));
  std::vector<Word> survivors;
  {
    std::vector<Mat4<Fp>> stack{Mat4<Fp>::identity()};
    walk_ball(
        screen_radius, [&](Letter l) { stack.push_back(stack.back() * rho_p.image(l)); },
        [&]() { stack.pop_back(); },
        [&](const Word& w) {
          ++res.screened_words;
          if (w.is_identity() || !stack.back().is_identity()) return;
          if (phi_p.evaluate(w).is_identity()) survivors.push_back(w);
        });
  }
  res.screen_hits = survivors.size();
  std::sort(survivors.begin(), survivors.end());
  for (const Word& w : survivors) {
    if (best && !(w < *best)) break;
    if (exact_identity_both(w)) {
      best = w;
      break;  // shortlex order: the first exact survivor is least
    }
  }
  if (!best) return std::nullopt;
  res.relator = *best;
  return res;
}

std::optional<LongitudeResult> discover_longitude(int max_len, uint64_t screen_seed) {
  LongitudeResult res;
  std::mt19937_64 rng(0x10461D0DEull + screen_seed);
  Fp t0 = random_param(rng);
  Fp v0 = random_param(rng);
  FpRep phi_p(RepFamily::phi(), t0);
  FpRep rho_p(RepFamily::rho(), v0);
  const Mat4<Fp> mx = phi_p.image(Letter::x);

  // Stage 1: centralizer candidates mod p.
  std::vector<Word> commuting;
  {
    std::vector<Mat4<Fp>> stack{Mat4<Fp>::identity()};
    walk_ball(
        max_len, [&](Letter l) { stack.push_back(stack.back() * phi_p.image(l)); },
        [&]() { stack.pop_back(); },
        [&](const Word& w) {
          ++res.screened_words;
          if (w.is_identity() || w.is_power_of(Letter::x)) return;
          if (stack.back() * mx == mx * stack.back()) commuting.push_back(w);
        });
  }
  res.commuting_candidates = commuting.size();

  // Stage 2: meridian-power correction + char poly screen mod p.
  std::array<Fp, 4> target;
  {
    auto tgt = longitude_char_poly_target();
    for (int i = 0; i < 4; ++i) target[static_cast<size_t>(i)] = eval_fp(tgt[static_cast<size_t>(i)], v0);
  }
  std::set<Word> seen;
  std::vector<Word> candidates;
  Word xw = Word::parse("x");
  for (const Word& u : commuting)
    for (int k = -6; k <= 6; ++k) {
      Word lam = u * xw.pow(k);
      if (lam.is_identity() || lam.is_power_of(Letter::x)) continue;
      if (seen.insert(lam).second) candidates.push_back(lam);
    }
  std::sort(candidates.begin(), candidates.end());

  const auto exact_target = longitude_char_poly_target();
  const Mat4<LaurentPoly> phix = RepFamily::phi().image(Letter::x);
  std::optional<Word> found;
  for (const Word& lam : candidates) {
    if (found && lam.length() > found->length()) break;
    if (char_poly4(rho_p.evaluate(lam)) != target) continue;
    // Exact confirmation.
    Mat4<LaurentPoly> pl = RepFamily::phi().evaluate(lam);
    if (!(pl * phix == phix * pl)) continue;
    if (char_poly4(RepFamily::rho().evaluate(lam)) != exact_target) continue;
    if (!found)
      found = lam;
    else
      res.alternates.push_back(lam);
  }
  if (!found) return std::nullopt;
  res.longitude = *found;
  return res;
}

namespace {

const char* kCatalogCacheName = "catalog-v1.json";

std::optional<WordCatalog> load_cached_catalog() {
  const char* dir = std::getenv("THINLAT_CACHE");
  if (!dir || !*dir) return std::nullopt;
  std::filesystem::path path = std::filesystem::path(dir) / kCatalogCacheName;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    WordCatalog cat;
    cat.meridian = Word::parse("x");
    cat.relator.relator = Word::parse(j.at("relator").get<std::string>());
    cat.longitude.longitude = Word::parse(j.at("longitude").get<std::string>());
    for (const auto& a : j.value("alternates", nlohmann::json::array()))
      cat.longitude.alternates.push_back(Word::parse(a.get<std::string>()));
    // Cached words are certified again before use.
    if (!exact_identity_both(cat.relator.relator)) return std::nullopt;
    Mat4<LaurentPoly> pl = RepFamily::phi().evaluate(cat.longitude.longitude);
    const Mat4<LaurentPoly> phix = RepFamily::phi().image(Letter::x);
    if (!(pl * phix == phix * pl)) return std::nullopt;
    if (char_poly4(RepFamily::rho().evaluate(cat.longitude.longitude)) != longitude_char_poly_target())
      return std::nullopt;
    return cat;
  } catch (...) {
    return std::nullopt;
  }
}

void store_cached_catalog(const WordCatalog& cat) {
  const char* dir = std::getenv("THINLAT_CACHE");
  if (!dir || !*dir) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  nlohmann::json j;
  j["relator"] = cat.relator.relator.str();
  j["longitude"] = cat.longitude.longitude.str();
  nlohmann::json alts = nlohmann::json::array();
  for (const Word& a : cat.longitude.alternates) alts.push_back(a.str());
  j["alternates"] = alts;
  std::ofstream out(std::filesystem::path(dir) / kCatalogCacheName);
  out << j.dump(2) << "\n";
}

WordCatalog build_catalog() {
  if (auto cached = load_cached_catalog()) return *cached;
  WordCatalog cat;
  cat.meridian = Word::parse("x");
  auto rel = discover_relator(12);
  if (!rel) throw std::runtime_error("catalog: no relator found within length 12");
  cat.relator = *rel;
  auto lon = discover_longitude(10);
  if (!lon) throw std::runtime_error("catalog: no longitude found within length 10");
  cat.longitude = *lon;
  store_cached_catalog(cat);
  return cat;
}

}  // namespace

const WordCatalog& catalog() {
  static const WordCatalog cat = build_catalog();
  return cat;
}

bool peripheral_commutes() {
  const WordCatalog& cat = catalog();
  Mat4<LaurentPoly> a = RepFamily::phi().evaluate(cat.meridian);
  Mat4<LaurentPoly> b = RepFamily::phi().evaluate(cat.longitude.longitude);
  return a * b == b * a;
}

bool peripheral_commutes_rho() {
  const WordCatalog& cat = catalog();
  Mat4<LaurentPoly> a = RepFamily::rho().evaluate(cat.meridian);
  Mat4<LaurentPoly> b = RepFamily::rho().evaluate(cat.longitude.longitude);
  return a * b == b * a;
}

}  // namespace thinlat
