#include "thinlat/intertwiner.hpp"

#include "thinlat/catalog.hpp"

namespace thinlat {

Intertwiner find_intertwiner() {
  // rho with v = 2t, phi as printed; unknown C flattened row-major.
  Mat4<LaurentPoly> ax = substitute_v_eq_2t(RepFamily::rho().image(Letter::x));
  Mat4<LaurentPoly> ay = substitute_v_eq_2t(RepFamily::rho().image(Letter::y));
  Mat4<LaurentPoly> bx = RepFamily::phi().image(Letter::x);
  Mat4<LaurentPoly> by = RepFamily::phi().image(Letter::y);

  DMat<RatFunc> sys(32, 16);
  size_t row = 0;
  auto add = [&](const Mat4<LaurentPoly>& a, const Mat4<LaurentPoly>& b) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            RatFunc coef;
            if (l == j) coef += RatFunc::from_laurent(a.at(i, k));
            if (i == k) coef -= RatFunc::from_laurent(b.at(l, j));
            sys.at(row, static_cast<size_t>(4 * k + l)) = coef;
          }
        ++row;
      }
  };
  add(ax, bx);
  add(ay, by);

  auto ns = nullspace(sys);
  Intertwiner out;
  out.nullspace_dim = static_cast<int>(ns.size());
  if (out.nullspace_dim != 1)
    throw std::domain_error("find_intertwiner: solution space dimension " +
                            std::to_string(out.nullspace_dim) + ", expected 1");
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) out.C.at(k, l) = ns[0][static_cast<size_t>(4 * k + l)];
  out.det = det4(out.C);
  if (out.det.is_zero()) throw std::domain_error("find_intertwiner: singular intertwiner");
  return out;
}

bool traces_agree_at_v_eq_2t(int radius) {
  bool ok = true;
  std::vector<Mat4<LaurentPoly>> rs{Mat4<LaurentPoly>::identity()};
  std::vector<Mat4<LaurentPoly>> ps{Mat4<LaurentPoly>::identity()};
  const RepFamily& rho = RepFamily::rho();
  const RepFamily& phi = RepFamily::phi();
  walk_ball(
      radius,
      [&](Letter l) {
        rs.push_back(rs.back() * rho.image(l));
        ps.push_back(ps.back() * phi.image(l));
      },
      [&]() {
        rs.pop_back();
        ps.pop_back();
      },
      [&](const Word&) {
        if (!ok) return;
        LaurentPoly lhs = rs.back().trace().substitute_scaled(QuadElem(2), 't');
        if (!(lhs == ps.back().trace())) ok = false;
      });
  return ok;
}

}  // namespace thinlat
