#include "adw/fields/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace adw {

Curvature matrix_curvature(const MatrixSampler& phi, const SpinorSampler& xi,
                           const Vec4d& X, double step_scale) {
  Mat2 D[4];
  for (int mu = 0; mu < 4; ++mu)
    D[mu] = fd_partial(phi, X, mu, step_scale, true);
  Mat2 Phi0 = phi(X);
  Mat2 om[4];
  for (int mu = 0; mu < 4; ++mu) om[mu] = Phi0 * sigma_tilde(mu);

  Curvature out;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      Mat2 r = D[mu] * sigma_tilde(nu) - D[nu] * sigma_tilde(mu) -
               (om[mu] * om[nu] - om[nu] * om[mu]);
      out.R[mu][nu] = r;
      out.R[nu][mu] = r * cplx(-1.0);
    }

  Spinor s = xi(X);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      const Mat2& r = out.R[mu][nu];
      for (int a = 0; a < 2; ++a) {
        cplx v = r.m[a][0] * s[0] + r.m[a][1] * s[1];
        out.xi_contraction = std::max(out.xi_contraction, std::abs(v));
      }
    }
  return out;
}

TwoForm curvature_trace(const Curvature& R) {
  TwoForm F;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      F.set(mu, nu, 0.5 * R.R[mu][nu].trace());
  return F;
}

}  // namespace adw
