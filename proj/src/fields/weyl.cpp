#include "adw/fields/weyl.hpp"

#include "adw/numerics/fd.hpp"

namespace adw {

std::array<cplx, 2> weyl_residual(const ScalarSampler& psi1,
                                  const ScalarSampler& psi2, const Vec4d& X,
                                  double step_scale) {
  CVec4 d1, d2;
  for (int mu = 0; mu < 4; ++mu) {
    d1[mu] = fd_partial(psi1, X, mu, step_scale, true);
    d2[mu] = fd_partial(psi2, X, mu, step_scale, true);
  }
  cplx d1_wb = 0.5 * (d1[1] + kI * d1[2]);
  cplx d1_v = 0.5 * (d1[0] - d1[3]);
  cplx d2_u = 0.5 * (d2[0] + d2[3]);
  cplx d2_w = 0.5 * (d2[1] - kI * d2[2]);
  return {d1_wb - d2_u, d1_v - d2_w};
}

}  // namespace adw
