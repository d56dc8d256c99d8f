#pragma once

#include "adw/congruence/residuals.hpp"

namespace adw {

// Residuals of the paired first-order system in spinor coordinates,
//   res[0] = d_wb psi1 - d_u psi2,   res[1] = d_v psi1 - d_w psi2,
// with the spinor derivatives chained from cartesian Richardson differences:
// d_u = (d_t + d_z)/2, d_v = (d_t - d_z)/2, d_w = (d_x - i d_y)/2,
// d_wb = (d_x + i d_y)/2.
std::array<cplx, 2> weyl_residual(const ScalarSampler& psi1,
                                  const ScalarSampler& psi2, const Vec4d& X,
                                  double step_scale = 1e-3);

}  // namespace adw
