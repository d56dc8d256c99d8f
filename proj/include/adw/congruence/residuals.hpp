#pragma once

#include <array>
#include <functional>

#include "adw/congruence/genfunc.hpp"
#include "adw/numerics/fd.hpp"

namespace adw {

// scalar field sampled over (t, x, y, z)
using ScalarSampler = std::function<cplx(const Vec4d&)>;

// Shear-free residuals of a branch in the gauge xi = (1, G):
//   res[0] = G d_u G - d_w G,  res[1] = G d_wb G - d_v G.
// Both vanish identically on branches of a generating function; the sampler
// variant measures them by central differences for arbitrary fields.
std::array<cplx, 2> sfc_residual(const GenFuncProjective& gf,
                                 const SpacetimePoint& X, cplx G,
                                 const Tolerances& tol = default_tol());
std::array<cplx, 2> sfc_residual_fd(const ScalarSampler& G, const Vec4d& X,
                                    double step_scale);

enum class PdeKind { eikonal, wave };

// eikonal: eta^{mu nu} d_mu f d_nu f (complex squares, signature +---)
// wave:    d_tt f - d_xx f - d_yy f - d_zz f
cplx scalar_pde_residual(const ScalarSampler& f, const Vec4d& X, PdeKind kind,
                         double step_scale);

// Rank of the 3x4 Jacobian of (G, t1, t2) over (t,x,y,z); 2 off caustics.
int twistor_rank_check(const GenFuncProjective& gf, const SpacetimePoint& X,
                       cplx G, const Tolerances& tol = default_tol());

// All six Minkowski dot products among the gradients of (G, t1, t2),
// order: GG, G t1, G t2, t1 t1, t1 t2, t2 t2.
std::array<cplx, 6> twistor_gradient_products(const GenFuncProjective& gf,
                                              const SpacetimePoint& X, cplx G,
                                              const Tolerances& tol = default_tol());

}  // namespace adw
