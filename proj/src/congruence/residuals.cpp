#include "adw/congruence/residuals.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace adw {

namespace {

struct SpinorDerivs {
  cplx du, dv, dw, dwb;
};

SpinorDerivs spinor_derivs_of_cartesian(const std::array<cplx, 4>& g) {
  // inverts u = t+z, v = t-z, w = x+iy, wb = x-iy
  SpinorDerivs d;
  d.du = 0.5 * (g[0] + g[3]);
  d.dv = 0.5 * (g[0] - g[3]);
  d.dw = 0.5 * (g[1] - kI * g[2]);
  d.dwb = 0.5 * (g[1] + kI * g[2]);
  return d;
}

std::array<CVec4, 3> twistor_jacobian(const GenFuncProjective& gf,
                                      const SpacetimePoint& X, cplx G,
                                      const Tolerances& tol) {
  ImplicitDerivs d = branch_derivs(gf, X, G, tol);
  CVec4 gG = branch_gradient(d);
  SpinorCoords s = spinor_coords(X);
  // t1 = w G + u, t2 = v G + wb with coordinate dependence of u,v,w,wb
  CVec4 g1 = {s.w * gG[0] + 1.0, s.w * gG[1] + G, s.w * gG[2] + kI * G,
              s.w * gG[3] + 1.0};
  CVec4 g2 = {s.v * gG[0] + G, s.v * gG[1] + 1.0, s.v * gG[2] - kI,
              s.v * gG[3] - G};
  return {gG, g1, g2};
}

}  // namespace

std::array<cplx, 2> sfc_residual(const GenFuncProjective& gf,
                                 const SpacetimePoint& X, cplx G,
                                 const Tolerances& tol) {
  ImplicitDerivs d = branch_derivs(gf, X, G, tol);
  return {G * d.du - d.dw, G * d.dwb - d.dv};
}

std::array<cplx, 2> sfc_residual_fd(const ScalarSampler& G, const Vec4d& X,
                                    double step_scale) {
  auto grad = fd_gradient(G, X, step_scale);
  SpinorDerivs d = spinor_derivs_of_cartesian(grad);
  cplx g = G(X);
  return {g * d.du - d.dw, g * d.dwb - d.dv};
}

cplx scalar_pde_residual(const ScalarSampler& f, const Vec4d& X, PdeKind kind,
                         double step_scale) {
  if (kind == PdeKind::wave) return fd_dalembert(f, X, step_scale);
  auto g = fd_gradient(f, X, step_scale);
  return g[0] * g[0] - g[1] * g[1] - g[2] * g[2] - g[3] * g[3];
}

int twistor_rank_check(const GenFuncProjective& gf, const SpacetimePoint& X,
                       cplx G, const Tolerances& tol) {
  auto J = twistor_jacobian(gf, X, G, tol);
  Eigen::Matrix<std::complex<double>, 3, 4> M;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) M(r, c) = J[r][c];
  Eigen::JacobiSVD<Eigen::Matrix<std::complex<double>, 3, 4>> svd(M);
  auto sv = svd.singularValues();
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > tol.rank_sv_scale * sv(0)) ++rank;
  return rank;
}

std::array<cplx, 6> twistor_gradient_products(const GenFuncProjective& gf,
                                              const SpacetimePoint& X, cplx G,
                                              const Tolerances& tol) {
  auto J = twistor_jacobian(gf, X, G, tol);
  return {mdot(J[0], J[0]), mdot(J[0], J[1]), mdot(J[0], J[2]),
          mdot(J[1], J[1]), mdot(J[1], J[2]), mdot(J[2], J[2])};
}

}  // namespace adw
