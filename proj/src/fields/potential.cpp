#include "adw/fields/potential.hpp"

#include <algorithm>
#include <cmath>

#include "adw/core/error.hpp"

namespace adw {

PotentialMatrix phi_from_derivs(cplx G, const CVec4& dG) {
  cplx du = 0.5 * (dG[0] + dG[3]);
  cplx dv = 0.5 * (dG[0] - dG[3]);
  cplx dw = 0.5 * (dG[1] - kI * dG[2]);
  cplx dwb = 0.5 * (dG[1] + kI * dG[2]);

  // least squares for Phi^1_B over the two incidence equations per column:
  // Phi^1_0 (1, G) = (du, dw),  Phi^1_1 (1, G) = (dwb, dv)
  double xin = 1.0 + std::norm(G);
  cplx p0 = (du + std::conj(G) * dw) / xin;
  cplx p1 = (dwb + std::conj(G) * dv) / xin;

  double defect = std::max({std::abs(p0 - du), std::abs(p0 * G - dw),
                            std::abs(p1 - dwb), std::abs(p1 * G - dv)});
  double scale = 0.0;
  for (const cplx& d : dG) scale = std::max(scale, std::abs(d));

  PotentialMatrix out;
  out.phi.m[1][0] = p0;
  out.phi.m[1][1] = p1;
  out.A = decode_vector(out.phi);
  out.consistency = defect / (1.0 + scale);
  return out;
}

PotentialMatrix phi_from_branch(const ScalarSampler& G, const Vec4d& X,
                                double step_scale, const Tolerances& tol) {
  CVec4 dG;
  for (int mu = 0; mu < 4; ++mu) dG[mu] = fd_partial(G, X, mu, step_scale, true);
  PotentialMatrix out = phi_from_derivs(G(X), dG);
  if (out.consistency > tol.congruence_reject)
    throw NumericalError("not a congruence");
  return out;
}

}  // namespace adw
