#pragma once

#include "adw/biquat/biquat.hpp"
#include "adw/congruence/residuals.hpp"
#include "adw/core/tolerances.hpp"

namespace adw {

// Potential matrix of a congruence branch in the gauge xi = (1, G), with the
// equivalent 4-potential components A_mu = tr(Phi sigma~_mu)/2. The defining
// system d^D_B G = Phi^1_B xi^D is overdetermined (four equations, two
// unknowns); consistency is the worst least-squares defect relative to the
// gradient scale, zero exactly when G is shear-free.
struct PotentialMatrix {
  Mat2 phi;
  CVec4 A{};
  double consistency = 0.0;
};

// assembly from the branch value and its cartesian gradient (d_t,d_x,d_y,d_z)
PotentialMatrix phi_from_derivs(cplx G, const CVec4& dG);

// gradient measured by Richardson-extrapolated central differences;
// errors with "not a congruence" when consistency exceeds congruence_reject
PotentialMatrix phi_from_branch(const ScalarSampler& G, const Vec4d& X,
                                double step_scale = 1e-3,
                                const Tolerances& tol = default_tol());

}  // namespace adw
