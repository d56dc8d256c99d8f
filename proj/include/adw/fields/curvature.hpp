#pragma once

#include "adw/fields/em.hpp"

namespace adw {

using SpinorSampler = std::function<Spinor(const Vec4d&)>;

// Matrix curvature of the connection omega_mu = Phi sigma~_mu:
//   R_mu_nu = d_mu omega_nu - d_nu omega_mu - [omega_mu, omega_nu].
// For a congruence potential the branch spinor is covariantly constant,
// d_mu xi = omega_mu xi, so R_mu_nu xi = 0 identically.
struct Curvature {
  Mat2 R[4][4];                 // antisymmetric in (mu, nu)
  double xi_contraction = 0.0;  // max component of R_mu_nu xi(X)
};

Curvature matrix_curvature(const MatrixSampler& phi, const SpinorSampler& xi,
                           const Vec4d& X, double step_scale = 1e-3);

// (1/2) tr R_mu_nu; the commutator is traceless, so this equals the
// curl of A_mu = tr(Phi sigma~_mu)/2 and reproduces em_field_I.
TwoForm curvature_trace(const Curvature& R);

}  // namespace adw
