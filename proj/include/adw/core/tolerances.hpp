#pragma once

namespace adw {

// Every numerical threshold used across the library, in one record.
// Scales marked *_scale multiply a problem-size factor at the point of use.
struct Tolerances {
  // roots: residual bound for simple roots is root_residual_scale*(1+max|coeff|)
  double root_residual_scale = 1e-10;
  // roots: cluster radius for multiplicity detection is cluster_radius_scale*(1+|root|)
  double cluster_radius_scale = 1e-6;
  // roots: leading coefficients below infinity_lc_scale*max|coeff| count as roots at infinity
  double infinity_lc_scale = 1e-12;
  // root_track: trajectories closer than this are collision candidates
  double collision_eps = 1e-5;
  // caustics: extracted locus points must satisfy |disc| <= locus_tol
  double locus_tol = 1e-8;
  // uwl: |Im sigma| <= real_class_eps*(1+|sigma|) classifies a duplicon as R
  double real_class_eps = 1e-9;
  // finite differences: default step is fd_step_scale*(1+|X|)
  double fd_step_scale = 1e-3;
  // congruence: solve_bispinor solutions must satisfy |Pi^C| <= bispinor_tol
  double bispinor_tol = 1e-9;
  // congruence: spinor_gradient requires |det P| > caustic_det_scale*|P|^2
  double caustic_det_scale = 1e-10;
  // biquat: |det S - 1| below this passes the unimodularity check
  double unimodular_tol = 1e-10;
  // biquat: hermiticity check tolerance for point_of_hermitian
  double hermitian_tol = 1e-12;
  // fields: consistency residual above this is "not a congruence"
  double congruence_reject = 1e-2;
  // rank check: singular values below rank_sv_scale*sigma_max are zero
  double rank_sv_scale = 1e-7;
};

inline const Tolerances& default_tol() {
  static const Tolerances t{};
  return t;
}

}  // namespace adw
