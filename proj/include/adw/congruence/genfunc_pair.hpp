#pragma once

#include <string>
#include <vector>

#include "adw/biquat/biquat.hpp"
#include "adw/core/tolerances.hpp"
#include "adw/numerics/multipoly.hpp"

namespace adw {

// Two polynomial conditions on the full (unprojectivized) spinor: each
// component is a polynomial in (xi0, xi1, tau0, tau1), solved jointly after
// binding tau = Z xi at a (possibly complex) point Z. Solutions fix both
// spinor components, not just their ratio.
class GenFuncPair {
 public:
  // caps: per-component total degree <= 6, neither identically zero
  GenFuncPair(MultiPoly p1, MultiPoly p2);
  static GenFuncPair parse(const std::string& f1, const std::string& f2);
  // tau - c: congruence of the null cone of a (complex) vertex
  static GenFuncPair constant_twistor(const Spinor& c);
  // tau - Z0 xi: null cone congruence with vertex Z0
  static GenFuncPair point_twistor(const Mat2& Z0);

  const MultiPoly& component(int c) const;

  // all isolated solutions xi with |Pi(xi, Z xi)| below bispinor_tol;
  // errors with "non-isolated" when the solution set has positive dimension
  std::vector<Spinor> solve_bispinor(const Mat2& Z,
                                     const Tolerances& tol = default_tol()) const;

 private:
  MultiPoly p_[2];
};

// Analytic point derivatives of a solved spinor. The gradient factors
// through a 2x2 matrix: d xi^E / d Z^B_D = phi(E,B) * xi^D.
struct SpinorGradient {
  std::array<Mat2, 2> dxi;  // dxi[E].m[B][D] = d xi^E / d Z^B_D
  Mat2 phi;                 // phi(E,B)
  Mat2 P;                   // sensitivity matrix, det P -> 0 at caustics
};

// Errors with "caustic point" when |det P| <= caustic_det_scale * |P|^2.
SpinorGradient spinor_gradient(const GenFuncPair& gf, const Mat2& Z,
                               const Spinor& xi,
                               const Tolerances& tol = default_tol());

}  // namespace adw
