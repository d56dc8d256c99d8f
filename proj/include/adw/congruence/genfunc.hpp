#pragma once

#include <string>

#include "adw/biquat/biquat.hpp"
#include "adw/core/tolerances.hpp"
#include "adw/numerics/multipoly.hpp"
#include "adw/numerics/roots.hpp"

namespace adw {

// Generating function of a projective congruence class: a polynomial in
// G and the two bound twistor components t1 = w G + u, t2 = v G + wb.
// Reduction at a spacetime point yields a univariate polynomial whose roots
// are the congruence branches (stereographic ratio G = xi^1/xi^0).
class GenFuncProjective {
 public:
  // variable order (G, t1, t2); caps: deg_G <= 8, total twistor degree <= 6
  explicit GenFuncProjective(MultiPoly poly);
  // text form over variables G, t1, t2
  static GenFuncProjective parse(const std::string& text);
  // G*t1 - t2, the axially symmetric stationary class
  static GenFuncProjective static_axisymmetric();

  const MultiPoly& poly() const { return poly_; }
  // degree in G of the reduced polynomial at a generic point
  int nominal_degree() const { return nominal_; }

  // substitute t1, t2 at X; error "degenerate point" if identically zero
  CPoly reduce_at(const SpacetimePoint& X) const;
  RootSet solve_branches(const SpacetimePoint& X,
                         const Tolerances& tol = default_tol()) const;

 private:
  MultiPoly poly_;   // vars (G, t1, t2)
  int nominal_ = 0;
};

// Value and first derivatives of an implicit branch with respect to the
// spinor coordinates (u, v, w, wb), from the analytic partials of the
// generating function. Errors with "caustic point" where dp/dG vanishes.
struct ImplicitDerivs {
  cplx G{};
  cplx du{}, dv{}, dw{}, dwb{};
};

ImplicitDerivs branch_derivs(const GenFuncProjective& gf, const SpacetimePoint& X,
                             cplx G, const Tolerances& tol = default_tol());

// Cartesian gradient (d/dt, d/dx, d/dy, d/dz) of the same branch.
CVec4 branch_gradient(const ImplicitDerivs& d);

}  // namespace adw
