#pragma once

#include <array>
#include <string>
#include <vector>

#include "adw/core/tolerances.hpp"
#include "adw/numerics/multipoly.hpp"

namespace adw {

// Three polynomial constraints F_a(t, x, y, z), total degree <= 4 each,
// cutting out a generically finite point set at fixed t.
struct ImplicitUWL {
  std::array<MultiPoly, 3> F;  // variables ordered (t, x, y, z)
};

// validates variable count and the degree cap
ImplicitUWL make_implicit(const std::array<MultiPoly, 3>& F);
ImplicitUWL parse_implicit(const std::array<std::string, 3>& exprs);

struct ImplicitRoot {
  std::array<cplx, 3> xyz{};
  char cls = 'R';  // R when every coordinate is real within eps_real
  double residual = 0.0;
};

// Solves the system at fixed t by iterated resultant elimination
// (z, then y), univariate rooting, and back-substitution; every candidate
// is kept only if all three residuals stay within the verification budget.
// Degenerate eliminations (identically zero resultant, or an empty chain)
// raise "non-generic system".
std::vector<ImplicitRoot> implicit_roots(const ImplicitUWL& sys, double t,
                                         double eps_real = 1e-9,
                                         const Tolerances& tol = default_tol());

// Locates a real-complex transition of the root set inside [t0, t1] by
// bisection on the discriminant of the eliminated coordinate polynomial.
// Requires a sign change across the interval.
double implicit_transition(const ImplicitUWL& sys, double t0, double t1,
                           double t_tol = 1e-9,
                           const Tolerances& tol = default_tol());

}  // namespace adw
