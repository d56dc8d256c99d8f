#pragma once

#include <array>
#include <string>

#include "adw/biquat/biquat.hpp"
#include "adw/numerics/cpoly.hpp"

namespace adw {

// Polynomial worldline x^mu(sigma). Coordinates may have complex
// coefficients; degree is capped at 6 per coordinate and at least one
// coordinate must be non-constant.
struct PolyWorldline {
  std::array<CPoly, 4> x;

  int max_degree() const;
  CVec4 position(cplx sigma) const;
  // d x / d sigma
  CVec4 velocity(cplx sigma) const;
  // true when every coefficient is real
  bool is_real(double tol = 1e-12) const;
};

// validates the degree cap and non-constancy
PolyWorldline make_worldline(const std::array<CPoly, 4>& coords);

// same polynomial grammar as everywhere else, parameter variable "s"
PolyWorldline parse_worldline(const std::array<std::string, 4>& exprs);

// Light cone equation in the parameter: the Minkowski square of
// X - x(sigma). Identically zero (observer riding a null worldline)
// raises "observer on worldline".
CPoly lce_polynomial(const PolyWorldline& wl, const SpacetimePoint& X);

}  // namespace adw
