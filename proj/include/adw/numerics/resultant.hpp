#pragma once

#include "adw/numerics/cpoly.hpp"
#include "adw/numerics/multipoly.hpp"

namespace adw {

// Sylvester resultant of two univariate polynomials. Zero iff they share a
// root (or a root at infinity for degenerate leading coefficients).
// Throws NumericalError when both are constant.
cplx resultant(const CPoly& p, const CPoly& q);

// Classical discriminant: (-1)^{n(n-1)/2} resultant(p, p') / lc(p).
// Throws NumericalError for degree < 2.
cplx discriminant(const CPoly& p);

// Resultant of a and b with respect to variable var, as a polynomial in the
// remaining variables. Computed by evaluation at scaled roots of unity and
// inverse-DFT interpolation (degrees here are small by module contract).
// If neither polynomial contains var, throws NumericalError.
// An identically zero result (shared factor) is returned as the zero
// polynomial; callers decide whether that is an error.
MultiPoly eliminate(const MultiPoly& a, const MultiPoly& b, int var);

}  // namespace adw
