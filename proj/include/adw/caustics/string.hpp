#pragma once

#include "adw/congruence/genfunc_pair.hpp"

namespace adw {

// Complexified source point of a two-function class. The defining pair of
// conditions can be rewritten as det(Z - Zhat) times a nonsingular factor,
// so the singular locus of the congruence is the (complex) null cone of
// Zhat. rho/sigma are caller-assigned family labels, zero when unused.
struct GeneratingStringPoint {
  Mat2 Zhat;
  double rho = 0.0;
  double sigma = 0.0;
};

// Zhat = -(dPi/dtau)^-1 (dPi/dxi), both derivative matrices taken at
// (xi, tau = Z xi). Independent of xi for affine pairs. Errors with
// "string undefined for this pair" when dPi/dtau is singular.
GeneratingStringPoint generating_string(const GenFuncPair& gf, const Mat2& Z,
                                        const Spinor& xi);

// det(Zhat - Z): vanishes exactly when Z lies on the null cone of Zhat,
// which is the singular-locus condition.
cplx null_cone_check(const Mat2& Zhat, const Mat2& Z);

}  // namespace adw
