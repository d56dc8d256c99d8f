#pragma once

#include <functional>
#include <vector>

#include "adw/congruence/branch.hpp"
#include "adw/congruence/genfunc.hpp"
#include "adw/congruence/genfunc_pair.hpp"

namespace adw {

// Branch-merging indicator of the reduced family at X, continuous across
// degree drops:
//   full degree      -> classical discriminant
//   one-step drop    -> lc^2 * discriminant of the lower-degree polynomial
//                       (the exact limit of the full-degree discriminant)
//   deeper drop      -> 0 (a multiple branch at infinity)
//   degenerate point -> 0 (all branches collapse)
// Families of nominal degree < 2 cannot merge branches; unit value returned.
cplx caustic_value(const GenFuncProjective& gf, const SpacetimePoint& X);

// Merging indicator for the two-function class: det of the sensitivity
// matrix P = dPi/dxi + dPi/dtau Z. Affine pairs have constant derivative
// matrices and evaluate without solving; otherwise the product of det P
// over all isolated solutions is used (1 when no solution exists).
cplx pair_caustic_value(const GenFuncPair& gf, const SpacetimePoint& X,
                        const Tolerances& tol = default_tol());

struct LocusPoint {
  double x = 0.0, y = 0.0, z = 0.0;
  double residual = 0.0;  // |field value| after refinement
};

struct LocusFrame {
  double t = 0.0;
  std::vector<LocusPoint> points;
};

using LocusField = std::function<cplx(const SpacetimePoint&)>;

// Zero set of a complex field over a spatial slice (codimension 2 generically).
// Seeds at local minima of |field| and at cells where both Re and Im change
// sign, then damped Gauss-Newton refinement down to |field| <= locus_tol;
// non-converging seeds and points leaving the padded grid box are dropped,
// survivors deduplicated at half a grid spacing.
LocusFrame extract_locus_field(const LocusField& field, const SliceGrid& grid,
                               const Tolerances& tol = default_tol());

LocusFrame extract_locus(const GenFuncProjective& gf, const SliceGrid& grid,
                         const Tolerances& tol = default_tol());
LocusFrame extract_locus_pair(const GenFuncPair& gf, const SliceGrid& grid,
                              const Tolerances& tol = default_tol());

// One frame per time sample, t running over nt values from t0 to t1.
std::vector<LocusFrame> track_locus(const GenFuncProjective& gf, SliceGrid grid,
                                    double t0, double t1, int nt,
                                    const Tolerances& tol = default_tol());

}  // namespace adw
