#pragma once

#include "adw/fields/em.hpp"

namespace adw {

using FieldStrengthSampler = TwoFormSampler;

// (1/4pi) times the flux of the electric part through the sphere
// |x - center| = radius at time center[0]. Quadrature is product
// Gauss-Legendre in cos(theta) by trapezoid in phi (2*order nodes), exact
// for smooth fields at the default order. The real part is the electric
// charge, the imaginary part the magnetic charge of the complexified field.
// Sampler failures (e.g. a singularity inside the stencil) propagate.
cplx charge_flux(const FieldStrengthSampler& F, const Vec4d& center,
                 double radius, int order = 32);

// Gauss-Legendre nodes and weights on [-1, 1]
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace adw
