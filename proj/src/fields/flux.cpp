#include "adw/fields/flux.hpp"

#include <cmath>

namespace adw {

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton from the Chebyshev-like initial guess; converges in a handful
    // of steps for any n used here
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

cplx charge_flux(const FieldStrengthSampler& F, const Vec4d& center,
                 double radius, int order) {
  std::vector<double> nodes, weights;
  gauss_legendre(order, nodes, weights);
  int nphi = 2 * order;
  double wphi = 2.0 * kPi / nphi;

  cplx sum = 0.0;
  for (int i = 0; i < order; ++i) {
    double c = nodes[i], s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int j = 0; j < nphi; ++j) {
      double phi = wphi * j;
      double n[3] = {s * std::cos(phi), s * std::sin(phi), c};
      Vec4d x = {center[0], center[1] + radius * n[0],
                 center[2] + radius * n[1], center[3] + radius * n[2]};
      EHParts p = eh_decompose(F(x));
      sum += weights[i] * wphi * (p.E[0] * n[0] + p.E[1] * n[1] + p.E[2] * n[2]);
    }
  }
  return sum * (radius * radius / (4.0 * kPi));
}

}  // namespace adw
