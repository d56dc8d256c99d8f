#include "adw/fields/kerr_schild.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "adw/core/error.hpp"
#include "adw/core/types.hpp"

namespace adw {

KerrSchildMetric kerr_schild(double H, const Vec4d& k) {
  double kk = 0.0, norm2 = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    kk += kEta[mu] * k[mu] * k[mu];
    norm2 += k[mu] * k[mu];
  }
  if (std::abs(kk) > 1e-10 * std::max(1.0, norm2))
    throw NumericalError("kerr_schild requires a null covector");

  KerrSchildMetric out;
  out.H = H;
  out.k = k;
  Eigen::Matrix4d g;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      out.g[mu][nu] = (mu == nu ? kEta[mu] : 0.0) + H * k[mu] * k[nu];
      g(mu, nu) = out.g[mu][nu];
    }
  out.det = g.determinant();
  return out;
}

}  // namespace adw
