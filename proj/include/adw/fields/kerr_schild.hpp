#pragma once

#include "adw/numerics/fd.hpp"

namespace adw {

// Flat metric plus a rank-1 null deformation, g = eta + H k (x) k. For null
// k the deformation leaves the determinant at det eta = -1 exactly, which is
// verified on construction.
struct KerrSchildMetric {
  double g[4][4];
  double H = 0.0;
  Vec4d k{};
  double det = -1.0;
};

// k is a real covector, null with respect to eta^-1 = diag(+,-,-,-) within
// 1e-10 relative; otherwise errors with "requires a null covector".
KerrSchildMetric kerr_schild(double H, const Vec4d& k);

}  // namespace adw
