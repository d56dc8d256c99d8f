#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "adw/congruence/genfunc.hpp"

namespace adw {

// Rectangular spatial grid at a fixed time slice.
struct SliceGrid {
  double t = 0.0;
  std::array<double, 3> lo{-2.0, -2.0, -2.0};
  std::array<double, 3> hi{2.0, 2.0, 2.0};
  std::array<int, 3> n{16, 16, 16};

  double coord(int axis, int i) const {
    return n[axis] < 2 ? lo[axis]
                       : lo[axis] + (hi[axis] - lo[axis]) * i / (n[axis] - 1);
  }
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * n[1] + j) * n[0] + i;
  }
  SpacetimePoint point(int i, int j, int k) const {
    return {t, coord(0, i), coord(1, j), coord(2, k)};
  }
  std::size_t size() const {
    return static_cast<std::size_t>(n[0]) * n[1] * n[2];
  }
};

struct BranchPoint {
  cplx G{};
  bool at_infinity = false;
  int label = -1;
  bool multiple = false;
};

// Grid face with a nontrivial branch permutation around its boundary loop;
// (i,j,k) is the low corner, axis the face normal.
struct MonodromyFace {
  int i = 0, j = 0, k = 0;
  int axis = 0;
};

struct BranchField {
  SliceGrid grid;
  int nominal_degree = 0;
  // per grid point, nominal_degree entries; empty where reduction degenerates
  std::vector<std::vector<BranchPoint>> points;
  std::vector<std::array<int, 3>> degenerate_points;
  std::vector<MonodromyFace> monodromy_faces;
  int label_count = 0;
};

// Solves every grid point and propagates branch labels from solved
// neighbors by chordal matching; points with no usable neighbor are seeded
// fresh. Faces whose boundary loop permutes labels are flagged, not fatal.
BranchField branch_continue(const GenFuncProjective& gf, const SliceGrid& grid,
                            const Tolerances& tol = default_tol());

}  // namespace adw
