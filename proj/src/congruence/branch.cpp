#include "adw/congruence/branch.hpp"

#include <algorithm>

#include "adw/core/error.hpp"
#include "adw/numerics/root_track.hpp"

namespace adw {

namespace {

std::vector<std::pair<cplx, bool>> sphere_points(const std::vector<BranchPoint>& v) {
  std::vector<std::pair<cplx, bool>> out;
  out.reserve(v.size());
  for (const BranchPoint& b : v) out.emplace_back(b.G, b.at_infinity);
  return out;
}

// permutation sending labels at a to labels at b; empty when not comparable
std::vector<int> face_step(const std::vector<BranchPoint>& a,
                           const std::vector<BranchPoint>& b) {
  if (a.empty() || b.empty() || a.size() != b.size()) return {};
  return chordal_match(sphere_points(a), sphere_points(b));
}

}  // namespace

BranchField branch_continue(const GenFuncProjective& gf, const SliceGrid& grid,
                            const Tolerances& tol) {
  BranchField f;
  f.grid = grid;
  f.nominal_degree = gf.nominal_degree();
  f.points.assign(grid.size(), {});

  for (int k = 0; k < grid.n[2]; ++k)
    for (int j = 0; j < grid.n[1]; ++j)
      for (int i = 0; i < grid.n[0]; ++i) {
        std::vector<BranchPoint> pts;
        try {
          RootSet rs = gf.solve_branches(grid.point(i, j, k), tol);
          for (const Root& r : rs.finite)
            for (int m = 0; m < r.multiplicity; ++m)
              pts.push_back({r.value, false, -1, r.multiplicity > 1});
          for (int m = 0; m < rs.at_infinity; ++m)
            pts.push_back({cplx{}, true, -1, rs.at_infinity > 1});
        } catch (const NumericalError&) {
          f.degenerate_points.push_back({i, j, k});
          continue;
        }

        // label from the first solved lower neighbor, else seed fresh
        const std::vector<BranchPoint>* nb = nullptr;
        if (i > 0 && !f.points[grid.index(i - 1, j, k)].empty())
          nb = &f.points[grid.index(i - 1, j, k)];
        else if (j > 0 && !f.points[grid.index(i, j - 1, k)].empty())
          nb = &f.points[grid.index(i, j - 1, k)];
        else if (k > 0 && !f.points[grid.index(i, j, k - 1)].empty())
          nb = &f.points[grid.index(i, j, k - 1)];

        if (nb && nb->size() == pts.size()) {
          std::vector<int> m = chordal_match(sphere_points(*nb), sphere_points(pts));
          for (size_t q = 0; q < m.size(); ++q) pts[m[q]].label = (*nb)[q].label;
        } else {
          std::sort(pts.begin(), pts.end(), [](const BranchPoint& a, const BranchPoint& b) {
            if (a.at_infinity != b.at_infinity) return b.at_infinity;
            if (a.G.real() != b.G.real()) return a.G.real() < b.G.real();
            return a.G.imag() < b.G.imag();
          });
          for (size_t q = 0; q < pts.size(); ++q) pts[q].label = static_cast<int>(q);
        }
        for (const BranchPoint& b : pts)
          f.label_count = std::max(f.label_count, b.label + 1);
        f.points[grid.index(i, j, k)] = std::move(pts);
      }

  // Monodromy: compose matchings around each face loop; a nontrivial
  // permutation means a branch point threads the face.
  for (int axis = 0; axis < 3; ++axis) {
    int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
    std::array<int, 3> idx{};
    for (idx[axis] = 0; idx[axis] < grid.n[axis]; ++idx[axis])
      for (idx[a1] = 0; idx[a1] + 1 < grid.n[a1]; ++idx[a1])
        for (idx[a2] = 0; idx[a2] + 1 < grid.n[a2]; ++idx[a2]) {
          std::array<std::array<int, 3>, 4> corner{};
          corner[0] = idx;
          corner[1] = idx;
          corner[1][a1] += 1;
          corner[2] = corner[1];
          corner[2][a2] += 1;
          corner[3] = idx;
          corner[3][a2] += 1;

          const int nb = f.nominal_degree;
          std::vector<int> perm(nb);
          for (int q = 0; q < nb; ++q) perm[q] = q;
          bool ok = true;
          for (int e = 0; e < 4 && ok; ++e) {
            const auto& ca = corner[e];
            const auto& cb = corner[(e + 1) % 4];
            std::vector<int> step =
                face_step(f.points[grid.index(ca[0], ca[1], ca[2])],
                          f.points[grid.index(cb[0], cb[1], cb[2])]);
            if (step.empty()) {
              ok = false;
              break;
            }
            for (int& q : perm) q = step[q];
          }
          if (!ok) continue;
          for (int q = 0; q < nb; ++q)
            if (perm[q] != q) {
              f.monodromy_faces.push_back({idx[0], idx[1], idx[2], axis});
              break;
            }
        }
  }
  return f;
}

}  // namespace adw
