#include "adw/caustics/locus.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "adw/core/error.hpp"
#include "adw/numerics/resultant.hpp"

namespace adw {

cplx caustic_value(const GenFuncProjective& gf, const SpacetimePoint& X) {
  int n = gf.nominal_degree();
  if (n < 2) return 1.0;
  CPoly p;
  try {
    p = gf.reduce_at(X);
  } catch (const NumericalError&) {
    return 0.0;
  }
  int drop = n - p.degree();
  if (drop == 0) return discriminant(p);
  if (drop == 1) {
    cplx lc2 = p.leading() * p.leading();
    return p.degree() >= 2 ? lc2 * discriminant(p) : lc2;
  }
  return 0.0;
}

cplx pair_caustic_value(const GenFuncPair& gf, const SpacetimePoint& X,
                        const Tolerances& tol) {
  Mat2 Z = hermitian_of_point(X);
  bool affine = gf.component(0).total_degree() <= 1 &&
                gf.component(1).total_degree() <= 1;
  if (affine) {
    std::vector<cplx> at = {0.0, 0.0, 0.0, 0.0};
    Mat2 Dxi, Dtau;
    for (int C = 0; C < 2; ++C)
      for (int A = 0; A < 2; ++A) {
        Dxi(C, A) = gf.component(C).derivative(A).eval(at);
        Dtau(C, A) = gf.component(C).derivative(2 + A).eval(at);
      }
    return (Dxi + Dtau * Z).det();
  }

  std::vector<Spinor> sols;
  try {
    sols = gf.solve_bispinor(Z, tol);
  } catch (const NumericalError&) {
    return 0.0;
  }
  if (sols.empty()) return 1.0;
  cplx prod = 1.0;
  for (const Spinor& xi : sols) {
    try {
      prod *= spinor_gradient(gf, Z, xi, tol).P.det();
    } catch (const NumericalError&) {
      return 0.0;
    }
  }
  return prod;
}

namespace {

struct Seed {
  double x, y, z;
};

// damped Gauss-Newton on (Re f, Im f) over (x,y,z); returns true on
// convergence to |f| <= locus_tol
bool refine_point(const LocusField& field, double t, Seed& s, double scale_len,
                  const Tolerances& tol) {
  auto eval = [&](const Seed& q) { return field({t, q.x, q.y, q.z}); };
  cplx f = eval(s);
  double lambda = 1e-10;
  for (int it = 0; it < 80; ++it) {
    if (std::abs(f) <= tol.locus_tol) return true;
    double h = 1e-6 * scale_len;
    cplx fx = (eval({s.x + h, s.y, s.z}) - eval({s.x - h, s.y, s.z})) / (2.0 * h);
    cplx fy = (eval({s.x, s.y + h, s.z}) - eval({s.x, s.y - h, s.z})) / (2.0 * h);
    cplx fz = (eval({s.x, s.y, s.z + h}) - eval({s.x, s.y, s.z - h})) / (2.0 * h);
    Eigen::Matrix<double, 2, 3> J;
    J << fx.real(), fy.real(), fz.real(), fx.imag(), fy.imag(), fz.imag();
    Eigen::Vector2d r(f.real(), f.imag());

    bool stepped = false;
    for (int damp = 0; damp < 12; ++damp) {
      Eigen::Matrix3d A = J.transpose() * J + lambda * Eigen::Matrix3d::Identity();
      Eigen::Vector3d dx = A.ldlt().solve(-J.transpose() * r);
      double cap = 2.0 * scale_len;
      if (dx.norm() > cap) dx *= cap / dx.norm();
      Seed cand{s.x + dx(0), s.y + dx(1), s.z + dx(2)};
      cplx fc = eval(cand);
      if (std::abs(fc) < std::abs(f)) {
        s = cand;
        f = fc;
        lambda = std::max(lambda * 0.25, 1e-12);
        stepped = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!stepped) return std::abs(f) <= tol.locus_tol;
  }
  return std::abs(f) <= tol.locus_tol;
}

}  // namespace

LocusFrame extract_locus_field(const LocusField& field, const SliceGrid& grid,
                               const Tolerances& tol) {
  LocusFrame frame;
  frame.t = grid.t;

  const int nx = grid.n[0], ny = grid.n[1], nz = grid.n[2];
  std::vector<cplx> val(grid.size());
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        val[grid.index(i, j, k)] = field(grid.point(i, j, k));

  double spacing = 0.0;
  for (int a = 0; a < 3; ++a)
    if (grid.n[a] > 1)
      spacing = std::max(spacing, (grid.hi[a] - grid.lo[a]) / (grid.n[a] - 1));
  if (spacing == 0.0) spacing = 1.0;

  std::vector<Seed> seeds;
  // local minima of |f| over the 6-neighborhood
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        double v = std::abs(val[grid.index(i, j, k)]);
        bool is_min = true;
        auto probe = [&](int a, int b, int c) {
          if (a < 0 || b < 0 || c < 0 || a >= nx || b >= ny || c >= nz) return;
          if (std::abs(val[grid.index(a, b, c)]) < v) is_min = false;
        };
        probe(i - 1, j, k);
        probe(i + 1, j, k);
        probe(i, j - 1, k);
        probe(i, j + 1, k);
        probe(i, j, k - 1);
        probe(i, j, k + 1);
        if (is_min)
          seeds.push_back({grid.coord(0, i), grid.coord(1, j), grid.coord(2, k)});
      }
  // cells whose corners change sign in both Re and Im
  for (int k = 0; k + 1 < nz; ++k)
    for (int j = 0; j + 1 < ny; ++j)
      for (int i = 0; i + 1 < nx; ++i) {
        double re_lo = 1e300, re_hi = -1e300, im_lo = 1e300, im_hi = -1e300;
        for (int c = 0; c < 8; ++c) {
          cplx v = val[grid.index(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1))];
          re_lo = std::min(re_lo, v.real());
          re_hi = std::max(re_hi, v.real());
          im_lo = std::min(im_lo, v.imag());
          im_hi = std::max(im_hi, v.imag());
        }
        if (re_lo <= 0.0 && re_hi >= 0.0 && im_lo <= 0.0 && im_hi >= 0.0)
          seeds.push_back({0.5 * (grid.coord(0, i) + grid.coord(0, i + 1)),
                           0.5 * (grid.coord(1, j) + grid.coord(1, j + 1)),
                           0.5 * (grid.coord(2, k) + grid.coord(2, k + 1))});
      }

  for (Seed s : seeds) {
    if (!refine_point(field, grid.t, s, spacing, tol)) continue;
    bool inside = true;
    double pos[3] = {s.x, s.y, s.z};
    for (int a = 0; a < 3; ++a)
      if (pos[a] < grid.lo[a] - spacing || pos[a] > grid.hi[a] + spacing)
        inside = false;
    if (!inside) continue;
    bool dup = false;
    for (const LocusPoint& p : frame.points) {
      double d = std::hypot(p.x - s.x, p.y - s.y, p.z - s.z);
      if (d < 0.5 * spacing) {
        dup = true;
        break;
      }
    }
    if (!dup)
      frame.points.push_back(
          {s.x, s.y, s.z, std::abs(field({grid.t, s.x, s.y, s.z}))});
  }
  return frame;
}

LocusFrame extract_locus(const GenFuncProjective& gf, const SliceGrid& grid,
                         const Tolerances& tol) {
  return extract_locus_field(
      [&](const SpacetimePoint& p) { return caustic_value(gf, p); }, grid, tol);
}

LocusFrame extract_locus_pair(const GenFuncPair& gf, const SliceGrid& grid,
                              const Tolerances& tol) {
  return extract_locus_field(
      [&](const SpacetimePoint& p) { return pair_caustic_value(gf, p, tol); },
      grid, tol);
}

std::vector<LocusFrame> track_locus(const GenFuncProjective& gf, SliceGrid grid,
                                    double t0, double t1, int nt,
                                    const Tolerances& tol) {
  if (nt < 1) throw Error("track_locus: need at least one frame");
  std::vector<LocusFrame> frames;
  for (int s = 0; s < nt; ++s) {
    grid.t = nt == 1 ? t0 : t0 + (t1 - t0) * s / (nt - 1);
    frames.push_back(extract_locus(gf, grid, tol));
  }
  return frames;
}

}  // namespace adw
