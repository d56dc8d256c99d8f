#include "adw/numerics/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "adw/core/error.hpp"

namespace adw {
namespace {

// Cauchy bound: all roots lie inside |z| <= 1 + max|c_i/c_n|
double root_bound(const std::vector<cplx>& c) {
  double lead = std::abs(c.back());
  double m = 0.0;
  for (size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::abs(c[i]) / lead);
  return 1.0 + m;
}

cplx horner(const std::vector<cplx>& c, cplx x) {
  cplx p{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * x + *it;
  return p;
}

void horner2(const std::vector<cplx>& c, cplx x, cplx& p, cplx& dp) {
  p = dp = cplx{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
}

// Aberth-Ehrlich simultaneous iteration. Returns false if not converged.
bool aberth(const std::vector<cplx>& c, std::vector<cplx>& z) {
  const int n = static_cast<int>(c.size()) - 1;
  const double R = root_bound(c);
  z.resize(n);
  for (int k = 0; k < n; ++k) {
    // deterministic spread, irrational angle offset avoids symmetry locking
    double ang = 2.0 * kPi * k / n + 0.7;
    z[k] = R * 0.8 * cplx(std::cos(ang), std::sin(ang));
  }
  const int max_sweep = 120;
  for (int sweep = 0; sweep < max_sweep; ++sweep) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      cplx p, dp;
      horner2(c, z[k], p, dp);
      if (p == cplx{}) continue;
      cplx newton = (dp == cplx{}) ? cplx{} : p / dp;
      if (newton == cplx{}) {
        z[k] += 1e-8 * R;
        worst = 1.0;
        continue;
      }
      cplx sum{};
      for (int j = 0; j < n; ++j)
        if (j != k) {
          cplx d = z[k] - z[j];
          if (std::abs(d) < 1e-300) d = 1e-300;
          sum += 1.0 / d;
        }
      cplx denom = 1.0 - newton * sum;
      cplx step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (worst < 1e-14) return true;
  }
  return false;
}

std::vector<cplx> companion_roots(const std::vector<cplx>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) M(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) M(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i) z[i] = es.eigenvalues()(i);
  return z;
}

void newton_polish(const std::vector<cplx>& c, std::vector<cplx>& z) {
  for (cplx& r : z) {
    for (int it = 0; it < 8; ++it) {
      cplx p, dp;
      horner2(c, r, p, dp);
      if (std::abs(dp) < 1e-300) break;
      cplx step = p / dp;
      if (std::abs(step) > 0.5 * (1.0 + std::abs(r))) break;  // diverging, leave as is
      r -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(r))) break;
    }
  }
}

}  // namespace

RootSet poly_roots(const CPoly& p, int nominal_degree, const Tolerances& tol) {
  if (p.is_zero()) throw NumericalError("poly_roots: polynomial identically zero");
  if (nominal_degree < 0) nominal_degree = p.degree();

  const double maxc = p.max_abs_coeff();
  CPoly eff = p.trimmed(tol.infinity_lc_scale);
  if (eff.is_zero())
    throw NumericalError("poly_roots: polynomial identically zero after trimming");

  RootSet out;
  out.nominal_degree = nominal_degree;
  out.at_infinity = nominal_degree - eff.degree();
  if (out.at_infinity < 0)
    throw NumericalError("poly_roots: nominal degree below actual degree");
  if (eff.degree() == 0) return out;

  const std::vector<cplx>& c = eff.coeffs();
  std::vector<cplx> z;
  if (!aberth(c, z)) z = companion_roots(c);
  newton_polish(c, z);

  // multiplicity clustering, greedy union by radius
  std::vector<int> group(z.size(), -1);
  int ngroups = 0;
  for (size_t i = 0; i < z.size(); ++i) {
    if (group[i] >= 0) continue;
    group[i] = ngroups;
    for (size_t j = i + 1; j < z.size(); ++j) {
      if (group[j] >= 0) continue;
      double rad = tol.cluster_radius_scale * (1.0 + std::abs(z[i]));
      if (std::abs(z[i] - z[j]) <= rad) group[j] = ngroups;
    }
    ++ngroups;
  }
  out.finite.resize(ngroups);
  std::vector<int> counts(ngroups, 0);
  std::vector<cplx> sums(ngroups, cplx{});
  for (size_t i = 0; i < z.size(); ++i) {
    sums[group[i]] += z[i];
    ++counts[group[i]];
  }
  for (int g = 0; g < ngroups; ++g) {
    out.finite[g].value = sums[g] / double(counts[g]);
    out.finite[g].multiplicity = counts[g];
  }
  std::sort(out.finite.begin(), out.finite.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });

  // residual acceptance for simple roots; multiple roots are vouched for by the cluster
  const double bound = tol.root_residual_scale * (1.0 + maxc);
  for (Root& r : out.finite) {
    if (r.multiplicity > 1) continue;
    if (std::abs(horner(c, r.value)) > bound)
      throw NumericalError("poly_roots: root residual exceeds tolerance");
  }
  return out;
}

}  // namespace adw
