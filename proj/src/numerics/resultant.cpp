#include "adw/numerics/resultant.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "adw/core/error.hpp"

namespace adw {
namespace {

cplx sylvester_det(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  const int m = static_cast<int>(a.size()) - 1;  // deg a
  const int n = static_cast<int>(b.size()) - 1;  // deg b
  const int N = m + n;
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
  // n rows of a's coefficients (descending), m rows of b's
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) S(r, r + k) = a[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) S(n + r, r + k) = b[n - k];
  return S.partialPivLu().determinant();
}

}  // namespace

cplx resultant(const CPoly& p, const CPoly& q) {
  const int m = p.degree();
  const int n = q.degree();
  if (m <= 0 && n <= 0)
    throw NumericalError("resultant: both polynomials constant");
  if (p.is_zero() || q.is_zero()) return cplx{};
  if (m == 0) return std::pow(p.leading(), n);
  if (n == 0) return std::pow(q.leading(), m);
  return sylvester_det(p.coeffs(), q.coeffs());
}

cplx discriminant(const CPoly& p) {
  const int n = p.degree();
  if (n < 2) throw NumericalError("discriminant: degree below 2");
  cplx res = resultant(p, p.derivative());
  double sgn = ((n * (n - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sgn * res / p.leading();
}

MultiPoly eliminate(const MultiPoly& a, const MultiPoly& b, int var) {
  const int nv = a.nvars();
  if (b.nvars() != nv) throw Error("eliminate: variable count mismatch");
  const int da = a.degree_in(var);
  const int db = b.degree_in(var);
  if (da == 0 && db == 0)
    throw NumericalError("eliminate: neither polynomial contains the variable");
  if (da == 0) return a.pow(db);
  if (db == 0) return b.pow(da);

  // degree bound of Res_var(a,b) in each surviving variable
  std::vector<int> bound(nv, 0);
  std::vector<int> survivors;
  for (int v = 0; v < nv; ++v) {
    if (v == var) continue;
    bound[v] = da * b.degree_in(v) + db * a.degree_in(v);
    if (bound[v] > 0) survivors.push_back(v);
  }

  // sample grid: scaled roots of unity per surviving variable
  std::vector<int> npts(nv, 1);
  std::vector<double> radius(nv, 1.0);
  long total = 1;
  for (size_t i = 0; i < survivors.size(); ++i) {
    int v = survivors[i];
    npts[v] = bound[v] + 1;
    radius[v] = 1.0 + 0.17 * double(i + 1);  // distinct radii avoid aliasing
    total *= npts[v];
  }
  if (total > 2'000'000)
    throw NumericalError("eliminate: degree bound too large for interpolation");

  // coefficients of a and b in var, as polynomials in the survivors
  auto ca = a.coeffs_in(var);
  auto cb = b.coeffs_in(var);

  // A leading-coefficient zero at a sample poisons the interpolation, so on
  // any degree drop all radii are rescaled and the sweep restarts.
  std::vector<cplx> samples(total);
  bool ok = false;
  for (int attempt = 0; attempt < 10 && !ok; ++attempt) {
    ok = true;
    std::vector<cplx> point(nv, cplx{});
    for (long s = 0; s < total && ok; ++s) {
      long rem = s;
      for (int v : survivors) {
        int j = static_cast<int>(rem % npts[v]);
        rem /= npts[v];
        double ang = 2.0 * kPi * j / npts[v];
        point[v] = radius[v] * cplx(std::cos(ang), std::sin(ang));
      }
      std::vector<cplx> av(ca.size()), bv(cb.size());
      for (size_t k = 0; k < ca.size(); ++k) av[k] = ca[k].eval(point);
      for (size_t k = 0; k < cb.size(); ++k) bv[k] = cb[k].eval(point);
      CPoly pa{av}, pb{bv};
      if (pa.degree() != da || pb.degree() != db) {
        ok = false;
        for (int v : survivors) radius[v] *= 1.091;
        break;
      }
      samples[s] = sylvester_det(pa.coeffs(), pb.coeffs());
    }
  }
  if (!ok)
    throw NumericalError("eliminate: leading coefficient vanishes on every sample grid");

  // inverse DFT along each surviving axis, then unscale radii
  for (int v : survivors) {
    const int N = npts[v];
    long stride = 1;
    for (int u : survivors) {
      if (u == v) break;
      stride *= npts[u];
    }
    long outer = total / (stride * N);
    std::vector<cplx> line(N);
    for (long o = 0; o < outer; ++o)
      for (long in = 0; in < stride; ++in) {
        long base = o * stride * N + in;
        for (int j = 0; j < N; ++j) line[j] = samples[base + j * stride];
        for (int k = 0; k < N; ++k) {
          cplx acc{};
          for (int j = 0; j < N; ++j) {
            double ang = -2.0 * kPi * j * k / N;
            acc += line[j] * cplx(std::cos(ang), std::sin(ang));
          }
          samples[base + k * stride] = acc / (double(N) * std::pow(radius[v], k));
        }
      }
  }

  MultiPoly out(nv);
  double maxc = 0.0;
  for (long s = 0; s < total; ++s) maxc = std::max(maxc, std::abs(samples[s]));
  const double cut = 1e-12 * maxc;
  for (long s = 0; s < total; ++s) {
    if (std::abs(samples[s]) <= cut) continue;
    std::vector<int> e(nv, 0);
    long rem = s;
    for (int v : survivors) {
      e[v] = rem % npts[v];
      rem /= npts[v];
    }
    out.add_term(e, samples[s]);
  }
  return out;
}

}  // namespace adw
