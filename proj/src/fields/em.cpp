#include "adw/fields/em.hpp"

#include <cmath>

#include "adw/core/error.hpp"

namespace adw {

TwoForm TwoForm::operator+(const TwoForm& o) const {
  TwoForm r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.c[i][j] = c[i][j] + o.c[i][j];
  return r;
}

TwoForm TwoForm::operator-(const TwoForm& o) const {
  TwoForm r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.c[i][j] = c[i][j] - o.c[i][j];
  return r;
}

TwoForm TwoForm::operator*(cplx s) const {
  TwoForm r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.c[i][j] = c[i][j] * s;
  return r;
}

double TwoForm::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(c[i][j]));
  return m;
}

FieldStrength em_field_I(const MatrixSampler& phi, const Vec4d& X,
                         double step_scale) {
  // decode is linear, so d_mu A = decode(d_mu Phi)
  CVec4 dA[4];
  for (int mu = 0; mu < 4; ++mu)
    dA[mu] = decode_vector(fd_partial(phi, X, mu, step_scale, true));
  FieldStrength F;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) F.set(mu, nu, dA[mu][nu] - dA[nu][mu]);
  return F;
}

TwoForm em_field_II(const CVec4& dalpha, const CVec4& dbeta) {
  TwoForm C;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      C.set(mu, nu, dalpha[mu] * dbeta[nu] - dalpha[nu] * dbeta[mu]);
  return C;
}

TwoForm em_field_II(const ScalarSampler& alpha, const ScalarSampler& beta,
                    const Vec4d& X, double step_scale) {
  CVec4 da, db;
  for (int mu = 0; mu < 4; ++mu) {
    da[mu] = fd_partial(alpha, X, mu, step_scale, true);
    db[mu] = fd_partial(beta, X, mu, step_scale, true);
  }
  return em_field_II(da, db);
}

EHParts eh_decompose(const TwoForm& F) {
  EHParts p;
  for (int a = 0; a < 3; ++a) p.E[a] = F.c[0][a + 1];
  p.H[0] = -kI * F.c[2][3];
  p.H[1] = -kI * F.c[3][1];
  p.H[2] = -kI * F.c[1][2];
  return p;
}

TwoForm hodge_star(const TwoForm& F) {
  EHParts p = eh_decompose(F);
  TwoForm s;
  // E' = iH: F'_0a = i H_a
  s.set(0, 1, kI * p.H[0]);
  s.set(0, 2, kI * p.H[1]);
  s.set(0, 3, kI * p.H[2]);
  // H' = iE, and H'_a = -(i/2) eps F'_bc inverts to F'_23 = i H'_1, so the
  // magnetic block picks up i * i = -1
  s.set(2, 3, -p.E[0]);
  s.set(3, 1, -p.E[1]);
  s.set(1, 2, -p.E[2]);
  return s;
}

DualityReport duality_invariants(const TwoForm& F) {
  EHParts p = eh_decompose(F);
  TwoForm star = hodge_star(F);

  DualityReport r;
  double scale = F.max_abs();
  double best = -1.0;
  for (int s : {1, -1}) {
    TwoForm diff = F - star * (cplx(s) * kI);
    double v = diff.max_abs() / (scale > 0 ? scale : 1.0);
    if (best < 0 || v < best) {
      best = v;
      r.best_sign = s;
    }
  }
  r.selfdual_residual = best;

  for (int a = 0; a < 3; ++a) {
    r.I1 += p.E[a] * p.E[a] - p.H[a] * p.H[a];
    r.I2 += p.E[a] * p.H[a];
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      cplx raise = kEta[mu] * kEta[nu];
      r.FF += F.c[mu][nu] * raise * F.c[mu][nu];
      r.FstarF += F.c[mu][nu] * raise * star.c[mu][nu];
    }
  return r;
}

namespace {
// ascending triple of indices excluding k
constexpr int kTriples[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
}  // namespace

FormResiduals form_residuals(const TwoFormSampler& C, const Vec4d& X,
                             double step_scale) {
  TwoForm dC[4];
  for (int mu = 0; mu < 4; ++mu) dC[mu] = fd_partial(C, X, mu, step_scale, true);
  auto star_sampler = [&](const Vec4d& x) { return hodge_star(C(x)); };
  TwoForm dS[4];
  for (int mu = 0; mu < 4; ++mu)
    dS[mu] = fd_partial(star_sampler, X, mu, step_scale, true);

  FormResiduals out;
  for (int k = 0; k < 4; ++k) {
    int l = kTriples[k][0], m = kTriples[k][1], n = kTriples[k][2];
    out.dC[k] = dC[l].c[m][n] + dC[m].c[n][l] + dC[n].c[l][m];
    out.dstarC[k] = dS[l].c[m][n] + dS[m].c[n][l] + dS[n].c[l][m];
  }
  return out;
}

TwoForm wave_promote(const TwoFormSampler& static_field,
                     const std::function<cplx(double)>& f, WaveKind kind,
                     const Vec4d& X) {
  double r = std::sqrt(X[1] * X[1] + X[2] * X[2] + X[3] * X[3]);
  double arg = kind == WaveKind::retarded ? r - X[0] : r + X[0];
  cplx fr = f(arg);
  cplx esign = kind == WaveKind::retarded ? 1.0 : -1.0;

  TwoForm C = static_field(X);
  TwoForm out;
  for (int a = 1; a < 4; ++a) out.set(0, a, esign * fr * C.c[0][a]);
  out.set(1, 2, fr * C.c[1][2]);
  out.set(1, 3, fr * C.c[1][3]);
  out.set(2, 3, fr * C.c[2][3]);
  return out;
}

std::array<cplx, 3> spherical_components(const std::array<cplx, 3>& v,
                                         const Vec4d& X) {
  double x = X[1], y = X[2], z = X[3];
  double r = std::sqrt(x * x + y * y + z * z);
  double rho = std::sqrt(x * x + y * y);
  if (r == 0.0) throw NumericalError("spherical components undefined at r = 0");
  double ct = z / r, st = rho / r;
  double cp = rho > 0 ? x / rho : 1.0, sp = rho > 0 ? y / rho : 0.0;
  double rh[3] = {st * cp, st * sp, ct};
  double th[3] = {ct * cp, ct * sp, -st};
  double ph[3] = {-sp, cp, 0.0};
  std::array<cplx, 3> out{};
  for (int a = 0; a < 3; ++a) {
    out[0] += v[a] * rh[a];
    out[1] += v[a] * th[a];
    out[2] += v[a] * ph[a];
  }
  return out;
}

}  // namespace adw
