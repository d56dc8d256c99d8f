#pragma once

#include <array>
#include <functional>

#include "adw/biquat/biquat.hpp"
#include "adw/congruence/residuals.hpp"

namespace adw {

inline Vec4d to_vec(const SpacetimePoint& p) { return {p.t, p.x, p.y, p.z}; }
inline SpacetimePoint to_point(const Vec4d& x) {
  return {x[0], x[1], x[2], x[3]};
}

// Antisymmetric complex rank-2 tensor over coordinates (t, x, y, z).
struct TwoForm {
  cplx c[4][4]{};

  cplx operator()(int mu, int nu) const { return c[mu][nu]; }
  void set(int mu, int nu, cplx v) {
    c[mu][nu] = v;
    c[nu][mu] = -v;
  }
  TwoForm operator+(const TwoForm& o) const;
  TwoForm operator-(const TwoForm& o) const;
  TwoForm operator*(cplx s) const;
  double max_abs() const;
};
using FieldStrength = TwoForm;

using MatrixSampler = std::function<Mat2(const Vec4d&)>;
using TwoFormSampler = std::function<TwoForm(const Vec4d&)>;

// F_mu_nu = d_mu A_nu - d_nu A_mu with A_nu = tr(Phi sigma~_nu)/2, the
// derivatives Richardson-extrapolated central differences of the sampler.
FieldStrength em_field_I(const MatrixSampler& phi, const Vec4d& X,
                         double step_scale = 1e-3);

// C_mu_nu = d_mu alpha d_nu beta - d_nu alpha d_mu beta
TwoForm em_field_II(const ScalarSampler& alpha, const ScalarSampler& beta,
                    const Vec4d& X, double step_scale = 1e-3);
// same from caller-supplied cartesian gradients (exact for analytic input)
TwoForm em_field_II(const CVec4& dalpha, const CVec4& dbeta);

// E_a = F_0a, H_a = -(i/2) eps_abc F_bc
struct EHParts {
  std::array<cplx, 3> E{}, H{};
};
EHParts eh_decompose(const TwoForm& F);

// Hodge dual with eps_0123 = +1, indices raised by (+,-,-,-); acts on the
// electric/magnetic split as E -> iH, H -> iE (so star^2 = -1).
TwoForm hodge_star(const TwoForm& F);

struct DualityReport {
  double selfdual_residual = 0.0;  // min over signs of max|F -+ s i *F|/max|F|
  int best_sign = 0;               // minimizing s in F = s i *F
  cplx I1{}, I2{};                 // E.E - H.H and E.H (unconjugated dots)
  cplx FF{}, FstarF{};             // F_mn F^mn and F_mn (*F)^mn
};
DualityReport duality_invariants(const TwoForm& F);

// Exterior-derivative residuals by omitted coordinate: dC[k] is the
// (lam,mu,nu) cyclic sum over the ascending triple excluding k, and dstarC
// the same for the Hodge dual. Both vanish for source-free Maxwell fields.
struct FormResiduals {
  std::array<cplx, 4> dC{}, dstarC{};
};
FormResiduals form_residuals(const TwoFormSampler& C, const Vec4d& X,
                             double step_scale = 1e-3);

enum class WaveKind { retarded, advanced };

// Static field scaled by the profile f(r - t) or f(r + t); the advanced
// branch flips the sign of the electric components only.
TwoForm wave_promote(const TwoFormSampler& static_field,
                     const std::function<cplx(double)>& f, WaveKind kind,
                     const Vec4d& X);

// components of a spatial vector along (r^, theta^, phi^) at X
std::array<cplx, 3> spherical_components(const std::array<cplx, 3>& v,
                                         const Vec4d& X);

}  // namespace adw
