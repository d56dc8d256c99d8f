#include "adw/congruence/genfunc_pair.hpp"

#include <algorithm>
#include <cmath>

#include "adw/core/error.hpp"
#include "adw/numerics/parse.hpp"
#include "adw/numerics/resultant.hpp"
#include "adw/numerics/roots.hpp"

namespace adw {

namespace {
constexpr int kXi0 = 0, kXi1 = 1, kTau0 = 2, kTau1 = 3;
const std::vector<std::string> kPairVars = {"xi0", "xi1", "tau0", "tau1"};
}  // namespace

GenFuncPair::GenFuncPair(MultiPoly p1, MultiPoly p2) : p_{std::move(p1), std::move(p2)} {
  for (const MultiPoly& p : p_) {
    if (p.nvars() != 4)
      throw Error("pair components need variables (xi0, xi1, tau0, tau1)");
    if (p.is_zero()) throw Error("generating function component is identically zero");
    if (p.total_degree() > 6) throw Error("component total degree exceeds cap 6");
  }
}

GenFuncPair GenFuncPair::parse(const std::string& f1, const std::string& f2) {
  return GenFuncPair(parse_poly(f1, kPairVars), parse_poly(f2, kPairVars));
}

GenFuncPair GenFuncPair::constant_twistor(const Spinor& c) {
  MultiPoly t0 = MultiPoly::variable(4, kTau0), t1 = MultiPoly::variable(4, kTau1);
  return GenFuncPair(t0 - MultiPoly::constant(4, c[0]),
                     t1 - MultiPoly::constant(4, c[1]));
}

GenFuncPair GenFuncPair::point_twistor(const Mat2& Z0) {
  MultiPoly x0 = MultiPoly::variable(4, kXi0), x1 = MultiPoly::variable(4, kXi1);
  MultiPoly t0 = MultiPoly::variable(4, kTau0), t1 = MultiPoly::variable(4, kTau1);
  return GenFuncPair(t0 - (x0 * Z0(0, 0) + x1 * Z0(0, 1)),
                     t1 - (x0 * Z0(1, 0) + x1 * Z0(1, 1)));
}

const MultiPoly& GenFuncPair::component(int c) const {
  if (c < 0 || c > 1) throw Error("component index out of range");
  return p_[c];
}

namespace {

// tau = Z xi bound into the component: polynomial in (xi0, xi1) alone
MultiPoly bind_point(const MultiPoly& p, const Mat2& Z) {
  MultiPoly x0 = MultiPoly::variable(4, kXi0), x1 = MultiPoly::variable(4, kXi1);
  MultiPoly t0 = x0 * Z(0, 0) + x1 * Z(0, 1);
  MultiPoly t1 = x0 * Z(1, 0) + x1 * Z(1, 1);
  return p.substitute(kTau0, t0).substitute(kTau1, t1);
}

std::vector<cplx> roots_of(const MultiPoly& p, int var, const Tolerances& tol) {
  CPoly u = p.to_cpoly(var).trimmed(1e-12);
  if (u.is_zero() || u.degree() < 1) return {};
  std::vector<cplx> out;
  for (const Root& r : poly_roots(u, -1, tol).finite) out.push_back(r.value);
  return out;
}

}  // namespace

std::vector<Spinor> GenFuncPair::solve_bispinor(const Mat2& Z,
                                                const Tolerances& tol) const {
  MultiPoly A = bind_point(p_[0], Z), B = bind_point(p_[1], Z);
  if (A.is_zero() || B.is_zero())
    throw NumericalError("non-isolated solution set");

  double scale = 1.0 + std::max(p_[0].max_abs_coeff(), p_[1].max_abs_coeff());
  auto residual_ok = [&](const Spinor& xi) {
    Spinor t = incidence(Z, xi);
    std::vector<cplx> at = {xi[0], xi[1], t[0], t[1]};
    return std::abs(p_[0].eval(at)) <= tol.bispinor_tol * scale &&
           std::abs(p_[1].eval(at)) <= tol.bispinor_tol * scale;
  };

  std::vector<cplx> xi0_candidates;
  bool xi1_constrained = A.degree_in(kXi1) > 0 || B.degree_in(kXi1) > 0;
  if (!xi1_constrained) {
    // system involves xi0 only; any common root leaves xi1 free
    std::vector<cplx> ra = roots_of(A, kXi0, tol), rb = roots_of(B, kXi0, tol);
    for (cplx a : ra)
      for (cplx b : rb)
        if (std::abs(a - b) < 1e-8 * (1.0 + std::abs(a)))
          throw NumericalError("non-isolated solution set");
    return {};
  }

  MultiPoly R = eliminate(A, B, kXi1).pruned(1e-12);
  if (R.is_zero()) throw NumericalError("non-isolated solution set");
  if (R.total_degree() == 0) return {};
  xi0_candidates = roots_of(R, kXi0, tol);

  std::vector<Spinor> found;
  auto consider = [&](const Spinor& xi) {
    if (!residual_ok(xi)) return;
    for (const Spinor& f : found)
      if (std::abs(f[0] - xi[0]) + std::abs(f[1] - xi[1]) <
          1e-8 * (1.0 + std::abs(xi[0]) + std::abs(xi[1])))
        return;
    found.push_back(xi);
  };

  for (cplx r : xi0_candidates) {
    MultiPoly Ar = A.substitute(kXi0, r).pruned(1e-12);
    MultiPoly Br = B.substitute(kXi0, r).pruned(1e-12);
    bool a_gone = Ar.is_zero() || Ar.degree_in(kXi1) < 1;
    bool b_gone = Br.is_zero() || Br.degree_in(kXi1) < 1;
    if (Ar.is_zero() && Br.is_zero())
      throw NumericalError("non-isolated solution set");
    if (a_gone && b_gone) continue;
    for (cplx y : roots_of(Ar, kXi1, tol)) consider({r, y});
    for (cplx y : roots_of(Br, kXi1, tol)) consider({r, y});
  }
  return found;
}

SpinorGradient spinor_gradient(const GenFuncPair& gf, const Mat2& Z,
                               const Spinor& xi, const Tolerances& tol) {
  Spinor t = incidence(Z, xi);
  std::vector<cplx> at = {xi[0], xi[1], t[0], t[1]};

  Mat2 Dxi, Dtau;
  for (int C = 0; C < 2; ++C) {
    const MultiPoly& p = gf.component(C);
    for (int A = 0; A < 2; ++A) Dxi(C, A) = p.derivative(kXi0 + A).eval(at);
    for (int E = 0; E < 2; ++E) Dtau(C, E) = p.derivative(kTau0 + E).eval(at);
  }

  Mat2 P = Dxi + Dtau * Z;
  if (std::abs(P.det()) <= tol.caustic_det_scale * (1.0 + P.fro_norm2()))
    throw NumericalError("caustic point");

  SpinorGradient out;
  out.P = P;
  out.phi = P.inverse() * Dtau * cplx(-1.0);
  for (int E = 0; E < 2; ++E)
    for (int B = 0; B < 2; ++B)
      for (int D = 0; D < 2; ++D) out.dxi[E].m[B][D] = out.phi(E, B) * xi[D];
  return out;
}

}  // namespace adw
