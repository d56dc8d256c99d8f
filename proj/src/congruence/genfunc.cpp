#include "adw/congruence/genfunc.hpp"

#include <algorithm>
#include <cmath>

#include "adw/core/error.hpp"
#include "adw/numerics/parse.hpp"

namespace adw {

namespace {
constexpr int kG = 0, kT1 = 1, kT2 = 2;
}

GenFuncProjective::GenFuncProjective(MultiPoly poly) : poly_(std::move(poly)) {
  if (poly_.nvars() != 3)
    throw Error("projective generating function needs variables (G, t1, t2)");
  if (poly_.is_zero()) throw Error("generating function is identically zero");
  if (poly_.degree_in(kG) > 8) throw Error("degree in G exceeds cap 8");
  int twistor_deg = 0;
  for (const MultiPoly::Term& t : poly_.terms())
    twistor_deg = std::max(twistor_deg, t.e[kT1] + t.e[kT2]);
  if (twistor_deg > 6) throw Error("twistor degree exceeds cap 6");
  // Substituting t1 = wG+u, t2 = vG+wb turns a term G^k t1^a t2^b into a
  // degree k+a+b polynomial in G whose top coefficient c w^a v^b cannot
  // cancel between distinct terms, so the generic degree is the max of that
  // sum.
  for (const MultiPoly::Term& t : poly_.terms())
    nominal_ = std::max(nominal_, t.e[kG] + t.e[kT1] + t.e[kT2]);
}

GenFuncProjective GenFuncProjective::parse(const std::string& text) {
  return GenFuncProjective(parse_poly(text, {"G", "t1", "t2"}));
}

GenFuncProjective GenFuncProjective::static_axisymmetric() {
  MultiPoly g = MultiPoly::variable(3, kG), t1 = MultiPoly::variable(3, kT1),
            t2 = MultiPoly::variable(3, kT2);
  return GenFuncProjective(g * t1 - t2);
}

CPoly GenFuncProjective::reduce_at(const SpacetimePoint& X) const {
  SpinorCoords s = spinor_coords(X);
  MultiPoly g = MultiPoly::variable(3, kG);
  MultiPoly t1 = g * s.w + MultiPoly::constant(3, s.u);
  MultiPoly t2 = g * s.v + MultiPoly::constant(3, s.wb);
  MultiPoly r = poly_.substitute(kT1, t1).substitute(kT2, t2);
  if (r.is_zero()) throw NumericalError("degenerate point");
  return r.to_cpoly(kG);
}

RootSet GenFuncProjective::solve_branches(const SpacetimePoint& X,
                                          const Tolerances& tol) const {
  return poly_roots(reduce_at(X), nominal_, tol);
}

ImplicitDerivs branch_derivs(const GenFuncProjective& gf, const SpacetimePoint& X,
                             cplx G, const Tolerances& tol) {
  SpinorCoords s = spinor_coords(X);
  cplx t1 = s.w * G + s.u;
  cplx t2 = s.v * G + s.wb;
  std::vector<cplx> at = {G, t1, t2};

  const MultiPoly& p = gf.poly();
  cplx dG = p.derivative(0).eval(at);
  cplx d1 = p.derivative(1).eval(at);
  cplx d2 = p.derivative(2).eval(at);
  // total G-derivative of the reduced polynomial
  cplx pg = dG + d1 * s.w + d2 * s.v;

  int deg = gf.nominal_degree();
  double scale = (1.0 + p.max_abs_coeff()) *
                 std::pow(1.0 + std::abs(G), deg > 0 ? deg - 1 : 0);
  if (std::abs(pg) <= tol.caustic_det_scale * scale)
    throw NumericalError("caustic point");

  ImplicitDerivs out;
  out.G = G;
  out.du = -d1 / pg;
  out.dv = -d2 * G / pg;
  out.dw = -d1 * G / pg;
  out.dwb = -d2 / pg;
  return out;
}

CVec4 branch_gradient(const ImplicitDerivs& d) {
  // u = t+z, v = t-z, w = x+iy, wb = x-iy
  CVec4 g;
  g[0] = d.du + d.dv;
  g[1] = d.dw + d.dwb;
  g[2] = kI * (d.dw - d.dwb);
  g[3] = d.du - d.dv;
  return g;
}

}  // namespace adw
