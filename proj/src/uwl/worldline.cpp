#include "adw/uwl/worldline.hpp"

#include <cmath>

#include "adw/core/error.hpp"
#include "adw/numerics/parse.hpp"

namespace adw {

int PolyWorldline::max_degree() const {
  int d = 0;
  for (const CPoly& p : x) d = std::max(d, p.degree());
  return d;
}

CVec4 PolyWorldline::position(cplx sigma) const {
  return {x[0].eval(sigma), x[1].eval(sigma), x[2].eval(sigma),
          x[3].eval(sigma)};
}

CVec4 PolyWorldline::velocity(cplx sigma) const {
  return {x[0].derivative().eval(sigma), x[1].derivative().eval(sigma),
          x[2].derivative().eval(sigma), x[3].derivative().eval(sigma)};
}

bool PolyWorldline::is_real(double tol) const {
  for (const CPoly& p : x)
    for (const cplx& c : p.coeffs())
      if (std::abs(c.imag()) > tol * (1.0 + std::abs(c))) return false;
  return true;
}

PolyWorldline make_worldline(const std::array<CPoly, 4>& coords) {
  int dmax = 0, dmin_nonconst = -1;
  for (const CPoly& p : coords) {
    dmax = std::max(dmax, p.degree());
    if (p.degree() > 0) dmin_nonconst = p.degree();
  }
  if (dmax > 6) throw ConfigError("worldline coordinate degree exceeds 6");
  if (dmin_nonconst < 0)
    throw ConfigError("worldline must have a non-constant coordinate");
  return PolyWorldline{coords};
}

PolyWorldline parse_worldline(const std::array<std::string, 4>& exprs) {
  std::array<CPoly, 4> coords;
  for (int mu = 0; mu < 4; ++mu)
    coords[mu] = parse_poly(exprs[mu], {"s"}).to_cpoly(0);
  return make_worldline(coords);
}

CPoly lce_polynomial(const PolyWorldline& wl, const SpacetimePoint& X) {
  const double Xc[4] = {X.t, X.x, X.y, X.z};
  CPoly lce;
  for (int mu = 0; mu < 4; ++mu) {
    CPoly d = CPoly::constant(Xc[mu]) - wl.x[mu];
    lce += d * d * kEta[mu];
  }
  double scale = 1.0;
  for (int mu = 0; mu < 4; ++mu)
    scale = std::max(scale, wl.x[mu].max_abs_coeff() + std::abs(Xc[mu]));
  if (lce.max_abs_coeff() <= 1e-14 * scale * scale)
    throw Error("observer on worldline");
  return lce;
}

}  // namespace adw
