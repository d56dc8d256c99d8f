#include "adw/caustics/string.hpp"

#include <cmath>

#include "adw/core/error.hpp"

namespace adw {

GeneratingStringPoint generating_string(const GenFuncPair& gf, const Mat2& Z,
                                        const Spinor& xi) {
  Spinor tau = incidence(Z, xi);
  std::vector<cplx> at = {xi[0], xi[1], tau[0], tau[1]};
  Mat2 Dxi, Dtau;
  for (int C = 0; C < 2; ++C)
    for (int A = 0; A < 2; ++A) {
      Dxi(C, A) = gf.component(C).derivative(A).eval(at);
      Dtau(C, A) = gf.component(C).derivative(2 + A).eval(at);
    }
  if (std::abs(Dtau.det()) <= 1e-13 * (1.0 + Dtau.fro_norm2()))
    throw NumericalError("string undefined for this pair");

  GeneratingStringPoint s;
  s.Zhat = Dtau.inverse() * Dxi * cplx(-1.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!std::isfinite(s.Zhat(i, j).real()) ||
          !std::isfinite(s.Zhat(i, j).imag()))
        throw NumericalError("string undefined for this pair");
  return s;
}

cplx null_cone_check(const Mat2& Zhat, const Mat2& Z) {
  return (Zhat - Z).det();
}

}  // namespace adw
