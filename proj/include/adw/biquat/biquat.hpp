#pragma once

#include <array>

#include "adw/core/types.hpp"

namespace adw {

// Element of the biquaternion algebra in its 2x2 complex matrix realization.
// Minkowski points embed as Hermitian matrices, complexified points drop the
// Hermiticity constraint, and field/curvature objects reuse the same type.
struct Mat2 {
  cplx m[2][2]{};

  static Mat2 identity() { return diag(1.0, 1.0); }
  static Mat2 diag(cplx a, cplx b);

  cplx& operator()(int i, int j) { return m[i][j]; }
  cplx operator()(int i, int j) const { return m[i][j]; }

  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  Mat2 operator*(const Mat2& o) const;  // algebra product
  Mat2 operator*(cplx s) const;

  cplx det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  cplx trace() const { return m[0][0] + m[1][1]; }
  Mat2 conj_transpose() const;
  Mat2 adjugate() const;
  // relative singularity threshold 1e-13 * squared Frobenius norm
  Mat2 inverse() const;
  double fro_norm2() const;
  double max_abs() const;
  bool is_hermitian(double tol = 1e-14) const;
};

struct SpacetimePoint {
  double t = 0.0, x = 0.0, y = 0.0, z = 0.0;
};

// u = t+z, v = t-z, w = x+iy, wb = x-iy; matrix layout [[u,w],[wb,v]],
// so det of the matrix is the interval t^2-x^2-y^2-z^2.
struct SpinorCoords {
  cplx u{}, v{}, w{}, wb{};
};

using Spinor = std::array<cplx, 2>;

struct Twistor {
  Spinor xi{};
  Spinor tau{};
};

Mat2 hermitian_of_point(const SpacetimePoint& p);
// errors on input farther than tol from Hermitian
SpacetimePoint point_of_hermitian(const Mat2& X, double tol = 1e-12);

SpinorCoords spinor_coords(const SpacetimePoint& p);
Mat2 matrix_of_spinor_coords(const SpinorCoords& s);
SpinorCoords spinor_coords_of_matrix(const Mat2& Z);

// Effective Pauli basis adapted to the layout above: (1, s1, -s2, s3).
// A real 4-vector encodes as M = a0*sb0 + a1*sb1 + a2*sb2 + a3*sb3 and
// decodes as a_mu = tr(M*sb_mu)/2; this pairing is the one place the
// normalization is fixed.
Mat2 sigma_tilde(int mu);
CVec4 decode_vector(const Mat2& M);
Mat2 encode_vector(const CVec4& a);

// tau = X xi, the point-spinor incidence (no factor i)
Spinor incidence(const Mat2& X, const Spinor& xi);

// k = xi xi^dagger: Hermitian, rank <= 1, future-pointing time component
Mat2 null_vector(const Spinor& xi);

// Lorentz action by unimodular S (|det S - 1| < 1e-10, else error):
// points X -> S^+ X S, spinors xi -> S^-1 xi, covector matrices
// F -> S^-1 F (S^+)^-1. Interval and incidence are preserved.
Mat2 lorentz_point(const Mat2& S, const Mat2& X);
Spinor lorentz_spinor(const Mat2& S, const Spinor& xi);
Mat2 lorentz_covector(const Mat2& S, const Mat2& F);

}  // namespace adw
