#include "adw/biquat/biquat.hpp"

#include <cmath>

#include "adw/core/error.hpp"

namespace adw {

Mat2 Mat2::diag(cplx a, cplx b) {
  Mat2 r;
  r.m[0][0] = a;
  r.m[1][1] = b;
  return r;
}

Mat2 Mat2::operator+(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
  return r;
}

Mat2 Mat2::operator-(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
  return r;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
  return r;
}

Mat2 Mat2::operator*(cplx s) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] * s;
  return r;
}

Mat2 Mat2::conj_transpose() const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = std::conj(m[j][i]);
  return r;
}

Mat2 Mat2::adjugate() const {
  Mat2 r;
  r.m[0][0] = m[1][1];
  r.m[0][1] = -m[0][1];
  r.m[1][0] = -m[1][0];
  r.m[1][1] = m[0][0];
  return r;
}

double Mat2::fro_norm2() const {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += std::norm(m[i][j]);
  return s;
}

double Mat2::max_abs() const {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s = std::max(s, std::abs(m[i][j]));
  return s;
}

Mat2 Mat2::inverse() const {
  cplx d = det();
  if (std::abs(d) <= 1e-13 * fro_norm2())
    throw NumericalError("null divisor not invertible");
  return adjugate() * (1.0 / d);
}

bool Mat2::is_hermitian(double tol) const {
  double scale = 1.0 + max_abs();
  Mat2 h = conj_transpose();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (std::abs(m[i][j] - h.m[i][j]) > tol * scale) return false;
  return true;
}

Mat2 hermitian_of_point(const SpacetimePoint& p) {
  Mat2 X;
  X.m[0][0] = cplx(p.t + p.z, 0.0);
  X.m[0][1] = cplx(p.x, p.y);
  X.m[1][0] = cplx(p.x, -p.y);
  X.m[1][1] = cplx(p.t - p.z, 0.0);
  return X;
}

SpacetimePoint point_of_hermitian(const Mat2& X, double tol) {
  if (!X.is_hermitian(tol))
    throw Error("point_of_hermitian: matrix is not Hermitian");
  SpacetimePoint p;
  p.t = 0.5 * (X.m[0][0].real() + X.m[1][1].real());
  p.z = 0.5 * (X.m[0][0].real() - X.m[1][1].real());
  p.x = 0.5 * (X.m[0][1].real() + X.m[1][0].real());
  p.y = 0.5 * (X.m[0][1].imag() - X.m[1][0].imag());
  return p;
}

SpinorCoords spinor_coords(const SpacetimePoint& p) {
  SpinorCoords s;
  s.u = cplx(p.t + p.z, 0.0);
  s.v = cplx(p.t - p.z, 0.0);
  s.w = cplx(p.x, p.y);
  s.wb = cplx(p.x, -p.y);
  return s;
}

Mat2 matrix_of_spinor_coords(const SpinorCoords& s) {
  Mat2 Z;
  Z.m[0][0] = s.u;
  Z.m[0][1] = s.w;
  Z.m[1][0] = s.wb;
  Z.m[1][1] = s.v;
  return Z;
}

SpinorCoords spinor_coords_of_matrix(const Mat2& Z) {
  return {Z.m[0][0], Z.m[1][1], Z.m[0][1], Z.m[1][0]};
}

Mat2 sigma_tilde(int mu) {
  Mat2 s;
  switch (mu) {
    case 0:
      return Mat2::identity();
    case 1:
      s.m[0][1] = 1.0;
      s.m[1][0] = 1.0;
      return s;
    case 2:
      s.m[0][1] = kI;
      s.m[1][0] = -kI;
      return s;
    case 3:
      return Mat2::diag(1.0, -1.0);
    default:
      throw Error("sigma_tilde: index out of range");
  }
}

CVec4 decode_vector(const Mat2& M) {
  CVec4 a;
  for (int mu = 0; mu < 4; ++mu) a[mu] = 0.5 * (M * sigma_tilde(mu)).trace();
  return a;
}

Mat2 encode_vector(const CVec4& a) {
  Mat2 m;
  for (int mu = 0; mu < 4; ++mu) m = m + sigma_tilde(mu) * a[mu];
  return m;
}

Spinor incidence(const Mat2& X, const Spinor& xi) {
  return {X.m[0][0] * xi[0] + X.m[0][1] * xi[1],
          X.m[1][0] * xi[0] + X.m[1][1] * xi[1]};
}

Mat2 null_vector(const Spinor& xi) {
  if (std::norm(xi[0]) + std::norm(xi[1]) == 0.0)
    throw Error("null_vector: zero spinor");
  Mat2 k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.m[i][j] = xi[i] * std::conj(xi[j]);
  return k;
}

namespace {

void require_unimodular(const Mat2& S) {
  if (std::abs(S.det() - 1.0) >= 1e-10)
    throw Error("lorentz action requires a unimodular matrix");
}

}  // namespace

Mat2 lorentz_point(const Mat2& S, const Mat2& X) {
  require_unimodular(S);
  return S.conj_transpose() * X * S;
}

Spinor lorentz_spinor(const Mat2& S, const Spinor& xi) {
  require_unimodular(S);
  // unimodular inverse is the adjugate
  return incidence(S.adjugate(), xi);
}

Mat2 lorentz_covector(const Mat2& S, const Mat2& F) {
  require_unimodular(S);
  return S.adjugate() * F * S.conj_transpose().adjugate();
}

}  // namespace adw
