#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace adw {

using cplx = std::complex<double>;
using CVec4 = std::array<cplx, 4>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Minkowski metric diag(+,-,-,-); index 0 is time.
inline constexpr std::array<double, 4> kEta{1.0, -1.0, -1.0, -1.0};

inline cplx mdot(const CVec4& a, const CVec4& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

}  // namespace adw
