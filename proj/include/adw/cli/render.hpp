#pragma once

#include <array>
#include <string>
#include <vector>

#include "adw/core/types.hpp"

namespace adw {

// One electric-field sample on a sphere, cartesian components.
struct SphereSample {
  double theta = 0.0, phi = 0.0;
  std::array<cplx, 3> E{};
};

// The rotating-polarization field on a sphere of the given radius:
// C_theta = e^{i phi} / (r cos^2(theta/2)), C_phi = i C_theta, C_r = 0,
// sampled at cell-centered theta rows and uniform phi columns.
std::vector<SphereSample> screw_sphere_samples(double radius, int ntheta,
                                               int nphi);

struct QuiverArrow {
  double theta = 0.0, phi = 0.0;
  double px = 0.0, py = 0.0;   // orthographic +z screen position
  double ax = 0.0, ay = 0.0;   // projected tangent Re(E)
  double frame_angle = 0.0;    // atan2(ReE . phi^, ReE . theta^)
  double radial = 0.0;         // |E . r^|
  bool near_side = true;       // z >= 0 hemisphere
};

// Arrow records for the quiver: Re(E) projected on the tangent plane, the
// singular half-axis neighborhood theta > pi - 0.1 excluded. Pure and
// deterministic; the SVG writer consumes exactly this.
std::vector<QuiverArrow> quiver_arrows(const std::vector<SphereSample>& samples,
                                       double radius);

// Orthographic quiver figure. Byte-identical output for identical input;
// a zero field renders the sphere rim with no arrows.
void render_polarization(const std::vector<SphereSample>& samples,
                         double radius, const std::string& path);

}  // namespace adw
