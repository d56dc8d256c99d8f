#include "adw/cli/render.hpp"

#include <algorithm>
#include <cmath>

#include "adw/cli/formats.hpp"
#include "adw/core/error.hpp"

namespace adw {

std::vector<SphereSample> screw_sphere_samples(double radius, int ntheta,
                                               int nphi) {
  if (radius <= 0.0) throw ConfigError("render radius must be positive");
  if (ntheta < 1 || nphi < 1)
    throw ConfigError("render grid sizes must be positive");
  std::vector<SphereSample> out;
  out.reserve(static_cast<size_t>(ntheta) * nphi);
  for (int j = 0; j < ntheta; ++j) {
    double theta = kPi * (j + 0.5) / ntheta;
    double st = std::sin(theta), ct = std::cos(theta);
    double c2 = std::cos(theta / 2.0);
    for (int k = 0; k < nphi; ++k) {
      double phi = 2.0 * kPi * k / nphi;
      double sp = std::sin(phi), cp = std::cos(phi);
      cplx ctheta = std::exp(kI * phi) / (radius * c2 * c2);
      std::array<double, 3> that{ct * cp, ct * sp, -st};
      std::array<double, 3> phat{-sp, cp, 0.0};
      SphereSample s;
      s.theta = theta;
      s.phi = phi;
      for (int a = 0; a < 3; ++a)
        s.E[a] = 0.5 * ctheta * (that[a] + kI * phat[a]);
      out.push_back(s);
    }
  }
  return out;
}

std::vector<QuiverArrow> quiver_arrows(const std::vector<SphereSample>& samples,
                                       double radius) {
  if (samples.empty()) throw ConfigError("no field samples to render");
  if (radius <= 0.0) throw ConfigError("render radius must be positive");
  std::vector<QuiverArrow> out;
  for (const SphereSample& s : samples) {
    if (s.theta > kPi - 0.1) continue;  // singular half-axis neighborhood
    double st = std::sin(s.theta), ct = std::cos(s.theta);
    double sp = std::sin(s.phi), cp = std::cos(s.phi);
    std::array<double, 3> rhat{st * cp, st * sp, ct};
    std::array<double, 3> that{ct * cp, ct * sp, -st};
    std::array<double, 3> phat{-sp, cp, 0.0};

    cplx er = s.E[0] * rhat[0] + s.E[1] * rhat[1] + s.E[2] * rhat[2];
    std::array<double, 3> re{s.E[0].real(), s.E[1].real(), s.E[2].real()};
    double rer = re[0] * rhat[0] + re[1] * rhat[1] + re[2] * rhat[2];
    std::array<double, 3> tang;
    for (int a = 0; a < 3; ++a) tang[a] = re[a] - rer * rhat[a];

    QuiverArrow q;
    q.theta = s.theta;
    q.phi = s.phi;
    q.px = radius * st * cp;
    q.py = radius * st * sp;
    q.ax = tang[0];
    q.ay = tang[1];
    q.frame_angle =
        std::atan2(re[0] * phat[0] + re[1] * phat[1] + re[2] * phat[2],
                   re[0] * that[0] + re[1] * that[1] + re[2] * that[2]);
    q.radial = std::abs(er);
    q.near_side = ct >= 0.0;
    out.push_back(q);
  }
  return out;
}

void render_polarization(const std::vector<SphereSample>& samples,
                         double radius, const std::string& path) {
  std::vector<QuiverArrow> arrows = quiver_arrows(samples, radius);

  double maxlen = 0.0;
  for (const QuiverArrow& q : arrows)
    maxlen = std::max(maxlen, std::hypot(q.ax, q.ay));
  double scale = maxlen > 0.0 ? 0.09 * radius / maxlen : 0.0;

  double box = 1.15 * radius;
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"640\" viewBox=\"" +
         fmt17(-box) + " " + fmt17(-box) + " " + fmt17(2 * box) + " " +
         fmt17(2 * box) + "\">\n";
  svg += "<rect x=\"" + fmt17(-box) + "\" y=\"" + fmt17(-box) + "\" width=\"" +
         fmt17(2 * box) + "\" height=\"" + fmt17(2 * box) +
         "\" fill=\"#ffffff\"/>\n";
  svg += "<circle cx=\"0\" cy=\"0\" r=\"" + fmt17(radius) +
         "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"" +
         fmt17(0.004 * radius) + "\"/>\n";

  auto emit = [&](const QuiverArrow& q, const char* color) {
    double len = std::hypot(q.ax, q.ay);
    if (scale == 0.0 || len <= 1e-14 * maxlen) return;
    double dx = scale * q.ax, dy = scale * q.ay;
    // screen y points down
    double x1 = q.px, y1 = -q.py, x2 = q.px + dx, y2 = -(q.py + dy);
    double ux = (x2 - x1) / std::hypot(x2 - x1, y2 - y1);
    double uy = (y2 - y1) / std::hypot(x2 - x1, y2 - y1);
    double head = 0.35 * std::hypot(dx, dy);
    double hx1 = x2 - head * (ux + 0.5 * -uy), hy1 = y2 - head * (uy + 0.5 * ux);
    double hx2 = x2 - head * (ux - 0.5 * -uy), hy2 = y2 - head * (uy - 0.5 * ux);
    svg += "<line x1=\"" + fmt17(x1) + "\" y1=\"" + fmt17(y1) + "\" x2=\"" +
           fmt17(x2) + "\" y2=\"" + fmt17(y2) + "\" stroke=\"" + color +
           "\" stroke-width=\"" + fmt17(0.006 * radius) + "\"/>\n";
    svg += "<polygon points=\"" + fmt17(x2) + "," + fmt17(y2) + " " +
           fmt17(hx1) + "," + fmt17(hy1) + " " + fmt17(hx2) + "," + fmt17(hy2) +
           "\" fill=\"" + color + "\"/>\n";
  };

  for (const QuiverArrow& q : arrows)
    if (!q.near_side) emit(q, "#b8c2cc");
  for (const QuiverArrow& q : arrows)
    if (q.near_side) emit(q, "#1f4e8c");

  svg += "</svg>\n";
  write_text_file(path, svg);
}

}  // namespace adw
