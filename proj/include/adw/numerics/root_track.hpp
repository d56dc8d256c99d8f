#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adw/core/tolerances.hpp"
#include "adw/core/types.hpp"
#include "adw/numerics/cpoly.hpp"

namespace adw {

// Distance on the Riemann sphere; infinite points are handled uniformly.
double chordal_dist(cplx a, bool a_inf, cplx b, bool b_inf);

// Minimum-cost pairing between two equal-size root lists on the sphere,
// (value, at_infinity) per entry. Returns match[i] = index in b paired with
// a[i]. Exhaustive for up to 8 roots, greedy beyond.
std::vector<int> chordal_match(const std::vector<std::pair<cplx, bool>>& a,
                               const std::vector<std::pair<cplx, bool>>& b);

struct TrackedRoot {
  cplx value{};
  bool at_infinity = false;
  int label = -1;
};

struct TrackStep {
  double t = 0.0;
  std::vector<TrackedRoot> roots;
};

struct TrackEvent {
  // kind: "collision", "to_infinity", "from_infinity"
  std::string kind;
  double t = 0.0;
  std::vector<int> labels;
};

struct RootTrackResult {
  std::vector<TrackStep> steps;
  std::vector<TrackEvent> events;
};

// Follows the labeled root set of family(t) across [t0, t1] in nsteps
// increments. Labels persist via nearest-neighbour matching in the chordal
// metric (optimal assignment up to 8 roots, greedy beyond). Collisions are
// refined by ternary search on the pair separation.
RootTrackResult track_roots(const std::function<CPoly(double)>& family, double t0,
                            double t1, int nsteps, int nominal_degree,
                            const Tolerances& tol = default_tol());

}  // namespace adw
