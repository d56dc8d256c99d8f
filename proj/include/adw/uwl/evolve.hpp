#pragma once

#include <string>
#include <vector>

#include "adw/numerics/root_track.hpp"
#include "adw/numerics/roots.hpp"
#include "adw/uwl/worldline.hpp"

namespace adw {

// One light-cone root of an observation event, classified real (R) when
// |Im sigma| <= eps_real * (1 + |sigma|), complex (C) otherwise.
struct Duplicon {
  cplx sigma{};
  char cls = 'R';
  CVec4 position{};
  CVec4 velocity{};  // d x / d sigma
};

struct DupliconSet {
  std::vector<Duplicon> finite;  // multiplicity expanded
  int at_infinity = 0;
  int lce_degree = 0;  // generic degree, 2 * max coordinate degree
};

DupliconSet duplicons(const PolyWorldline& wl, const SpacetimePoint& X,
                      double eps_real = 1e-9,
                      const Tolerances& tol = default_tol());

// Kernel spinor of X - x(sigma) for an on-cone parameter value, normalized
// to unit length with the first nonzero component real positive.
// Off-cone input (|det| > bispinor budget) raises "not on light cone";
// the zero matrix raises "coincident point".
Spinor twistor_of_duplicon(const PolyWorldline& wl, const SpacetimePoint& X,
                           cplx sigma, const Tolerances& tol = default_tol());

struct TrajectorySample {
  double tau = 0.0;
  cplx sigma{};
  bool at_infinity = false;
  char cls = 'R';
  CVec4 position{};
};

struct Trajectory {
  int label = -1;
  std::vector<TrajectorySample> samples;
};

// kind: "annihilation" (R pair to conjugate C pair), "creation" (the
// reverse), or "merge" (any other root collision)
struct UwlEvent {
  double tau = 0.0;
  std::string kind;
  std::vector<int> labels;
  CVec4 location{};
};

// Null ray from a merge location to the observer event that sees it.
struct PhotonRecord {
  double tau = 0.0;
  SpacetimePoint from{}, to{};
  double null_defect = 0.0;
};

struct EvolveResult {
  std::vector<double> tau;
  std::vector<std::vector<TrajectorySample>> steps;  // per tau, by label order
  std::vector<Trajectory> trajectories;
  std::vector<UwlEvent> events;
  std::vector<PhotonRecord> photons;
  std::vector<std::string> flags;
  int lce_degree = 0;
  double eps_real = 1e-9;
};

// Tracks the light-cone roots seen by the observer across tau in
// [tau0, tau1]. Collision times are sharpened by bisection on the LCE
// discriminant when it changes sign across the bracketing grid cell.
// A degree > 1 observer is allowed but the run is flagged diagnostic-only;
// a sampled duplicon coinciding with the observer position flags
// "observer on worldline". The observer worldline must have real
// coefficients.
EvolveResult evolve(const PolyWorldline& wl, const PolyWorldline& observer,
                    double tau0, double tau1, int nsteps,
                    double eps_real = 1e-9,
                    const Tolerances& tol = default_tol());

// Root-sum time series over the full root set, with real-class subtotals.
// Velocities are with respect to observer time, x'(sigma) dsigma/dtau with
// dsigma/dtau taken from the implicit light-cone constraint. The kinetic
// sum is an interpretation, not an asserted conservation law.
struct ConservationReport {
  std::vector<double> tau;
  std::vector<CVec4> momentum, momentum_real;
  // independent components ordered (01, 02, 03, 12, 13, 23)
  std::vector<std::array<cplx, 6>> angmom, angmom_real;
  std::vector<cplx> kinetic, kinetic_real;
  double max_momentum_dev = 0.0, max_angmom_dev = 0.0, max_kinetic_dev = 0.0;
  bool complete = true;
  bool inertial = true;
  bool kinetic_is_interpretation = true;
  double eps_real = 1e-9;
};

ConservationReport conservation_report(const EvolveResult& evo,
                                       const PolyWorldline& wl,
                                       const PolyWorldline& observer);

// Pairing and single-linkage clustering statistics of real-duplicon
// positions per step.
struct ClusterMetrics {
  std::vector<double> tau;
  std::vector<double> min_pair;               // infinity below two points
  std::vector<int> pair_count;                // pairs within pair_threshold
  std::vector<int> clusters;                  // at cluster_radius
  std::vector<std::vector<double>> nn_dist;   // per-point nearest neighbour
};

ClusterMetrics cluster_metrics(
    const std::vector<double>& tau,
    const std::vector<std::vector<std::array<double, 3>>>& positions,
    double pair_threshold, double cluster_radius);

}  // namespace adw
