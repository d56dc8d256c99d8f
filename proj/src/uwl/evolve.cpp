#include "adw/uwl/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "adw/core/error.hpp"
#include "adw/numerics/resultant.hpp"

namespace adw {

namespace {

char classify(cplx sigma, double eps_real) {
  return std::abs(sigma.imag()) <= eps_real * (1.0 + std::abs(sigma)) ? 'R'
                                                                      : 'C';
}

SpacetimePoint real_point(const CVec4& p) {
  return {p[0].real(), p[1].real(), p[2].real(), p[3].real()};
}

}  // namespace

DupliconSet duplicons(const PolyWorldline& wl, const SpacetimePoint& X,
                      double eps_real, const Tolerances& tol) {
  DupliconSet out;
  out.lce_degree = 2 * wl.max_degree();
  RootSet rs = poly_roots(lce_polynomial(wl, X), out.lce_degree, tol);
  out.at_infinity = rs.at_infinity;
  for (const Root& r : rs.finite)
    for (int m = 0; m < r.multiplicity; ++m) {
      Duplicon d;
      d.sigma = r.value;
      d.cls = classify(r.value, eps_real);
      d.position = wl.position(r.value);
      d.velocity = wl.velocity(r.value);
      out.finite.push_back(d);
    }
  return out;
}

Spinor twistor_of_duplicon(const PolyWorldline& wl, const SpacetimePoint& X,
                           cplx sigma, const Tolerances& tol) {
  const double Xc[4] = {X.t, X.x, X.y, X.z};
  CVec4 d;
  CVec4 xs = wl.position(sigma);
  for (int mu = 0; mu < 4; ++mu) d[mu] = Xc[mu] - xs[mu];
  Mat2 M = encode_vector(d);

  double scale = M.fro_norm2();
  if (M.max_abs() <= 1e-10 * (1.0 + std::abs(X.t) + std::abs(sigma)))
    throw NumericalError("coincident point");
  if (std::abs(M.det()) > 1e-8 * (1.0 + scale))
    throw NumericalError("not on light cone");

  // adjugate columns span the kernel of a singular matrix
  Spinor a{M.m[1][1], -M.m[1][0]};
  Spinor b{-M.m[0][1], M.m[0][0]};
  double na = std::norm(a[0]) + std::norm(a[1]);
  double nb = std::norm(b[0]) + std::norm(b[1]);
  Spinor xi = na >= nb ? a : b;
  double n = std::sqrt(std::max(na, nb));
  if (n <= 1e-15 * (1.0 + std::sqrt(scale)))
    throw NumericalError("coincident point");
  xi[0] /= n;
  xi[1] /= n;
  int lead = std::abs(xi[0]) > 1e-14 ? 0 : 1;
  cplx phase = std::conj(xi[lead]) / std::abs(xi[lead]);
  xi[0] *= phase;
  xi[1] *= phase;
  (void)tol;
  return xi;
}

EvolveResult evolve(const PolyWorldline& wl, const PolyWorldline& observer,
                    double tau0, double tau1, int nsteps, double eps_real,
                    const Tolerances& tol) {
  if (!observer.is_real())
    throw ConfigError("observer worldline must be real");
  EvolveResult out;
  out.eps_real = eps_real;
  out.lce_degree = 2 * wl.max_degree();
  if (observer.max_degree() > 1) out.flags.push_back("non-inertial observer");

  auto obs_at = [&](double tau) { return real_point(observer.position(tau)); };
  auto family = [&](double tau) { return lce_polynomial(wl, obs_at(tau)); };

  RootTrackResult tr =
      track_roots(family, tau0, tau1, nsteps, out.lce_degree, tol);

  bool on_worldline = false;
  for (const TrackStep& step : tr.steps) {
    out.tau.push_back(step.t);
    SpacetimePoint X = obs_at(step.t);
    const double Xc[4] = {X.t, X.x, X.y, X.z};
    double xscale =
        1.0 + std::max({std::abs(X.t), std::abs(X.x), std::abs(X.y),
                        std::abs(X.z)});
    std::vector<TrajectorySample> row;
    for (const TrackedRoot& r : step.roots) {
      TrajectorySample s;
      s.tau = step.t;
      s.sigma = r.value;
      s.at_infinity = r.at_infinity;
      if (r.at_infinity) {
        s.cls = 'I';
      } else {
        s.cls = classify(r.value, eps_real);
        s.position = wl.position(r.value);
        double gap = 0.0;
        for (int mu = 0; mu < 4; ++mu)
          gap = std::max(gap, std::abs(s.position[mu] - Xc[mu]));
        if (gap <= 1e-9 * xscale) on_worldline = true;
      }
      row.push_back(s);
    }
    out.steps.push_back(std::move(row));
  }
  if (on_worldline) out.flags.push_back("observer on worldline");

  // trajectories by persistent label
  for (int lab = 0; lab < out.lce_degree; ++lab) {
    Trajectory t;
    t.label = lab;
    for (size_t s = 0; s < tr.steps.size(); ++s)
      for (size_t k = 0; k < tr.steps[s].roots.size(); ++k)
        if (tr.steps[s].roots[k].label == lab)
          t.samples.push_back(out.steps[s][k]);
    if (!t.samples.empty()) out.trajectories.push_back(std::move(t));
  }

  auto sample_at = [&](size_t step, int label) -> const TrajectorySample* {
    for (size_t k = 0; k < tr.steps[step].roots.size(); ++k)
      if (tr.steps[step].roots[k].label == label) return &out.steps[step][k];
    return nullptr;
  };

  for (const TrackEvent& te : tr.events) {
    UwlEvent ev;
    ev.tau = te.t;
    ev.labels = te.labels;
    if (te.kind != "collision") {
      ev.kind = te.kind;
      out.events.push_back(std::move(ev));
      continue;
    }

    // bracketing samples clear of the event time; a grid point landing
    // exactly on the degenerate parameter would report the double root
    // as real and skew the classes
    double h = out.tau.size() > 1 ? out.tau[1] - out.tau[0] : 0.0;
    size_t lo = 0, hi = out.tau.size() - 1;
    for (size_t s = 0; s < out.tau.size(); ++s)
      if (out.tau[s] < te.t - 0.25 * h) lo = s;
    for (size_t s = out.tau.size(); s-- > 0;)
      if (out.tau[s] > te.t + 0.25 * h) hi = s;
    if (hi <= lo) hi = std::min(lo + 1, out.tau.size() - 1);

    // classification from the surrounding samples
    int nR_before = 0, nC_after = 0, seen = 0;
    for (int lab : te.labels) {
      const TrajectorySample* sb = sample_at(lo, lab);
      const TrajectorySample* sa = sample_at(hi, lab);
      if (!sb || !sa) continue;
      ++seen;
      if (sb->cls == 'R') ++nR_before;
      if (sa->cls == 'C') ++nC_after;
    }
    if (seen == 2 && nR_before == 2 && nC_after == 2)
      ev.kind = "annihilation";
    else if (seen == 2 && nR_before == 0 && nC_after == 0)
      ev.kind = "creation";
    else
      ev.kind = "merge";

    // sharpen on a discriminant sign change when one brackets the cell
    double tstar = te.t;
    if (hi > lo) {
      try {
        double a = out.tau[lo], b = out.tau[hi];
        double da = discriminant(family(a)).real();
        double db = discriminant(family(b)).real();
        if (da * db < 0.0) {
          for (int it = 0; it < 80 && (b - a) > 1e-13 * (1.0 + std::abs(b));
               ++it) {
            double m = 0.5 * (a + b);
            double dm = discriminant(family(m)).real();
            if (da * dm <= 0.0) {
              b = m;
              db = dm;
            } else {
              a = m;
              da = dm;
            }
          }
          tstar = 0.5 * (a + b);
        }
      } catch (const Error&) {
        // degree drop in the cell; keep the tracker's estimate
      }
    }
    ev.tau = tstar;

    // merged root location: the family root nearest the colliding pair
    cplx guess = 0.0;
    int nguess = 0;
    for (int lab : te.labels) {
      const TrajectorySample* sb = sample_at(lo, lab);
      if (sb && !sb->at_infinity) {
        guess += sb->sigma;
        ++nguess;
      }
    }
    if (nguess > 0) guess /= static_cast<double>(nguess);
    try {
      RootSet rs = poly_roots(family(tstar), out.lce_degree, tol);
      const Root* best = nullptr;
      for (const Root& r : rs.finite)
        if (!best || std::abs(r.value - guess) < std::abs(best->value - guess))
          best = &r;
      if (best) {
        ev.location = wl.position(best->value);
        PhotonRecord ph;
        ph.tau = tstar;
        ph.from = real_point(ev.location);
        ph.to = obs_at(tstar);
        CVec4 d;
        CVec4 loc = ev.location;
        const SpacetimePoint& T = ph.to;
        const double Tc[4] = {T.t, T.x, T.y, T.z};
        for (int mu = 0; mu < 4; ++mu) d[mu] = Tc[mu] - loc[mu];
        ph.null_defect = std::abs(mdot(d, d));
        out.photons.push_back(ph);
      }
    } catch (const Error&) {
      // location refinement is best-effort
    }
    out.events.push_back(std::move(ev));
  }

  std::sort(out.events.begin(), out.events.end(),
            [](const UwlEvent& a, const UwlEvent& b) { return a.tau < b.tau; });
  std::sort(out.photons.begin(), out.photons.end(),
            [](const PhotonRecord& a, const PhotonRecord& b) {
              return a.tau < b.tau;
            });
  return out;
}

ConservationReport conservation_report(const EvolveResult& evo,
                                       const PolyWorldline& wl,
                                       const PolyWorldline& observer) {
  ConservationReport rep;
  rep.eps_real = evo.eps_real;
  rep.inertial = observer.max_degree() <= 1;
  rep.tau = evo.tau;

  const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

  for (size_t s = 0; s < evo.steps.size(); ++s) {
    double tau = evo.tau[s];
    CVec4 X = observer.position(tau);
    CVec4 Xdot = observer.velocity(tau);

    CVec4 mom{}, mom_r{};
    std::array<cplx, 6> ang{}, ang_r{};
    cplx kin = 0.0, kin_r = 0.0;

    for (const TrajectorySample& smp : evo.steps[s]) {
      if (smp.at_infinity) {
        rep.complete = false;
        continue;
      }
      CVec4 x = smp.position;
      CVec4 v = wl.velocity(smp.sigma);
      CVec4 d;
      for (int mu = 0; mu < 4; ++mu) d[mu] = X[mu] - x[mu];
      cplx Dsig = mdot(d, v) * -2.0;
      if (std::abs(Dsig) < 1e-250) {
        rep.complete = false;
        continue;
      }
      cplx sigdot = mdot(Xdot, d) * 2.0 / Dsig;

      CVec4 xdot;
      for (int mu = 0; mu < 4; ++mu) xdot[mu] = v[mu] * sigdot;
      cplx k = 0.5 * (xdot[1] * xdot[1] + xdot[2] * xdot[2] +
                      xdot[3] * xdot[3]);

      for (int mu = 0; mu < 4; ++mu) mom[mu] += xdot[mu];
      for (int p = 0; p < 6; ++p) {
        int mu = pairs[p][0], nu = pairs[p][1];
        ang[p] += xdot[mu] * x[nu] - xdot[nu] * x[mu];
      }
      kin += k;
      if (smp.cls == 'R') {
        for (int mu = 0; mu < 4; ++mu) mom_r[mu] += xdot[mu];
        for (int p = 0; p < 6; ++p) {
          int mu = pairs[p][0], nu = pairs[p][1];
          ang_r[p] += xdot[mu] * x[nu] - xdot[nu] * x[mu];
        }
        kin_r += k;
      }
    }
    rep.momentum.push_back(mom);
    rep.momentum_real.push_back(mom_r);
    rep.angmom.push_back(ang);
    rep.angmom_real.push_back(ang_r);
    rep.kinetic.push_back(kin);
    rep.kinetic_real.push_back(kin_r);
  }

  for (size_t s = 0; s < rep.tau.size(); ++s) {
    for (int mu = 0; mu < 4; ++mu)
      rep.max_momentum_dev =
          std::max(rep.max_momentum_dev,
                   std::abs(rep.momentum[s][mu] - rep.momentum[0][mu]));
    for (int p = 0; p < 6; ++p)
      rep.max_angmom_dev = std::max(
          rep.max_angmom_dev, std::abs(rep.angmom[s][p] - rep.angmom[0][p]));
    rep.max_kinetic_dev = std::max(rep.max_kinetic_dev,
                                   std::abs(rep.kinetic[s] - rep.kinetic[0]));
  }
  return rep;
}

ClusterMetrics cluster_metrics(
    const std::vector<double>& tau,
    const std::vector<std::vector<std::array<double, 3>>>& positions,
    double pair_threshold, double cluster_radius) {
  ClusterMetrics out;
  out.tau = tau;
  for (const auto& pts : positions) {
    size_t n = pts.size();
    auto dist = [&](size_t i, size_t j) {
      double s = 0.0;
      for (int a = 0; a < 3; ++a) {
        double d = pts[i][a] - pts[j][a];
        s += d * d;
      }
      return std::sqrt(s);
    };

    double minp = std::numeric_limits<double>::infinity();
    int npair = 0;
    std::vector<double> nn(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };

    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        double d = dist(i, j);
        minp = std::min(minp, d);
        nn[i] = std::min(nn[i], d);
        nn[j] = std::min(nn[j], d);
        if (d <= pair_threshold) ++npair;
        if (d <= cluster_radius) parent[find(i)] = find(j);
      }

    int nclus = 0;
    for (size_t i = 0; i < n; ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++nclus;

    out.min_pair.push_back(minp);
    out.pair_count.push_back(npair);
    out.clusters.push_back(nclus);
    out.nn_dist.push_back(std::move(nn));
  }
  return out;
}

}  // namespace adw
