#include "adw/numerics/root_track.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "adw/core/error.hpp"
#include "adw/numerics/roots.hpp"

namespace adw {

double chordal_dist(cplx a, bool a_inf, cplx b, bool b_inf) {
  if (a_inf && b_inf) return 0.0;
  if (a_inf) return 1.0 / std::sqrt(1.0 + std::norm(b));
  if (b_inf) return 1.0 / std::sqrt(1.0 + std::norm(a));
  return std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

namespace {

std::vector<TrackedRoot> unlabeled_roots(const CPoly& p, int nominal,
                                         const Tolerances& tol) {
  RootSet rs = poly_roots(p, nominal, tol);
  std::vector<TrackedRoot> out;
  for (const Root& r : rs.finite)
    for (int k = 0; k < r.multiplicity; ++k) out.push_back({r.value, false, -1});
  for (int k = 0; k < rs.at_infinity; ++k) out.push_back({cplx{}, true, -1});
  return out;
}

std::vector<std::pair<cplx, bool>> as_sphere_points(const std::vector<TrackedRoot>& v) {
  std::vector<std::pair<cplx, bool>> out;
  out.reserve(v.size());
  for (const TrackedRoot& r : v) out.emplace_back(r.value, r.at_infinity);
  return out;
}

std::vector<int> match_roots(const std::vector<TrackedRoot>& prev,
                             const std::vector<TrackedRoot>& cur) {
  return chordal_match(as_sphere_points(prev), as_sphere_points(cur));
}

}  // namespace

std::vector<int> chordal_match(const std::vector<std::pair<cplx, bool>>& a,
                               const std::vector<std::pair<cplx, bool>>& b) {
  if (a.size() != b.size()) throw Error("chordal_match: size mismatch");
  const int n = static_cast<int>(a.size());
  auto cost = [&](int i, int j) {
    return chordal_dist(a[i].first, a[i].second, b[j].first, b[j].second);
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n <= 8) {
    std::vector<int> best = perm;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
      double c = 0.0;
      for (int i = 0; i < n && c < best_cost; ++i) c += cost(i, perm[i]);
      if (c < best_cost) {
        best_cost = c;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }
  std::vector<int> match(n, -1);
  std::vector<bool> a_used(n, false), b_used(n, false);
  for (int round = 0; round < n; ++round) {
    double best = std::numeric_limits<double>::infinity();
    int bi = -1, bj = -1;
    for (int i = 0; i < n; ++i) {
      if (a_used[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (b_used[j]) continue;
        if (cost(i, j) < best) {
          best = cost(i, j);
          bi = i;
          bj = j;
        }
      }
    }
    a_used[bi] = true;
    b_used[bj] = true;
    match[bi] = bj;
  }
  return match;
}

RootTrackResult track_roots(const std::function<CPoly(double)>& family, double t0,
                            double t1, int nsteps, int nominal_degree,
                            const Tolerances& tol) {
  if (nsteps < 1) throw Error("track_roots: need at least one step");
  RootTrackResult out;

  auto labeled_at = [&](double t, const std::vector<TrackedRoot>* prev) {
    std::vector<TrackedRoot> cur = unlabeled_roots(family(t), nominal_degree, tol);
    if (!prev) {
      std::sort(cur.begin(), cur.end(), [](const TrackedRoot& a, const TrackedRoot& b) {
        if (a.at_infinity != b.at_infinity) return b.at_infinity;
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
      });
      for (size_t i = 0; i < cur.size(); ++i) cur[i].label = static_cast<int>(i);
      return cur;
    }
    std::vector<int> match = match_roots(*prev, cur);
    for (size_t i = 0; i < match.size(); ++i) cur[match[i]].label = (*prev)[i].label;
    return cur;
  };

  std::vector<TrackedRoot> prev = labeled_at(t0, nullptr);
  out.steps.push_back({t0, prev});

  auto find_label = [](const std::vector<TrackedRoot>& v, int label) {
    for (const TrackedRoot& r : v)
      if (r.label == label) return r;
    throw Error("track_roots: label lost during matching");
  };

  for (int s = 1; s <= nsteps; ++s) {
    double t = t0 + (t1 - t0) * s / nsteps;
    std::vector<TrackedRoot> cur = labeled_at(t, &prev);

    for (const TrackedRoot& pr : prev) {
      TrackedRoot cr = find_label(cur, pr.label);
      if (!pr.at_infinity && cr.at_infinity)
        out.events.push_back({"to_infinity", t, {pr.label}});
      else if (pr.at_infinity && !cr.at_infinity)
        out.events.push_back({"from_infinity", t, {pr.label}});
    }

    // Collision: a pair of finite roots separated less than collision_eps now
    // but not at the previous step. Refine the meeting parameter by ternary
    // search on the tracked pair separation.
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[i].at_infinity || cur[j].at_infinity) continue;
        double d_now = std::abs(cur[i].value - cur[j].value);
        if (d_now > tol.collision_eps) continue;
        TrackedRoot pi = find_label(prev, cur[i].label);
        TrackedRoot pj = find_label(prev, cur[j].label);
        if (pi.at_infinity || pj.at_infinity) continue;
        if (std::abs(pi.value - pj.value) <= tol.collision_eps) continue;

        auto sep = [&](double tt) {
          std::vector<TrackedRoot> at = labeled_at(tt, &prev);
          TrackedRoot a = find_label(at, cur[i].label);
          TrackedRoot b = find_label(at, cur[j].label);
          if (a.at_infinity || b.at_infinity)
            return std::numeric_limits<double>::infinity();
          return std::abs(a.value - b.value);
        };
        double lo = t - (t1 - t0) / nsteps, hi = t;
        for (int it = 0; it < 80 && hi - lo > 1e-13 * (1.0 + std::abs(hi)); ++it) {
          double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
          if (sep(m1) < sep(m2))
            hi = m2;
          else
            lo = m1;
        }
        int la = std::min(cur[i].label, cur[j].label);
        int lb = std::max(cur[i].label, cur[j].label);
        out.events.push_back({"collision", 0.5 * (lo + hi), {la, lb}});
      }
    }

    out.steps.push_back({t, cur});
    prev = std::move(cur);
  }
  return out;
}

}  // namespace adw
