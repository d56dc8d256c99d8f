#include "adw/uwl/implicit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "adw/core/error.hpp"
#include "adw/numerics/parse.hpp"
#include "adw/numerics/resultant.hpp"
#include "adw/numerics/roots.hpp"

namespace adw {

ImplicitUWL make_implicit(const std::array<MultiPoly, 3>& F) {
  for (const MultiPoly& f : F) {
    if (f.nvars() != 4)
      throw ConfigError("implicit system must use variables (t, x, y, z)");
    if (f.is_zero()) throw ConfigError("implicit constraint must be nonzero");
    if (f.total_degree() > 4)
      throw ConfigError("implicit constraint degree exceeds 4");
  }
  return ImplicitUWL{F};
}

ImplicitUWL parse_implicit(const std::array<std::string, 3>& exprs) {
  std::array<MultiPoly, 3> F;
  for (int a = 0; a < 3; ++a)
    F[a] = parse_poly(exprs[a], {"t", "x", "y", "z"});
  return make_implicit(F);
}

namespace {

struct Stage {
  std::vector<MultiPoly> with_var;  // back-substitution sources
  std::vector<MultiPoly> next;      // polynomials free of the variable
};

Stage eliminate_stage(const std::vector<MultiPoly>& polys, int var) {
  Stage st;
  for (const MultiPoly& p : polys)
    (p.degree_in(var) > 0 ? st.with_var : st.next).push_back(p);
  if (st.with_var.empty()) throw NumericalError("non-generic system");
  for (size_t k = 1; k < st.with_var.size(); ++k) {
    MultiPoly r = eliminate(st.with_var[0], st.with_var[k], var).pruned(1e-13);
    if (r.is_zero()) throw NumericalError("non-generic system");
    st.next.push_back(r);
  }
  if (st.next.empty()) throw NumericalError("non-generic system");
  return st;
}

struct Chain {
  std::vector<MultiPoly> G;       // constraints at fixed t
  std::vector<MultiPoly> zpolys;  // contain z
  std::vector<MultiPoly> ypolys;  // z-free, contain y
  CPoly xpoly;
};

Chain build_chain(const ImplicitUWL& sys, double t) {
  Chain ch;
  for (const MultiPoly& f : sys.F) {
    MultiPoly g = f.substitute(0, cplx(t)).pruned(1e-14);
    if (g.is_zero()) throw NumericalError("non-generic system");
    ch.G.push_back(g);
  }
  Stage sz = eliminate_stage(ch.G, 3);
  Stage sy = eliminate_stage(sz.next, 2);
  ch.zpolys = sz.with_var;
  ch.ypolys = sy.with_var;
  for (const MultiPoly& p : sy.next)
    if (p.degree_in(1) > 0) {
      ch.xpoly = p.to_cpoly(1);
      break;
    }
  return ch;
}

// roots in `var` of the first polynomial that survives the substitutions
std::vector<cplx> back_roots(const std::vector<MultiPoly>& polys, int var,
                             const std::vector<std::pair<int, cplx>>& fixed,
                             const Tolerances& tol) {
  for (const MultiPoly& p0 : polys) {
    MultiPoly p = p0;
    for (const auto& [v, val] : fixed) p = p.substitute(v, val);
    p = p.pruned(1e-12);
    if (p.degree_in(var) <= 0) continue;
    RootSet rs = poly_roots(p.to_cpoly(var), -1, tol);
    std::vector<cplx> out;
    for (const Root& r : rs.finite) out.push_back(r.value);
    return out;
  }
  return {};
}

}  // namespace

std::vector<ImplicitRoot> implicit_roots(const ImplicitUWL& sys, double t,
                                         double eps_real,
                                         const Tolerances& tol) {
  Chain ch = build_chain(sys, t);
  if (ch.xpoly.is_zero()) {
    // the reduced system has no x dependence: nonzero constants mean an
    // empty solution set, anything else is degenerate
    for (const MultiPoly& p : ch.G)
      if (p.total_degree() > 0) return {};
    throw NumericalError("non-generic system");
  }

  std::vector<ImplicitRoot> out;
  RootSet rx = poly_roots(ch.xpoly, -1, tol);
  for (const Root& rxv : rx.finite) {
    cplx xv = rxv.value;
    std::vector<cplx> ys = back_roots(ch.ypolys, 2, {{1, xv}}, tol);
    if (ys.empty()) throw NumericalError("non-generic system");
    for (cplx yv : ys) {
      std::vector<cplx> zs =
          back_roots(ch.zpolys, 3, {{1, xv}, {2, yv}}, tol);
      if (zs.empty()) throw NumericalError("non-generic system");
      for (cplx zv : zs) {
        // Newton polish on the full system
        cplx X[3] = {xv, yv, zv};
        for (int it = 0; it < 3; ++it) {
          Eigen::Matrix3cd J;
          Eigen::Vector3cd Fv;
          std::vector<cplx> at{0.0, X[0], X[1], X[2]};
          for (int a = 0; a < 3; ++a) {
            Fv(a) = ch.G[a].eval(at);
            for (int v = 0; v < 3; ++v)
              J(a, v) = ch.G[a].derivative(v + 1).eval(at);
          }
          if (std::abs(J.determinant()) < 1e-14) break;
          Eigen::Vector3cd dX = J.partialPivLu().solve(Fv);
          for (int v = 0; v < 3; ++v) X[v] -= dX(v);
        }

        double residual = 0.0;
        std::vector<cplx> at{0.0, X[0], X[1], X[2]};
        for (const MultiPoly& g : ch.G)
          residual = std::max(residual, std::abs(g.eval(at)));
        double budget = 0.0;
        for (const MultiPoly& f : sys.F)
          budget = std::max(budget, 1e-8 * (1.0 + f.max_abs_coeff()));
        if (residual > budget) continue;

        ImplicitRoot root;
        root.xyz = {X[0], X[1], X[2]};
        root.residual = residual;
        root.cls = 'R';
        for (const cplx& c : root.xyz)
          if (std::abs(c.imag()) > eps_real * (1.0 + std::abs(c)))
            root.cls = 'C';

        bool dup = false;
        for (const ImplicitRoot& o : out) {
          double d = 0.0, s = 1.0;
          for (int v = 0; v < 3; ++v) {
            d = std::max(d, std::abs(o.xyz[v] - root.xyz[v]));
            s = std::max(s, std::abs(root.xyz[v]));
          }
          if (d <= 1e-7 * s) {
            dup = true;
            break;
          }
        }
        if (!dup) out.push_back(root);
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const ImplicitRoot& a, const ImplicitRoot& b) {
              for (int v = 0; v < 3; ++v) {
                if (a.xyz[v].real() != b.xyz[v].real())
                  return a.xyz[v].real() < b.xyz[v].real();
                if (a.xyz[v].imag() != b.xyz[v].imag())
                  return a.xyz[v].imag() < b.xyz[v].imag();
              }
              return false;
            });
  return out;
}

double implicit_transition(const ImplicitUWL& sys, double t0, double t1,
                           double t_tol, const Tolerances& tol) {
  (void)tol;
  auto disc = [&](double t) {
    CPoly p = build_chain(sys, t).xpoly;
    return discriminant(p).real();
  };
  double a = t0, b = t1;
  double da = disc(a), db = disc(b);
  if (da == 0.0) return a;
  if (db == 0.0) return b;
  if (da * db > 0.0)
    throw NumericalError("no real-complex transition in range");
  for (int it = 0; it < 200 && (b - a) > t_tol; ++it) {
    double m = 0.5 * (a + b);
    double dm = disc(m);
    if (dm == 0.0) return m;
    if (da * dm < 0.0) {
      b = m;
      db = dm;
    } else {
      a = m;
      da = dm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace adw
