#include "adw/cli/run.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <mutex>
#include <thread>
#include <vector>

#include "adw/caustics/locus.hpp"
#include "adw/cli/formats.hpp"
#include "adw/cli/render.hpp"
#include "adw/congruence/branch.hpp"
#include "adw/congruence/genfunc.hpp"
#include "adw/core/error.hpp"
#include "adw/fields/em.hpp"
#include "adw/fields/potential.hpp"
#include "adw/uwl/evolve.hpp"
#include "adw/uwl/worldline.hpp"
#include "json.hpp"

namespace adw {

namespace {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

SliceGrid read_grid(const RunConfig& cfg) {
  SliceGrid g;
  const RunConfig::Range def{-2.0, 2.0, 16};
  const char* axes[3] = {"x", "y", "z"};
  for (int a = 0; a < 3; ++a) {
    RunConfig::Range r = cfg.get_range("grid", axes[a], def);
    g.lo[a] = r.lo;
    g.hi[a] = r.hi;
    g.n[a] = r.n;
  }
  g.t = cfg.get_double("grid", "t", 0.0);
  return g;
}

void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn) {
  workers = std::clamp(workers, 1, 64);
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr err;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
          return;
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

struct ModeOutput {
  ordered_json summary;
  std::vector<std::string> outputs;
  std::vector<std::string> flags;
  std::string partial_reason;
};

ModeOutput run_congruence(const RunConfig& cfg, const Tolerances& tol,
                          const fs::path& outdir) {
  ModeOutput out;
  GenFuncProjective gf =
      GenFuncProjective::parse(cfg.require("congruence", "pi"));
  SliceGrid grid = read_grid(cfg);
  BranchField bf = branch_continue(gf, grid, tol);

  CsvTable tab;
  tab.header = {"t", "x", "y", "z", "branch", "re_g", "im_g", "at_infinity"};
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    int i = static_cast<int>(idx % grid.n[0]);
    int j = static_cast<int>((idx / grid.n[0]) % grid.n[1]);
    int k = static_cast<int>(idx / (static_cast<std::size_t>(grid.n[0]) *
                                    grid.n[1]));
    SpacetimePoint p = grid.point(i, j, k);
    for (const BranchPoint& b : bf.points[idx])
      tab.rows.push_back({fmt17(p.t), fmt17(p.x), fmt17(p.y), fmt17(p.z),
                          std::to_string(b.label), fmt17(b.G.real()),
                          fmt17(b.G.imag()), b.at_infinity ? "1" : "0"});
  }
  csv_write((outdir / "branches.csv").string(), tab);
  out.outputs.push_back("branches.csv");

  out.summary["grid_points"] = grid.size();
  out.summary["nominal_degree"] = bf.nominal_degree;
  out.summary["rows"] = tab.rows.size();
  out.summary["label_count"] = bf.label_count;
  out.summary["degenerate_points"] = bf.degenerate_points.size();
  out.summary["monodromy_faces"] = bf.monodromy_faces.size();
  if (!bf.monodromy_faces.empty())
    out.flags.push_back("monodromy faces present");
  if (!bf.degenerate_points.empty())
    out.partial_reason = std::to_string(bf.degenerate_points.size()) +
                         " degenerate grid points have no branch rows";
  return out;
}

ModeOutput run_caustics(const RunConfig& cfg, const Tolerances& tol,
                        const fs::path& outdir) {
  ModeOutput out;
  GenFuncProjective gf =
      GenFuncProjective::parse(cfg.require("caustics", "pi"));
  SliceGrid grid = read_grid(cfg);

  std::vector<LocusFrame> frames;
  if (cfg.has("caustics", "t0") || cfg.has("caustics", "t1") ||
      cfg.has("caustics", "nt")) {
    double t0 = cfg.require_double("caustics", "t0");
    double t1 = cfg.require_double("caustics", "t1");
    int nt = cfg.get_int("caustics", "nt", 2);
    if (nt < 1) throw ConfigError("[caustics] nt must be at least 1");
    frames = track_locus(gf, grid, t0, t1, nt, tol);
  } else {
    frames.push_back(extract_locus(gf, grid, tol));
  }

  CsvTable tab;
  tab.header = {"t", "x", "y", "z", "residual"};
  ordered_json jframes = ordered_json::array();
  std::size_t total = 0;
  for (const LocusFrame& f : frames) {
    total += f.points.size();
    ordered_json jf;
    jf["t"] = f.t;
    jf["points"] = ordered_json::array();
    for (const LocusPoint& p : f.points) {
      tab.rows.push_back({fmt17(f.t), fmt17(p.x), fmt17(p.y), fmt17(p.z),
                          fmt17(p.residual)});
      jf["points"].push_back({p.x, p.y, p.z, p.residual});
    }
    jframes.push_back(jf);
  }
  csv_write((outdir / "locus.csv").string(), tab);
  out.outputs.push_back("locus.csv");
  ordered_json jl;
  jl["frames"] = jframes;
  write_text_file((outdir / "locus.json").string(), jl.dump(2) + "\n");
  out.outputs.push_back("locus.json");

  out.summary["frames"] = frames.size();
  out.summary["points"] = total;
  return out;
}

ModeOutput run_fields(const RunConfig& cfg, const Tolerances& tol,
                      const fs::path& outdir, int workers) {
  ModeOutput out;
  GenFuncProjective gf = GenFuncProjective::parse(cfg.require("fields", "pi"));
  std::string op = cfg.get("fields", "op", "I");
  if (op != "I" && op != "II")
    throw ConfigError("[fields] op must be I or II, got '" + op + "'");
  SliceGrid grid = read_grid(cfg);

  auto branch_sampler = [gf, tol](cplx G0) {
    return [gf, tol, G0](const Vec4d& Xs) -> cplx {
      RootSet rs = gf.solve_branches(to_point(Xs), tol);
      const Root* best = nullptr;
      for (const Root& r : rs.finite)
        if (!best || std::abs(r.value - G0) < std::abs(best->value - G0))
          best = &r;
      if (!best) throw NumericalError("branch lost during sampling");
      return best->value;
    };
  };
  auto beta_out = [](const Vec4d& x) -> cplx {
    return x[0] + std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  };

  std::vector<std::vector<std::vector<std::string>>> rows_at(grid.size());
  std::atomic<long> skipped{0};
  parallel_for(grid.size(), workers, [&](std::size_t idx) {
    int i = static_cast<int>(idx % grid.n[0]);
    int j = static_cast<int>((idx / grid.n[0]) % grid.n[1]);
    int k = static_cast<int>(idx / (static_cast<std::size_t>(grid.n[0]) *
                                    grid.n[1]));
    SpacetimePoint p = grid.point(i, j, k);
    Vec4d X = to_vec(p);
    RootSet rs;
    try {
      rs = gf.solve_branches(p, tol);
    } catch (const NumericalError&) {
      ++skipped;
      return;
    }
    std::vector<cplx> branches;
    for (const Root& r : rs.finite) branches.push_back(r.value);
    std::sort(branches.begin(), branches.end(), [](cplx a, cplx b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    for (std::size_t b = 0; b < branches.size(); ++b) {
      try {
        ScalarSampler Gs = branch_sampler(branches[b]);
        TwoForm F;
        if (op == "I") {
          MatrixSampler phi = [Gs, tol](const Vec4d& Xs) {
            return phi_from_branch(Gs, Xs, tol.fd_step_scale, tol).phi;
          };
          F = em_field_I(phi, X, tol.fd_step_scale);
        } else {
          F = em_field_II(Gs, beta_out, X, tol.fd_step_scale);
        }
        EHParts eh = eh_decompose(F);
        std::vector<std::string> row{fmt17(p.t), fmt17(p.x), fmt17(p.y),
                                     fmt17(p.z), std::to_string(b)};
        for (int a = 0; a < 3; ++a) {
          row.push_back(fmt17(eh.E[a].real()));
          row.push_back(fmt17(eh.E[a].imag()));
        }
        for (int a = 0; a < 3; ++a) {
          row.push_back(fmt17(eh.H[a].real()));
          row.push_back(fmt17(eh.H[a].imag()));
        }
        rows_at[idx].push_back(std::move(row));
      } catch (const NumericalError&) {
        ++skipped;
      }
    }
  });

  CsvTable tab;
  tab.header = {"t",     "x",     "y",     "z",     "branch",
                "re_e1", "im_e1", "re_e2", "im_e2", "re_e3",
                "im_e3", "re_h1", "im_h1", "re_h2", "im_h2",
                "re_h3", "im_h3"};
  for (auto& point_rows : rows_at)
    for (auto& row : point_rows) tab.rows.push_back(std::move(row));
  csv_write((outdir / "fields.csv").string(), tab);
  out.outputs.push_back("fields.csv");

  out.summary["grid_points"] = grid.size();
  out.summary["op"] = op;
  out.summary["rows"] = tab.rows.size();
  out.summary["skipped"] = skipped.load();
  if (skipped.load() > 0)
    out.partial_reason =
        std::to_string(skipped.load()) + " field samples failed and were skipped";
  return out;
}

ModeOutput run_uwl(const RunConfig& cfg, const Tolerances& tol,
                   const fs::path& outdir) {
  ModeOutput out;
  PolyWorldline wl = parse_worldline(
      {cfg.require("uwl", "x0"), cfg.require("uwl", "x1"),
       cfg.require("uwl", "x2"), cfg.require("uwl", "x3")});
  PolyWorldline obs = parse_worldline(
      {cfg.get("uwl", "obs0", "s"), cfg.get("uwl", "obs1", "0"),
       cfg.get("uwl", "obs2", "0"), cfg.get("uwl", "obs3", "0")});
  RunConfig::Range tau = cfg.require_range("uwl", "tau");
  double eps_real = cfg.get_double("uwl", "eps_real", tol.real_class_eps);

  EvolveResult evo =
      evolve(wl, obs, tau.lo, tau.hi, tau.n, eps_real, tol);

  CsvTable tab;
  tab.header = {"tau", "root", "re_sigma", "im_sigma", "class", "x", "y", "z"};
  for (const Trajectory& tr : evo.trajectories)
    for (const TrajectorySample& s : tr.samples)
      tab.rows.push_back({fmt17(s.tau), std::to_string(tr.label),
                          fmt17(s.sigma.real()), fmt17(s.sigma.imag()),
                          std::string(1, s.cls), fmt17(s.position[1].real()),
                          fmt17(s.position[2].real()),
                          fmt17(s.position[3].real())});
  csv_write((outdir / "trajectories.csv").string(), tab);
  out.outputs.push_back("trajectories.csv");

  ordered_json ev;
  ev["eps_real"] = evo.eps_real;
  ev["flags"] = evo.flags;
  ev["events"] = ordered_json::array();
  for (const UwlEvent& e : evo.events) {
    ordered_json je;
    je["tau"] = e.tau;
    je["kind"] = e.kind;
    je["labels"] = e.labels;
    je["location"] = {e.location[0].real(), e.location[1].real(),
                      e.location[2].real(), e.location[3].real()};
    ev["events"].push_back(je);
  }
  ev["photons"] = ordered_json::array();
  for (const PhotonRecord& p : evo.photons) {
    ordered_json jp;
    jp["tau"] = p.tau;
    jp["from"] = {p.from.t, p.from.x, p.from.y, p.from.z};
    jp["to"] = {p.to.t, p.to.x, p.to.y, p.to.z};
    jp["null_defect"] = p.null_defect;
    ev["photons"].push_back(jp);
  }
  write_text_file((outdir / "events.json").string(), ev.dump(2) + "\n");
  out.outputs.push_back("events.json");

  ConservationReport rep = conservation_report(evo, wl, obs);
  out.summary["lce_degree"] = evo.lce_degree;
  out.summary["steps"] = evo.tau.size();
  out.summary["events"] = evo.events.size();
  out.summary["photons"] = evo.photons.size();
  ordered_json cons;
  cons["complete"] = rep.complete;
  cons["inertial"] = rep.inertial;
  cons["kinetic_is_interpretation"] = rep.kinetic_is_interpretation;
  cons["max_momentum_dev"] = rep.max_momentum_dev;
  cons["max_angmom_dev"] = rep.max_angmom_dev;
  cons["max_kinetic_dev"] = rep.max_kinetic_dev;
  out.summary["conservation"] = cons;
  out.flags = evo.flags;
  return out;
}

ModeOutput run_render(const RunConfig& cfg, const fs::path& outdir) {
  ModeOutput out;
  std::string field = cfg.get("render", "field", "screw");
  double radius = cfg.get_double("render", "radius", 1.0);
  int ntheta = cfg.get_int("render", "ntheta", 24);
  int nphi = cfg.get_int("render", "nphi", 48);

  std::vector<SphereSample> samples = screw_sphere_samples(radius, ntheta, nphi);
  if (field == "zero") {
    for (SphereSample& s : samples) s.E = {};
  } else if (field != "screw") {
    throw ConfigError("[render] field must be screw or zero, got '" + field +
                      "'");
  }
  render_polarization(samples, radius, (outdir / "polarization.svg").string());
  out.outputs.push_back("polarization.svg");

  out.summary["field"] = field;
  out.summary["radius"] = radius;
  out.summary["samples"] = samples.size();
  out.summary["arrows"] = quiver_arrows(samples, radius).size();
  return out;
}

}  // namespace

void run_mode(const RunConfig& cfg, const std::string& mode) {
  static const char* kModes[] = {"congruence", "caustics", "fields", "uwl",
                                 "render"};
  bool known = false;
  for (const char* m : kModes) known = known || mode == m;
  if (!known)
    throw ConfigError("unknown mode '" + mode +
                      "' (expected congruence | caustics | fields | uwl | "
                      "render)");
  std::string cfg_mode = cfg.get("run", "mode", mode);
  if (cfg_mode != mode)
    throw ConfigError("config requests mode '" + cfg_mode +
                      "' but the command line asked for '" + mode + "'");

  Tolerances tol = cfg.tolerances();
  long seed = cfg.get_int("run", "seed", 0);
  int workers = cfg.get_int("run", "workers", 1);
  if (workers < 1) throw ConfigError("[run] workers must be at least 1");

  fs::path outdir = cfg.get("run", "output_dir", "out");
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec)
    throw ConfigError("cannot create output directory '" + outdir.string() +
                      "': " + ec.message());

  ordered_json man;
  man["version"] = kToolVersion;
  man["schema"] = 1;
  man["mode"] = mode;
  man["config_hash"] = hex64(cfg.hash());
  man["seed"] = seed;
  man["workers"] = workers;
  ordered_json jt;
  jt["root_residual_scale"] = tol.root_residual_scale;
  jt["cluster_radius_scale"] = tol.cluster_radius_scale;
  jt["infinity_lc_scale"] = tol.infinity_lc_scale;
  jt["collision_eps"] = tol.collision_eps;
  jt["locus_tol"] = tol.locus_tol;
  jt["real_class_eps"] = tol.real_class_eps;
  jt["fd_step_scale"] = tol.fd_step_scale;
  jt["bispinor_tol"] = tol.bispinor_tol;
  jt["caustic_det_scale"] = tol.caustic_det_scale;
  jt["unimodular_tol"] = tol.unimodular_tol;
  jt["hermitian_tol"] = tol.hermitian_tol;
  jt["congruence_reject"] = tol.congruence_reject;
  jt["rank_sv_scale"] = tol.rank_sv_scale;
  man["tolerances"] = jt;

  auto finish = [&](const ModeOutput& mo, const std::string& error) {
    man["flags"] = mo.flags;
    man["outputs"] = mo.outputs;
    man["summary"] = mo.summary.is_null() ? ordered_json::object() : mo.summary;
    man["status"] = error.empty() ? "ok" : "partial";
    if (!error.empty()) man["error"] = error;
    write_text_file((outdir / "manifest.json").string(), man.dump(2) + "\n");
  };

  ModeOutput mo;
  try {
    if (mode == "congruence")
      mo = run_congruence(cfg, tol, outdir);
    else if (mode == "caustics")
      mo = run_caustics(cfg, tol, outdir);
    else if (mode == "fields")
      mo = run_fields(cfg, tol, outdir, workers);
    else if (mode == "uwl")
      mo = run_uwl(cfg, tol, outdir);
    else
      mo = run_render(cfg, outdir);
  } catch (const NumericalError& e) {
    finish(mo, e.what());
    throw;
  }
  finish(mo, mo.partial_reason);
  if (!mo.partial_reason.empty()) throw NumericalError(mo.partial_reason);
}

}  // namespace adw
