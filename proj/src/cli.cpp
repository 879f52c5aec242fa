#include "fbweyl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fbweyl/conformal_disc.hpp"
#include "fbweyl/embedding.hpp"
#include "fbweyl/errors.hpp"
#include "fbweyl/invariants.hpp"
#include "fbweyl/quasilocal_mass.hpp"
#include "fbweyl/schwarzschild.hpp"
#include "fbweyl/series_tools.hpp"

namespace fbweyl::cli {

io::Format resolve_format(const RunConfig& config, bool stdout_is_terminal) {
  if (config.format) return *config.format;
  if (config.out_path) return io::Format::csv;
  return stdout_is_terminal ? io::Format::pretty : io::Format::csv;
}

Tolerances tolerances_from_env(Tolerances base) {
  auto read = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    return std::string(v);
  };
  try {
    if (auto v = read("FBWEYL_QUAD_TOL")) base.quad_tol = std::stod(*v);
    if (auto v = read("FBWEYL_ROOT_TOL")) base.root_tol = std::stod(*v);
    if (auto v = read("FBWEYL_FD_STEP")) base.fd_step = std::stod(*v);
    if (auto v = read("FBWEYL_GRID_N")) base.grid_n = std::stoi(*v);
  } catch (const std::logic_error&) {
    throw DomainError("malformed FBWEYL_* tolerance override");
  }
  return base;
}

namespace {

std::string fmt(double x, int precision = 12) {
  std::ostringstream s;
  s << std::setprecision(precision) << x;
  return s.str();
}

struct Table {
  std::vector<std::pair<std::string, std::string>> rows;
  void add(std::string key, std::string value) { rows.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, double value) { add(std::move(key), fmt(value)); }
  std::string render() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
    return out.str();
  }
};

ScanRow row_for(const SchwarzschildParams& p, const MassReport& rep, const MassDiagnostics& diag,
                const Tolerances& tol) {
  ScanRow row;
  row.m_adm = p.m_adm;
  row.gamma = p.gamma;
  row.k_h = diag.k_h;
  row.min_K = diag.min_K;
  row.mass = rep;
  row.branch = -1;
  const auto gammas = admissible_gammas(p.m_adm, tol);
  for (std::size_t b = 0; b < gammas.size(); ++b) {
    if (std::abs(gammas[b] - p.gamma) <= 1e-6) row.branch = static_cast<int>(b);
  }
  return row;
}

std::string mass_table(const MassReport& rep, const MassDiagnostics& diag) {
  Table t;
  t.add("int_He", rep.int_He);
  t.add("int_H", rep.int_H);
  t.add("mass_fb_by", rep.mass_fb_by);
  t.add("hm_lhs", rep.hm_lhs);
  t.add("hm_rhs", rep.hm_rhs);
  t.add("boundary_gap", rep.boundary_gap);
  t.add("tr_Ae (boundary)", diag.boundary.tr_Ae);
  t.add("tr_A (boundary)", diag.boundary.tr_A);
  t.add("tr_A oracle", diag.boundary.tr_A_oracle);
  t.add("min H", diag.min_H);
  return t.render();
}

std::string run_cap(const RunConfig& c, io::Format format) {
  const SchwarzschildParams flat{0.0, 1.0};
  MassDiagnostics diag;
  const MassReport rep = mass_report(flat, c.tol, &diag);
  if (format != io::Format::pretty) {
    std::ostringstream s;
    io::emit({row_for(flat, rep, diag, c.tol)}, format, s);
    return s.str();
  }
  const RadialConformalMetric cap = cap_profile();
  const CurvatureReport curv = curvature_report(cap, c.n_r, c.tol);
  const RevolutionEmbedding e = solve_embedding(cap, c.tol);
  double max_dev = 0, max_K = 0;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    const double r = e.grid()[i];
    const double cos_t = (1 - r * r) / (1 + r * r), sin_t = 2 * r / (1 + r * r);
    max_dev = std::max({max_dev, std::abs(e.Psi()[i] - sin_t), std::abs(e.Z()[i] - (std::sqrt(2.0) - cos_t))});
  }
  for (const auto& [r, K] : curv.samples) max_K = std::max(max_K, std::abs(K - 1));
  Table t;
  t.add("profile", "cap: E = 2 / (1 + r^2), r_b = sqrt(2) - 1");
  t.add("max |K - 1|", max_K);
  t.add("k_h(r_b)", curv.k_boundary);
  t.add("Gauss-Bonnet residual", curv.gauss_bonnet_residual);
  t.add("max |F - F_0|", max_dev);
  t.add("free-boundary residual", free_boundary_residuals(e).max());
  t.add("H_e(r_b/2)", extrinsic_geometry(e, cap.r_b() / 2).H_e);
  return t.render() + mass_table(rep, diag);
}

SchwarzschildParams require_params(const RunConfig& c) {
  if (!c.m_adm || !c.gamma) throw CLI::ValidationError("--mass and --gamma are required");
  return {*c.m_adm, *c.gamma};
}

std::string run_schwarzschild(const RunConfig& c, io::Format format) {
  const SchwarzschildParams p = require_params(c);
  p.validate();
  const double k = geodesic_curvature_closed_form(p);
  if (!is_admissible(p)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "(m, gamma) = (" << p.m_adm << ", " << p.gamma << ") gives k_h = " << k << " != 1";
    throw PreconditionError("k_h=1", msg.str());
  }
  MassDiagnostics diag;
  const bool need_mass = c.report || format != io::Format::pretty;
  MassReport rep;
  if (need_mass) rep = mass_report(p, c.tol, &diag);
  if (format != io::Format::pretty) {
    std::ostringstream s;
    io::emit({row_for(p, rep, diag, c.tol)}, format, s);
    return s.str();
  }
  const RadialConformalMetric metric = conformal_profile(p);
  const CurvatureReport curv = curvature_report(metric, c.n_r, c.tol);
  const RevolutionEmbedding e = solve_embedding(metric, c.tol);
  const FreeBoundaryResiduals fb = free_boundary_residuals(e);
  const SupportSphere s = support_sphere_data(p);
  Table t;
  t.add("m_adm", p.m_adm);
  t.add("gamma", p.gamma);
  t.add("k_h (closed form)", k);
  t.add("k_h (circle curvature)", curv.k_boundary);
  t.add("min K", curv.min_K);
  t.add("Gauss-Bonnet residual", curv.gauss_bonnet_residual);
  t.add("|F(r_b)|^2 - 1", fb.sphere);
  t.add("Psi' - E Psi at r_b", fb.radial_psi);
  t.add("Z' - E Z at r_b", fb.radial_z);
  t.add("H^S", s.H_S);
  t.add("K^S", s.K_S);
  std::string text = t.render();
  if (c.report) text += mass_table(rep, diag);
  return text;
}

std::string run_admissible(const RunConfig& c, io::Format format) {
  if (!c.m_adm) throw CLI::ValidationError("--mass is required");
  const auto roots = admissible_gamma_roots(*c.m_adm, c.tol);
  std::ostringstream s;
  switch (format) {
    case io::Format::csv:
      s << "gamma,tangential\n";
      for (const auto& r : roots) s << io::format_double(r.x) << ',' << (r.tangential ? 1 : 0) << '\n';
      break;
    case io::Format::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : roots) arr.push_back({{"gamma", r.x}, {"tangential", r.tangential}});
      s << arr.dump(2) << '\n';
      break;
    }
    case io::Format::pretty:
      s << "m_adm = " << fmt(*c.m_adm) << ": " << roots.size() << " admissible gamma(s)\n";
      for (const auto& r : roots) {
        s << "  gamma = " << fmt(r.x, 15) << (r.tangential ? "  (tangential)" : "") << '\n';
      }
      break;
  }
  return s.str();
}

std::string run_scan(const RunConfig& c, io::Format format, std::ostream& err) {
  const auto rows = scan(c.m_lo, c.m_hi, c.n_m, c.tol, c.workers,
                         [&err](const std::string& w) { err << "warning: " << w << '\n'; });
  std::ostringstream s;
  io::emit(rows, format, s);
  return s.str();
}

std::string run_path(const RunConfig& c, io::Format format) {
  const SchwarzschildParams p{c.m_adm.value_or(3.0 / 16.0), c.gamma.value_or(9.0 / 32.0)};
  const auto reports = path_invariant_report(cap_profile(), conformal_profile(p), c.n_t, c.n_r, c.tol);
  std::ostringstream s;
  switch (format) {
    case io::Format::csv:
      s << "t,min_K,k_boundary,gauss_bonnet_residual\n";
      for (const auto& r : reports) {
        s << io::format_double(r.t) << ',' << io::format_double(r.min_K) << ','
          << io::format_double(r.k_boundary) << ',' << io::format_double(r.gauss_bonnet_residual) << '\n';
      }
      break;
    case io::Format::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        arr.push_back({{"t", r.t},
                       {"min_K", r.min_K},
                       {"k_boundary", r.k_boundary},
                       {"gauss_bonnet_residual", r.gauss_bonnet_residual}});
      }
      s << arr.dump(2) << '\n';
      break;
    }
    case io::Format::pretty:
      s << std::left << std::setw(8) << "t" << std::setw(20) << "min_K" << std::setw(20) << "k_boundary"
        << "gauss_bonnet_residual\n";
      for (const auto& r : reports) {
        s << std::setw(8) << fmt(r.t, 4) << std::setw(20) << fmt(r.min_K) << std::setw(20)
          << fmt(r.k_boundary, 15) << fmt(r.gauss_bonnet_residual, 4) << '\n';
      }
      break;
  }
  return s.str();
}

std::string run_catalan(const RunConfig& c, io::Format format) {
  std::ostringstream s;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (format == io::Format::csv) s << "l,catalan_l_minus_1,majorant_product,recurrence\n";
  for (unsigned l = 1; l <= std::max(1u, c.n_catalan); ++l) {
    const ExactInteger cat = catalan(l - 1);
    const ExactRational prod = majorant_product(l);
    const bool rec = l < 2 || recurrence_check(l);
    switch (format) {
      case io::Format::csv:
        s << l << ',' << cat << ',' << prod << ',' << (rec ? 1 : 0) << '\n';
        break;
      case io::Format::json:
        arr.push_back({{"l", l}, {"catalan_l_minus_1", cat.str()}, {"majorant_product", prod.str()},
                       {"recurrence", rec}});
        break;
      case io::Format::pretty:
        s << "l = " << std::setw(3) << l << "  C_{l-1} = " << std::setw(16) << cat
          << "  prod(4 - 6/j) = " << std::setw(16) << prod
          << (prod == ExactRational(cat) ? "  equal" : "  MISMATCH")
          << (rec ? "" : "  recurrence FAILS") << '\n';
        break;
    }
  }
  if (format == io::Format::json) s << arr.dump(2) << '\n';
  return s.str();
}

std::string run_check(const RunConfig& c, bool& all_passed) {
  const auto results = run_invariant_suite(c.tol);
  std::ostringstream s;
  all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    s << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (measured " << fmt(r.measured, 6)
      << ", threshold " << fmt(r.threshold, 6) << ")\n";
  }
  s << (all_passed ? "all invariants hold\n" : "invariant suite FAILED\n");
  return s.str();
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err, bool stdout_is_terminal) {
  const io::Format format = resolve_format(config, stdout_is_terminal);
  std::string text;
  int code = kExitOk;
  try {
    config.tol.validate();
    switch (config.command) {
      case Command::cap:
        text = run_cap(config, format);
        break;
      case Command::schwarzschild:
        text = run_schwarzschild(config, format);
        break;
      case Command::admissible:
        text = run_admissible(config, format);
        break;
      case Command::scan:
        text = run_scan(config, format, err);
        break;
      case Command::path:
        text = run_path(config, format);
        break;
      case Command::catalan:
        text = run_catalan(config, format);
        break;
      case Command::check: {
        bool ok = false;
        text = run_check(config, ok);
        if (!ok) code = kExitInternal;
        break;
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << *config.out_path << "' for writing\n";
      return kExitIo;
    }
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    file.close();
    if (!file) {
      err << "error: failed writing '" << *config.out_path << "'\n";
      return kExitIo;
    }
  } else {
    out << text;
    out.flush();
    if (!out) return kExitIo;
  }
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               bool stdout_is_terminal) {
  CLI::App app{"Free-boundary isometric embedding and quasi-local mass toolkit", "fbweyl"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  try {
    config.tol = tolerances_from_env(config.tol);
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::string out_path, format_name;
  double mass = 0, gamma = 0;

  app.add_option("--quad-tol", config.tol.quad_tol, "absolute quadrature tolerance");
  app.add_option("--root-tol", config.tol.root_tol, "root bracket width");
  app.add_option("--fd-step", config.tol.fd_step, "smallest finite-difference step");
  app.add_option("--grid-n", config.tol.grid_n, "radial grid size (>= 16)");
  app.add_option("--out", out_path, "write output to this file (default format csv)");
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));
  app.add_option("--workers", config.workers, "worker threads for scans (0 = all cores)");

  auto* cap = app.add_subcommand("cap", "round spherical cap model (m = 0, gamma = 1)");
  auto* sch = app.add_subcommand("schwarzschild", "analyse one (m_adm, gamma) pair");
  sch->add_option("--mass", mass, "ADM mass parameter")->required();
  sch->add_option("--gamma", gamma, "coordinate sphere radius")->required();
  sch->add_flag("--report", config.report, "include the quasi-local mass report");
  auto* adm = app.add_subcommand("admissible", "gamma values with k_h = 1 for a given mass");
  adm->add_option("--mass", mass, "ADM mass parameter")->required();
  auto* scn = app.add_subcommand("scan", "parameter sweep over masses and admissible gammas");
  scn->add_option("--m-lo", config.m_lo, "smallest mass");
  scn->add_option("--m-hi", config.m_hi, "largest mass");
  scn->add_option("--n-m", config.n_m, "number of masses");
  auto* pth = app.add_subcommand("path", "curvature invariants along the cap-to-Schwarzschild path");
  pth->add_option("--mass", mass, "ADM mass parameter (default 3/16)");
  pth->add_option("--gamma", gamma, "coordinate sphere radius (default 9/32)");
  pth->add_option("--n-t", config.n_t, "number of path samples");
  pth->add_option("--n-r", config.n_r, "radial samples per report");
  auto* chk = app.add_subcommand("check", "run the invariant suite");
  auto* cat = app.add_subcommand("catalan", "exact Catalan majorant identities");
  cat->add_option("--n", config.n_catalan, "largest l");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (cap->parsed()) config.command = Command::cap;
  if (sch->parsed()) config.command = Command::schwarzschild;
  if (adm->parsed()) config.command = Command::admissible;
  if (scn->parsed()) config.command = Command::scan;
  if (pth->parsed()) config.command = Command::path;
  if (chk->parsed()) config.command = Command::check;
  if (cat->parsed()) config.command = Command::catalan;

  for (auto* sub : {sch, adm, pth}) {
    if (!sub->parsed()) continue;
    if (const auto* o = sub->get_option_no_throw("--mass"); o && o->count()) config.m_adm = mass;
    if (const auto* o = sub->get_option_no_throw("--gamma"); o && o->count()) config.gamma = gamma;
  }
  if (!out_path.empty()) config.out_path = out_path;
  if (!format_name.empty()) config.format = io::parse_format(format_name);

  return run(config, out, err, stdout_is_terminal);
}

}  // namespace fbweyl::cli
