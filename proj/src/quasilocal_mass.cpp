#include "fbweyl/quasilocal_mass.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "fbweyl/errors.hpp"

namespace fbweyl {

bool operator==(const ScanRow& a, const ScanRow& b) {
  return a.m_adm == b.m_adm && a.branch == b.branch && a.gamma == b.gamma &&
         a.k_h == b.k_h && a.min_K == b.min_K && a.mass.int_He == b.mass.int_He &&
         a.mass.int_H == b.mass.int_H && a.mass.mass_fb_by == b.mass.mass_fb_by &&
         a.mass.hm_lhs == b.mass.hm_lhs && a.mass.hm_rhs == b.mass.hm_rhs &&
         a.mass.boundary_gap == b.mass.boundary_gap;
}

MassReport mass_report(const SchwarzschildParams& p, const Tolerances& tol,
                       MassDiagnostics* diagnostics) {
  p.validate();
  const double k_h = geodesic_curvature_closed_form(p);
  if (!(std::abs(k_h - 1.0) <= kBoundaryCurvatureTol)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "(m, gamma) = (" << p.m_adm << ", " << p.gamma << ") has k_h = " << k_h;
    throw PreconditionError("k_h=1", msg.str());
  }

  const RadialConformalMetric metric = conformal_profile(p);
  const RevolutionEmbedding embedding = solve_embedding(metric, tol);
  const double rb = metric.r_b();

  double min_H = std::numeric_limits<double>::infinity();
  for (double r : numerics::linspace(0.0, rb, 257)) {
    const double H = intrinsic_mean_curvature(p, r);
    min_H = std::min(min_H, H);
    if (!(H > 0)) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "mean curvature of Sigma is " << H << " at rhat = " << r;
      throw PreconditionError("H>0", msg.str());
    }
  }

  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto area_integral = [&](auto&& density) {
    return two_pi * numerics::integrate(
                        [&](double r) {
                          const double e = metric.E(r);
                          return density(r) * e * e * r;
                        },
                        0.0, rb, tol);
  };

  MassReport out;
  out.int_He = area_integral([&](double r) { return extrinsic_geometry(metric, r).H_e; });
  out.int_H = area_integral([&](double r) { return intrinsic_mean_curvature(p, r); });
  out.mass_fb_by = out.int_He - out.int_H;
  out.hm_lhs = area_integral([&](double r) {
    const double He = extrinsic_geometry(metric, r).H_e;
    const double H = intrinsic_mean_curvature(p, r);
    return He * He / H - H;
  });

  const BoundaryData boundary = boundary_traces(p, embedding, tol);
  const double boundary_length = two_pi * rb * metric.E(rb);
  out.boundary_gap = boundary_length * boundary.gap;
  out.hm_rhs = 2.0 * out.boundary_gap;

  if (diagnostics) {
    diagnostics->k_h = k_h;
    diagnostics->min_K = curvature_report(metric, 256, tol).min_K;
    diagnostics->min_H = min_H;
    diagnostics->boundary = boundary;
  }
  return out;
}

namespace {

struct ScanTask {
  double m;
  int branch;
  double gamma;
};

}  // namespace

std::vector<ScanRow> scan(const std::vector<double>& masses, const Tolerances& tol,
                          unsigned workers, const ScanWarning& warn) {
  tol.validate();
  std::vector<ScanTask> tasks;
  for (double m : masses) {
    const std::vector<double> gammas = admissible_gammas(m, tol);
    for (std::size_t b = 0; b < gammas.size(); ++b) {
      tasks.push_back({m, static_cast<int>(b), gammas[b]});
    }
  }

  std::vector<std::optional<ScanRow>> rows(tasks.size());
  std::vector<std::string> failures(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const ScanTask& t = tasks[i];
      try {
        MassDiagnostics diag;
        ScanRow row;
        row.m_adm = t.m;
        row.branch = t.branch;
        row.gamma = t.gamma;
        row.mass = mass_report({t.m, t.gamma}, tol, &diag);
        row.k_h = diag.k_h;
        row.min_K = diag.min_K;
        rows[i] = row;
      } catch (const std::exception& ex) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "scan: skipping m = " << t.m << ", branch " << t.branch << " (gamma = " << t.gamma
            << "): " << ex.what();
        failures[i] = msg.str();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::vector<ScanRow> out;
  out.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (rows[i]) {
      out.push_back(*rows[i]);
    } else if (warn) {
      warn(failures[i]);
    }
  }
  return out;
}

std::vector<ScanRow> scan(double m_lo, double m_hi, int n_m, const Tolerances& tol,
                          unsigned workers, const ScanWarning& warn) {
  if (n_m < 1) throw DomainError("scan: n_m must be positive");
  if (!(m_lo >= 0.0)) throw DomainError("scan: m_lo must be >= 0");
  if (n_m > 1 && !(m_lo < m_hi)) throw DomainError("scan: requires m_lo < m_hi");
  if (n_m > 1 && !(m_hi < kCriticalMass)) {
    throw DomainError("scan: m_hi must stay below the critical mass 3^{-3/2}");
  }
  return scan(numerics::linspace(m_lo, m_hi, n_m), tol, workers, warn);
}

}  // namespace fbweyl
