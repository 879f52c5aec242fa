#include "fbweyl/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fbweyl/embedding.hpp"
#include "fbweyl/errors.hpp"
#include "fbweyl/quasilocal_mass.hpp"
#include "fbweyl/schwarzschild.hpp"
#include "fbweyl/series_tools.hpp"

namespace fbweyl {

double meridian_form_mean_curvature(const RadialConformalMetric& m, double gamma, double r) {
  const MeridianJet j = meridian_jet(m, r);
  const double E = j.E / gamma;
  const double psi = j.Psi / gamma, dpsi = j.dPsi / gamma, d2psi = j.d2Psi / gamma;
  const double dzeta = j.dZ / gamma, d2zeta = j.d2Z / gamma;
  const double prefactor = dzeta / (gamma * std::sqrt(dpsi * dpsi + dzeta * dzeta));
  return prefactor * (-psi / (E * E * r * r) + (d2psi - dpsi / dzeta * d2zeta) / (E * E));
}

namespace {

// max_i f(x_i) over a uniform grid.
double sup_over(double a, double b, int n, const std::function<double(double)>& f) {
  double worst = 0;
  for (double x : numerics::linspace(a, b, n)) worst = std::max(worst, f(x));
  return worst;
}

CheckResult at_most(std::string name, double measured, double threshold) {
  return {std::move(name), measured <= threshold, measured, threshold};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const Tolerances& tol) {
  std::vector<CheckResult> out;
  const double rb = kCapDiscRadius;
  const SchwarzschildParams example{3.0 / 16.0, 9.0 / 32.0};
  const RadialConformalMetric cap = cap_profile();
  const RadialConformalMetric sch = conformal_profile(example);

  out.push_back(at_most("cap Gauss curvature equals 1",
                        sup_over(0, rb, 64, [&](double r) { return std::abs(gauss_curvature(cap, r) - 1); }),
                        1e-10));
  out.push_back(at_most("cap Gauss-Bonnet residual", std::abs(gauss_bonnet_residual(cap, tol)), 1e-8));
  out.push_back(at_most("example Gauss-Bonnet residual", std::abs(gauss_bonnet_residual(sch, tol)), 1e-6));
  out.push_back(at_most("example closed-form vs circle geodesic curvature",
                        std::abs(geodesic_curvature_closed_form(example) - geodesic_curvature(sch, rb)),
                        1e-8));
  {
    const double min_K = curvature_report(sch, 256, tol).min_K;
    out.push_back({"example Gauss curvature positive", min_K > 0, min_K, 0});
  }

  const RevolutionEmbedding cap_e = solve_embedding(cap, tol);
  {
    double err = 0;
    for (Eigen::Index i = 0; i < cap_e.size(); ++i) {
      const double r = cap_e.grid()[i];
      const double cos_t = (1 - r * r) / (1 + r * r);
      const double sin_t = 2 * r / (1 + r * r);
      err = std::max({err, std::abs(cap_e.Psi()[i] - sin_t),
                      std::abs(cap_e.Z()[i] - (std::sqrt(2.0) - cos_t))});
    }
    out.push_back(at_most("cap embedding matches the spherical cap", err, 1e-10));
  }

  const RevolutionEmbedding sch_e = solve_embedding(sch, tol);
  out.push_back(at_most("example free-boundary residuals", free_boundary_residuals(sch_e).max(), 1e-8));
  out.push_back(at_most("example Gauss equation det(A)/det(I) = K",
                        sup_over(rb / 64, rb, 64,
                                 [&](double r) {
                                   return std::abs(extrinsic_geometry(sch_e, r).K_e - gauss_curvature(sch, r));
                                 }),
                        1e-7));
  out.push_back(at_most("example meridian-form H_e vs fundamental forms (relative)",
                        sup_over(rb / 16, rb, 64,
                                 [&](double r) {
                                   const double He = extrinsic_geometry(sch_e, r).H_e;
                                   const double display = -meridian_form_mean_curvature(sch, example.gamma, r);
                                   return std::abs(display - He) / std::abs(He);
                                 }),
                        1e-8));
  {
    double interior = 0;
    for (double r : numerics::linspace(rb / 16, rb, 16)) {
      interior = std::max(interior, std::abs(monge_ampere_residual(sch_e, r, tol).first));
    }
    out.push_back(at_most("example Monge-Ampere interior residual", interior, 1e-6));
    out.push_back(at_most("example Monge-Ampere boundary residual",
                          std::abs(monge_ampere_residual(sch_e, rb, tol).second), 1e-8));
  }
  {
    const auto reports = path_invariant_report(cap, sch, 11, 256, tol);
    double worst_k = 0, min_K = 1e300;
    for (const auto& rep : reports) {
      worst_k = std::max(worst_k, std::abs(rep.k_boundary - 1));
      min_K = std::min(min_K, rep.min_K);
    }
    out.push_back(at_most("path boundary geodesic curvature stays 1", worst_k, 1e-8));
    out.push_back({"path Gauss curvature stays positive", min_K > 0, min_K, 0});
  }
  {
    const SupportSphere s = support_sphere_data(example);
    out.push_back(at_most("example support sphere H^S = 2, K^S = 4",
                          std::max(std::abs(s.H_S - 2), std::abs(s.K_S - 4)), 1e-12));
    out.push_back(at_most("example radial normal component vanishes on the boundary",
                          std::abs(radial_normal_component(example, rb)), 1e-12));
  }
  {
    const auto gammas = admissible_gammas(example.m_adm, tol);
    double best = 1e300;
    for (double g : gammas) best = std::min(best, std::abs(g - example.gamma));
    out.push_back(at_most("admissible gammas for m = 3/16 contain 9/32", best, 1e-8));
  }
  {
    const MassReport rep = mass_report(example, tol);
    out.push_back(at_most("example int H_e within [3.45, 3.47]", std::abs(rep.int_He - 3.46), 0.01));
    out.push_back(at_most("example int H within [3.36, 3.38]", std::abs(rep.int_H - 3.37), 0.01));
  }
  {
    bool ok = true;
    for (unsigned l = 1; l <= 25; ++l) {
      ok = ok && majorant_product(l) == ExactRational(catalan(l - 1));
      if (l >= 2) ok = ok && recurrence_check(l);
    }
    out.push_back({"Catalan majorant product and recurrence, l <= 25", ok, ok ? 0.0 : 1.0, 0});
  }
  return out;
}

}  // namespace fbweyl
