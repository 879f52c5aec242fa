#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fbweyl/jet.hpp"
#include "fbweyl/numerics.hpp"

namespace fbweyl {

/// Radius of the conformal disc carrying the spherical cap of opening angle
/// pi/4 under stereographic projection: sqrt(2) - 1.
inline const double kCapDiscRadius = std::sqrt(2.0) - 1.0;

/// Rotationally symmetric metric E(r)^2 (dr^2 + r^2 dphi^2) on the disc
/// r <= r_b. The conformal factor is held as a jet evaluator returning
/// (E, E', E'') so curvature formulas never need finite differences.
class RadialConformalMetric {
 public:
  using JetFn = std::function<Jet<double>(double)>;

  /// `factor` must return E and its first two r-derivatives. Throws
  /// DomainError if E is not positive on a sampled grid or if E'(0) != 0.
  RadialConformalMetric(JetFn factor, double r_b, std::string label);

  /// Builds a metric from values only; derivatives come from Richardson
  /// extrapolated central differences on the even extension E(|r|).
  static RadialConformalMetric from_values(std::function<double(double)> factor, double r_b,
                                           std::string label, const Tolerances& tol = {});

  /// (E, E', E'') at r; throws DomainError outside [0, r_b].
  Jet<double> jet(double r) const;
  double E(double r) const { return jet(r).v; }
  double dE(double r) const { return jet(r).d1; }
  double d2E(double r) const { return jet(r).d2; }

  double r_b() const noexcept { return r_b_; }
  const std::string& label() const noexcept { return label_; }

  /// Metric with factor c * E (same disc, same label with a suffix).
  RadialConformalMetric scaled(double c) const;

  /// Metric with factor c * E and the disc stretched so that the boundary
  /// sits at r = r_b_new; describes the same Riemannian disc.
  RadialConformalMetric rescaled_to(double r_b_new) const;

  /// Raw evaluator, no domain check. Used for composition.
  const JetFn& evaluator() const noexcept { return factor_; }

 private:
  JetFn factor_;
  double r_b_;
  std::string label_;
};

/// 2 / (1 + r^2): the round unit-sphere metric in stereographic coordinates.
template <typename S>
S cap_factor(const S& r) {
  return S(2.0) / (S(1.0) + r * r);
}

RadialConformalMetric cap_profile(double r_b = kCapDiscRadius);
RadialConformalMetric flat_profile(double r_b = kCapDiscRadius);

/// K_h(r) = -E^{-2} Lap_e log E; at the axis the Laplacian is 2 (log E)''(0).
double gauss_curvature(const RadialConformalMetric& m, double r);

/// Geodesic curvature of the circle r = R: (1/E) (1/R + E'/E).
double geodesic_curvature(const RadialConformalMetric& m, double R);

/// 2 pi int_0^{r_b} K E^2 r dr + 2 pi r_b E(r_b) k(r_b) - 2 pi.
double gauss_bonnet_residual(const RadialConformalMetric& m, const Tolerances& tol = {});

/// Harmonic interpolation E_t = E0 E1 / ((1-t) E1 + t E0).
RadialConformalMetric interpolate_path(const RadialConformalMetric& m0,
                                       const RadialConformalMetric& m1, double t);

struct CurvatureReport {
  double t = 0.0;  ///< path parameter, 0 for stand-alone reports
  std::vector<std::pair<double, double>> samples;  ///< (r, K)
  double min_K = 0.0;
  double k_boundary = 0.0;
  double gauss_bonnet_residual = 0.0;
};

/// Samples K on n_r uniform radii (axis and boundary included).
CurvatureReport curvature_report(const RadialConformalMetric& m, int n_r = 256,
                                 const Tolerances& tol = {});

/// Tolerance used for the k_h = 1 hypothesis.
inline constexpr double kBoundaryCurvatureTol = 1e-8;

/// Throws PreconditionError naming "K>0" or "k_h=1" when m is not admissible.
void require_admissible(const RadialConformalMetric& m, int n_r = 256);

/// One report per t in linspace(0, 1, n_t) along the harmonic path.
std::vector<CurvatureReport> path_invariant_report(const RadialConformalMetric& m0,
                                                   const RadialConformalMetric& m1, int n_t,
                                                   int n_r = 256, const Tolerances& tol = {});

}  // namespace fbweyl
