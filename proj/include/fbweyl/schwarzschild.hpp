#pragma once

#include <cmath>
#include <vector>

#include "fbweyl/conformal_disc.hpp"
#include "fbweyl/embedding.hpp"
#include "fbweyl/numerics.hpp"

namespace fbweyl {

/// Spatial Schwarzschild metric phi^4 g_e, phi = 1 + m / (2|x|), with the disc
/// Sigma cut from the sphere of radius gamma centred at (0, 0, sqrt(2) gamma)
/// by the coordinate sphere |x| = gamma.
struct SchwarzschildParams {
  double m_adm = 0.0;
  double gamma = 1.0;

  /// Throws DomainError unless m_adm >= 0 and gamma > 0.
  void validate() const;
};

/// Conformal factor phi at coordinate radius r.
template <typename S>
S schwarzschild_phi(const SchwarzschildParams& p, const S& r) {
  return S(1.0) + S(p.m_adm) / (S(2.0) * r);
}

/// Coordinate radius |x| of the point of Sigma at stereographic radius rhat:
/// r^2 = gamma^2 (3 + 2^{3/2} - 2^{5/2} / (1 + rhat^2)).
template <typename S>
S coordinate_radius(const SchwarzschildParams& p, const S& rhat) {
  using std::sqrt;
  const double s2 = std::sqrt(2.0);
  const S q = S(3.0 + 2.0 * s2) - S(4.0 * s2) / (S(1.0) + rhat * rhat);
  return S(p.gamma) * sqrt(q);
}

/// Conformal factor of the induced metric on Sigma in stereographic
/// coordinates: phi(r(rhat))^2 * 2 gamma / (1 + rhat^2).
template <typename S>
S schwarzschild_factor(const SchwarzschildParams& p, const S& rhat) {
  const S phi = schwarzschild_phi(p, coordinate_radius(p, rhat));
  return phi * phi * S(2.0 * p.gamma) / (S(1.0) + rhat * rhat);
}

RadialConformalMetric conformal_profile(const SchwarzschildParams& p);

/// k_h = (1 / (gamma phi(gamma)^2)) (1 - m / (gamma phi(gamma))).
double geodesic_curvature_closed_form(const SchwarzschildParams& p);

/// |k_h - 1| <= kBoundaryCurvatureTol.
bool is_admissible(const SchwarzschildParams& p);

/// Every gamma > 0 solving k_h(m, gamma) = 1 on [m/2 + 1e-9, 10], ascending.
/// Double roots (at m = 3^{-3/2}) come back flagged as tangential.
std::vector<numerics::Root> admissible_gamma_roots(double m, const Tolerances& tol = {});
std::vector<double> admissible_gammas(double m, const Tolerances& tol = {});

/// Threshold mass 3^{-3/2} above which no admissible gamma exists.
inline const double kCriticalMass = 1.0 / std::pow(3.0, 1.5);

/// Euclidean dot product of the radial direction x/|x| with the outward unit
/// normal of Sigma (pointing away from the centre of its sphere).
double radial_normal_component(const SchwarzschildParams& p, double rhat);

/// Mean curvature of Sigma in the Schwarzschild metric, outward normal.
double intrinsic_mean_curvature(const SchwarzschildParams& p, double rhat);

struct SupportSphere {
  double H_S = 0;  ///< mean curvature of the coordinate sphere |x| = gamma
  double K_S = 0;  ///< its Gauss curvature, 1 / (areal radius)^2
};

SupportSphere support_sphere_data(const SchwarzschildParams& p);

struct BoundaryData {
  double tr_Ae = 0;  ///< A_e(T, T) of the embedded disc along the boundary
  double tr_A = 0;   ///< A(T, T) of Sigma in the Schwarzschild metric
  double gap = 0;    ///< tr_Ae - tr_A
  double tr_A_oracle = 0;  ///< finite-difference value of tr_A
  FreeBoundaryResiduals fb_residuals;
};

/// Boundary traces of the second fundamental forms. tr_A from the conformal
/// transformation law is cross-checked against a finite-difference covariant
/// derivative of the boundary tangent; disagreement beyond 1e-5 throws
/// InternalConsistencyError.
BoundaryData boundary_traces(const SchwarzschildParams& p, const RevolutionEmbedding& e,
                             const Tolerances& tol = {});

/// Finite-difference value of A(T, T) for the Schwarzschild metric along the
/// boundary circle of Sigma.
double boundary_trace_oracle(const SchwarzschildParams& p, const Tolerances& tol = {});

}  // namespace fbweyl
