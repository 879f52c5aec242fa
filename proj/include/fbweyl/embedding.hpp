#pragma once

#include <algorithm>
#include <utility>

#include <Eigen/Core>

#include "fbweyl/conformal_disc.hpp"
#include "fbweyl/numerics.hpp"

namespace fbweyl {

/// Analytic derivatives of the meridian (Psi, Z) of the surface of revolution
/// isometric to a radial metric. Z itself needs a quadrature and is absent.
struct MeridianJet {
  double r = 0, E = 0, dE = 0;
  double Psi = 0, dPsi = 0, d2Psi = 0;
  double dZ = 0, d2Z = 0;
  double radicand = 0;  ///< E^2 - Psi'^2, evaluated in factored form
};

/// Psi = E r and Z' = sqrt(E^2 - Psi'^2) with the radicand factored as
/// -r E' (2E + r E') so the axis behaviour is exact.
MeridianJet meridian_jet(const RadialConformalMetric& m, double r);

/// Sampled free-boundary embedding F(r, phi) = (Psi sin phi, Psi cos phi, Z)
/// of a radial metric into the closed unit ball.
class RevolutionEmbedding {
 public:
  const RadialConformalMetric& metric() const noexcept { return metric_; }
  const Eigen::VectorXd& grid() const noexcept { return grid_; }
  const Eigen::VectorXd& Psi() const noexcept { return psi_; }
  const Eigen::VectorXd& Z() const noexcept { return z_; }
  const Eigen::VectorXd& dPsi() const noexcept { return dpsi_; }
  const Eigen::VectorXd& dZ() const noexcept { return dz_; }
  const Eigen::VectorXd& d2Psi() const noexcept { return d2psi_; }
  const Eigen::VectorXd& d2Z() const noexcept { return d2z_; }
  Eigen::Index size() const noexcept { return grid_.size(); }

  /// Z at an arbitrary radius, integrated from the nearest node above.
  double height(double r, const Tolerances& tol = {}) const;

  /// F at grid node i and azimuth phi.
  Eigen::Vector3d point(Eigen::Index i, double phi) const;

 private:
  explicit RevolutionEmbedding(RadialConformalMetric m) : metric_(std::move(m)) {}
  friend struct EmbeddingSolver;

  RadialConformalMetric metric_;
  Eigen::VectorXd grid_, psi_, z_, dpsi_, dz_, d2psi_, d2z_;
};

struct SolveOptions {
  /// Reject metrics violating K>0 or k_h=1. Disable only to study what
  /// happens without the hypotheses.
  bool require_admissible = true;
  int admissibility_samples = 256;
  double radicand_tol = 1e-12;
};

/// Integrates the embedding inward from Z(r_b) = sqrt(1 - Psi(r_b)^2), so the
/// boundary lands on the unit sphere. Orthogonality to the sphere is not
/// imposed; see free_boundary_residuals.
RevolutionEmbedding solve_embedding(const RadialConformalMetric& m, const Tolerances& tol = {},
                                    const SolveOptions& options = {});

struct FreeBoundaryResiduals {
  double sphere = 0;      ///< | |F(r_b)|^2 - 1 |
  double radial_psi = 0;  ///< | Psi'(r_b) - E Psi(r_b) |
  double radial_z = 0;    ///< | Z'(r_b) - E Z(r_b) |

  double max() const { return std::max({sphere, radial_psi, radial_z}); }
};

FreeBoundaryResiduals free_boundary_residuals(const RevolutionEmbedding& e);

/// Second fundamental form and curvatures at (r, phi) with the normal chosen
/// so that A is positive definite on a convex surface.
struct ExtrinsicData {
  double A_rr = 0, A_pp = 0;
  double H_e = 0;
  double K_e = 0;  ///< det(A) / det(I)
  double kappa1 = 0, kappa2 = 0;  ///< kappa1 >= kappa2
  Eigen::Vector3d nu = Eigen::Vector3d::Zero();
};

ExtrinsicData extrinsic_geometry(const RevolutionEmbedding& e, double r, double phi = 0.0);

/// Mean curvature H_e from the metric alone; equals extrinsic_geometry(...).H_e.
ExtrinsicData extrinsic_geometry(const RadialConformalMetric& m, double r, double phi = 0.0);

/// Roots of k^2 - H k + K: (H/2 + s, H/2 - s), s = sqrt(H^2/4 - K).
/// Throws DomainError when H^2/4 - K < -1e-12.
std::pair<double, double> principal_curvatures(double H, double K);

/// Residuals of the Monge-Ampere identity for f = |F|^2 / 2:
/// first = det(Hess_h f - h) - det(h) K (F.nu)^2 at r, second = df/dr(r_b) - E(r_b).
std::pair<double, double> monge_ampere_residual(const RevolutionEmbedding& e, double r,
                                                const Tolerances& tol = {});

}  // namespace fbweyl
