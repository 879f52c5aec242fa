#include "fbweyl/schwarzschild.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Core>

#include "fbweyl/errors.hpp"

namespace fbweyl {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

void SchwarzschildParams::validate() const {
  if (!(m_adm >= 0.0) || !std::isfinite(m_adm)) throw DomainError("m_adm must be >= 0");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be > 0");
}

RadialConformalMetric conformal_profile(const SchwarzschildParams& p) {
  p.validate();
  std::ostringstream name;
  name.precision(10);
  name << "schwarzschild(m=" << p.m_adm << ", gamma=" << p.gamma << ")";
  return RadialConformalMetric(
      [p](double rhat) { return schwarzschild_factor(p, Jet<double>::variable(rhat)); },
      kCapDiscRadius, name.str());
}

double geodesic_curvature_closed_form(const SchwarzschildParams& p) {
  p.validate();
  const double phi = schwarzschild_phi(p, p.gamma);
  return (1.0 - p.m_adm / (p.gamma * phi)) / (p.gamma * phi * phi);
}

bool is_admissible(const SchwarzschildParams& p) {
  return std::abs(geodesic_curvature_closed_form(p) - 1.0) <= kBoundaryCurvatureTol;
}

std::vector<numerics::Root> admissible_gamma_roots(double m, const Tolerances& tol) {
  if (!(m >= 0.0)) throw DomainError("admissible_gammas: mass must be >= 0");
  auto excess = [m](double gamma) {
    return geodesic_curvature_closed_form({m, gamma}) - 1.0;
  };
  return numerics::find_roots(excess, 0.5 * m + 1e-9, 10.0, 512, tol);
}

std::vector<double> admissible_gammas(double m, const Tolerances& tol) {
  return numerics::root_positions(admissible_gamma_roots(m, tol));
}

double radial_normal_component(const SchwarzschildParams& p, double rhat) {
  if (!(rhat >= 0.0 && rhat <= kCapDiscRadius * (1.0 + 1e-14))) {
    throw DomainError("radial_normal_component: rhat outside [0, sqrt(2)-1]");
  }
  const double r = coordinate_radius(p, rhat);
  return p.gamma / r * (1.0 + kSqrt2 - 2.0 * kSqrt2 / (1.0 + rhat * rhat));
}

double intrinsic_mean_curvature(const SchwarzschildParams& p, double rhat) {
  const double r = coordinate_radius(p, rhat);
  const double phi = schwarzschild_phi(p, r);
  const double nu_r = radial_normal_component(p, rhat);
  return (2.0 / p.gamma - 2.0 * p.m_adm / (phi * r * r) * nu_r) / (phi * phi);
}

SupportSphere support_sphere_data(const SchwarzschildParams& p) {
  p.validate();
  const double a = p.gamma;
  const double phi = schwarzschild_phi(p, a);
  const double areal = a * phi * phi;
  return {(2.0 / a - 2.0 * p.m_adm / (a * a * phi)) / (phi * phi), 1.0 / (areal * areal)};
}

double boundary_trace_oracle(const SchwarzschildParams& p, const Tolerances& tol) {
  // Boundary circle of Sigma, theta = pi/4, parametrised by azimuth t; the
  // computation is done at t = 0 (rotational symmetry).
  const double s = std::sin(std::numbers::pi / 4), c = std::cos(std::numbers::pi / 4);
  const double g = p.gamma;
  auto curve = [=](int k) {
    return [=](double t) {
      const double x[3] = {g * s * std::sin(t), g * s * std::cos(t), g * (kSqrt2 - c)};
      return x[k];
    };
  };
  Eigen::Vector3d x, dc, ddc;
  for (int k = 0; k < 3; ++k) {
    x[k] = curve(k)(0.0);
    dc[k] = numerics::derivative(curve(k), 0.0, 1, tol);
    ddc[k] = numerics::derivative(curve(k), 0.0, 2, tol);
  }

  // g = e^{2w} g_e with w = 2 log phi(|x|).
  auto w_along = [&](int k) {
    return [&, k](double h) {
      Eigen::Vector3d y = x;
      y[k] += h;
      return 2.0 * std::log(schwarzschild_phi(p, y.norm()));
    };
  };
  Eigen::Vector3d grad_w;
  for (int k = 0; k < 3; ++k) grad_w[k] = numerics::derivative(w_along(k), 0.0, 1, tol);

  // Levi-Civita connection of a conformally flat metric along the curve.
  const Eigen::Vector3d accel = ddc + 2.0 * dc.dot(grad_w) * dc - dc.squaredNorm() * grad_w;
  const Eigen::Vector3d centre(0.0, 0.0, kSqrt2 * g);
  const Eigen::Vector3d normal_e = (x - centre).normalized();
  const double phi = schwarzschild_phi(p, x.norm());
  // A(T,T) = -g(N, nabla_T T) with N = phi^{-2} normal_e and |T|_g = 1.
  return -normal_e.dot(accel) / (phi * phi * dc.squaredNorm());
}

BoundaryData boundary_traces(const SchwarzschildParams& p, const RevolutionEmbedding& e,
                             const Tolerances& tol) {
  p.validate();
  const double rb = kCapDiscRadius;
  const double E = e.metric().E(rb);

  BoundaryData out;
  out.tr_Ae = extrinsic_geometry(e, rb).A_pp / (E * E * rb * rb);

  const double r = coordinate_radius(p, rb);
  const double phi = schwarzschild_phi(p, r);
  const double nu_r = radial_normal_component(p, rb);
  out.tr_A = (1.0 / p.gamma - p.m_adm / (phi * r * r) * nu_r) / (phi * phi);
  out.tr_A_oracle = boundary_trace_oracle(p, tol);
  if (std::abs(out.tr_A - out.tr_A_oracle) > 1e-5) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "boundary trace of A: conformal law gives " << out.tr_A
        << " but the finite-difference oracle gives " << out.tr_A_oracle;
    throw InternalConsistencyError(msg.str());
  }
  out.gap = out.tr_Ae - out.tr_A;
  out.fb_residuals = free_boundary_residuals(e);
  return out;
}

}  // namespace fbweyl
