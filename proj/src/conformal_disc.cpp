#include "fbweyl/conformal_disc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fbweyl/errors.hpp"

namespace fbweyl {

RadialConformalMetric::RadialConformalMetric(JetFn factor, double r_b, std::string label)
    : factor_(std::move(factor)), r_b_(r_b), label_(std::move(label)) {
  if (!(r_b_ > 0) || !std::isfinite(r_b_)) throw DomainError("disc radius must be positive");
  for (double r : numerics::linspace(0.0, r_b_, 65)) {
    const double e = factor_(r).v;
    if (!(e > 0) || !std::isfinite(e)) {
      std::ostringstream msg;
      msg << "conformal factor of '" << label_ << "' is not positive at r = " << r;
      throw DomainError(msg.str());
    }
  }
  const Jet<double> axis = factor_(0.0);
  if (std::abs(axis.d1) > 1e-8 * std::max(1.0, axis.v)) {
    throw DomainError("conformal factor of '" + label_ +
                      "' is not smooth at the axis (E'(0) != 0)");
  }
}

RadialConformalMetric RadialConformalMetric::from_values(std::function<double(double)> factor,
                                                         double r_b, std::string label,
                                                         const Tolerances& tol) {
  auto even = [factor](double r) { return factor(std::abs(r)); };
  JetFn jet = [even, tol](double r) {
    return Jet<double>(even(r), numerics::derivative(even, r, 1, tol),
                       numerics::derivative(even, r, 2, tol));
  };
  return RadialConformalMetric(std::move(jet), r_b, std::move(label));
}

Jet<double> RadialConformalMetric::jet(double r) const {
  if (!(r >= 0.0 && r <= r_b_ * (1.0 + 1e-14))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "r = " << r << " outside [0, " << r_b_ << "] for metric '" << label_ << "'";
    throw DomainError(msg.str());
  }
  return factor_(r);
}

RadialConformalMetric RadialConformalMetric::scaled(double c) const {
  if (!(c > 0)) throw DomainError("scale factor must be positive");
  JetFn inner = factor_;
  std::ostringstream name;
  name << label_ << " x" << c;
  return RadialConformalMetric([inner, c](double r) { return inner(r) * c; }, r_b_,
                               name.str());
}

RadialConformalMetric RadialConformalMetric::rescaled_to(double r_b_new) const {
  if (!(r_b_new > 0)) throw DomainError("disc radius must be positive");
  const double s = r_b_ / r_b_new;
  JetFn inner = factor_;
  return RadialConformalMetric(
      [inner, s](double rho) {
        const Jet<double> e = inner(rho * s);
        return Jet<double>(s * e.v, s * s * e.d1, s * s * s * e.d2);
      },
      r_b_new, label_ + " (rescaled)");
}

RadialConformalMetric cap_profile(double r_b) {
  return RadialConformalMetric(
      [](double r) { return cap_factor(Jet<double>::variable(r)); }, r_b, "cap");
}

RadialConformalMetric flat_profile(double r_b) {
  return RadialConformalMetric([](double) { return Jet<double>(1.0); }, r_b, "flat");
}

double gauss_curvature(const RadialConformalMetric& m, double r) {
  const Jet<double> e = m.jet(r);
  const double dlog = e.d1 / e.v;
  const double d2log = e.d2 / e.v - dlog * dlog;
  const double laplacian = r == 0.0 ? 2.0 * d2log : d2log + dlog / r;
  return -laplacian / (e.v * e.v);
}

double geodesic_curvature(const RadialConformalMetric& m, double R) {
  if (!(R > 0)) throw DomainError("geodesic_curvature: circle radius must be positive");
  const Jet<double> e = m.jet(R);
  return (1.0 / R + e.d1 / e.v) / e.v;
}

double gauss_bonnet_residual(const RadialConformalMetric& m, const Tolerances& tol) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double total_curvature = numerics::integrate(
      [&m](double r) {
        const double e = m.E(r);
        return gauss_curvature(m, r) * e * e * r;
      },
      0.0, m.r_b(), tol);
  const double rb = m.r_b();
  const double boundary_term = rb * m.E(rb) * geodesic_curvature(m, rb);
  return two_pi * (total_curvature + boundary_term) - two_pi;
}

RadialConformalMetric interpolate_path(const RadialConformalMetric& m0,
                                       const RadialConformalMetric& m1, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("interpolate_path: t must lie in [0, 1]");
  if (m0.r_b() != m1.r_b()) throw DomainError("interpolate_path: metrics live on different discs");
  auto e0 = m0.evaluator();
  auto e1 = m1.evaluator();
  std::ostringstream name;
  name << "path(" << m0.label() << " -> " << m1.label() << ", t=" << t << ")";
  return RadialConformalMetric(
      [e0, e1, t](double r) {
        const Jet<double> a = e0(r);
        const Jet<double> b = e1(r);
        return a * b / ((1.0 - t) * b + t * a);
      },
      m0.r_b(), name.str());
}

CurvatureReport curvature_report(const RadialConformalMetric& m, int n_r,
                                 const Tolerances& tol) {
  if (n_r < 2) throw DomainError("curvature_report: need at least two samples");
  CurvatureReport report;
  report.samples.reserve(static_cast<std::size_t>(n_r));
  report.min_K = std::numeric_limits<double>::infinity();
  for (double r : numerics::linspace(0.0, m.r_b(), n_r)) {
    const double k = gauss_curvature(m, r);
    report.samples.emplace_back(r, k);
    report.min_K = std::min(report.min_K, k);
  }
  report.k_boundary = geodesic_curvature(m, m.r_b());
  report.gauss_bonnet_residual = gauss_bonnet_residual(m, tol);
  return report;
}

void require_admissible(const RadialConformalMetric& m, int n_r) {
  for (double r : numerics::linspace(0.0, m.r_b(), n_r)) {
    const double K = gauss_curvature(m, r);
    if (!(K > 0)) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "metric '" << m.label() << "' has Gauss curvature " << K << " at r = " << r;
      throw PreconditionError("K>0", msg.str());
    }
  }
  const double k = geodesic_curvature(m, m.r_b());
  if (!(std::abs(k - 1.0) <= kBoundaryCurvatureTol)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "metric '" << m.label() << "' has boundary geodesic curvature " << k;
    throw PreconditionError("k_h=1", msg.str());
  }
}

std::vector<CurvatureReport> path_invariant_report(const RadialConformalMetric& m0,
                                                   const RadialConformalMetric& m1, int n_t,
                                                   int n_r, const Tolerances& tol) {
  if (n_t < 1) throw DomainError("path_invariant_report: n_t must be positive");
  require_admissible(m0, n_r);
  require_admissible(m1, n_r);
  std::vector<CurvatureReport> out;
  out.reserve(static_cast<std::size_t>(n_t));
  for (double t : numerics::linspace(0.0, 1.0, n_t)) {
    CurvatureReport report = curvature_report(interpolate_path(m0, m1, t), n_r, tol);
    report.t = t;
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace fbweyl
