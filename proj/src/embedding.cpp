#include "fbweyl/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "fbweyl/errors.hpp"

namespace fbweyl {

MeridianJet meridian_jet(const RadialConformalMetric& m, double r) {
  const Jet<double> e = m.jet(r);
  MeridianJet j;
  j.r = r;
  j.E = e.v;
  j.dE = e.d1;
  j.Psi = e.v * r;
  j.dPsi = e.v + r * e.d1;
  j.d2Psi = 2.0 * e.d1 + r * e.d2;

  // E' / r, with its axis limit E''(0).
  const double w = r == 0.0 ? e.d2 : e.d1 / r;
  const double stretch = 2.0 * e.v + r * e.d1;
  const double rho = -w * stretch;  // (E^2 - Psi'^2) / r^2
  j.radicand = r * r * rho;
  const double g = std::sqrt(std::max(rho, 0.0));  // Z' / r
  j.dZ = r * g;
  j.d2Z = g > 0 ? (-e.v * w - e.v * e.d2 - 2.0 * e.d1 * e.d1 - r * e.d1 * e.d2) / g : 0.0;
  return j;
}

struct EmbeddingSolver {
  static RevolutionEmbedding solve(const RadialConformalMetric& m, const Tolerances& tol,
                                   const SolveOptions& options) {
    tol.validate();
    if (options.require_admissible) require_admissible(m, options.admissibility_samples);

    const int n = tol.grid_n;
    RevolutionEmbedding out(m);
    const std::vector<double> nodes = numerics::linspace(0.0, m.r_b(), n);
    out.grid_ = Eigen::Map<const Eigen::VectorXd>(nodes.data(), n);
    out.psi_.resize(n);
    out.z_.resize(n);
    out.dpsi_.resize(n);
    out.dz_.resize(n);
    out.d2psi_.resize(n);
    out.d2z_.resize(n);

    for (int i = 0; i < n; ++i) {
      const MeridianJet j = meridian_jet(m, nodes[i]);
      if (j.radicand < -options.radicand_tol) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "E^2 - (d(E r)/dr)^2 = " << j.radicand << " < 0 at node " << i
            << " (r = " << nodes[i] << ") of metric '" << m.label() << "'";
        throw PreconditionError("embeddability radicand>=0", msg.str());
      }
      out.psi_[i] = j.Psi;
      out.dpsi_[i] = j.dPsi;
      out.d2psi_[i] = j.d2Psi;
      out.dz_[i] = j.dZ;
      out.d2z_[i] = j.d2Z;
    }

    const double psi_b = out.psi_[n - 1];
    if (psi_b > 1.0) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "boundary circle has radius Psi(r_b) = " << psi_b << " > 1";
      throw PreconditionError("boundary inside unit ball", msg.str());
    }
    out.z_[n - 1] = std::sqrt(1.0 - psi_b * psi_b);

    Tolerances local = tol;
    local.quad_tol = tol.quad_tol / n;
    auto dz = [&m](double r) { return meridian_jet(m, r).dZ; };
    for (int i = n - 2; i >= 0; --i) {
      out.z_[i] = out.z_[i + 1] - numerics::integrate(dz, nodes[i], nodes[i + 1], local);
    }
    return out;
  }
};

RevolutionEmbedding solve_embedding(const RadialConformalMetric& m, const Tolerances& tol,
                                    const SolveOptions& options) {
  return EmbeddingSolver::solve(m, tol, options);
}

double RevolutionEmbedding::height(double r, const Tolerances& tol) const {
  if (!(r >= 0.0 && r <= metric_.r_b())) throw DomainError("height: r outside the disc");
  const auto* begin = grid_.data();
  const auto* end = begin + grid_.size();
  const auto* it = std::lower_bound(begin, end, r);
  const Eigen::Index i = std::min<Eigen::Index>(it - begin, grid_.size() - 1);
  if (grid_[i] == r) return z_[i];
  Tolerances local = tol;
  local.quad_tol = std::min(tol.quad_tol, 1e-13);
  const auto& m = metric_;
  return z_[i] - numerics::integrate([&m](double s) { return meridian_jet(m, s).dZ; }, r,
                                     grid_[i], local);
}

Eigen::Vector3d RevolutionEmbedding::point(Eigen::Index i, double phi) const {
  return {psi_[i] * std::sin(phi), psi_[i] * std::cos(phi), z_[i]};
}

FreeBoundaryResiduals free_boundary_residuals(const RevolutionEmbedding& e) {
  const Eigen::Index b = e.size() - 1;
  const double E = e.metric().E(e.metric().r_b());
  FreeBoundaryResiduals res;
  res.sphere = std::abs(e.Psi()[b] * e.Psi()[b] + e.Z()[b] * e.Z()[b] - 1.0);
  res.radial_psi = std::abs(e.dPsi()[b] - E * e.Psi()[b]);
  res.radial_z = std::abs(e.dZ()[b] - E * e.Z()[b]);
  return res;
}

namespace {

ExtrinsicData fundamental_forms(const MeridianJet& j, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  const Eigen::Vector3d Fr(j.dPsi * s, j.dPsi * c, j.dZ);
  const Eigen::Vector3d Fp(j.Psi * c, -j.Psi * s, 0.0);
  const Eigen::Vector3d Frr(j.d2Psi * s, j.d2Psi * c, j.d2Z);
  const Eigen::Vector3d Frp(j.dPsi * c, -j.dPsi * s, 0.0);
  const Eigen::Vector3d Fpp(-j.Psi * s, -j.Psi * c, 0.0);

  ExtrinsicData out;
  if (j.r == 0.0) {
    // Axis: F_phi vanishes, the meridian normal is still well defined and
    // the surface is umbilic there.
    Eigen::Vector3d nu(-j.dZ * s, -j.dZ * c, j.dPsi);
    nu.normalize();
    double a_rr = Frr.dot(nu);
    if (a_rr < 0) {
      nu = -nu;
      a_rr = -a_rr;
    }
    const double kappa = a_rr / Fr.squaredNorm();
    out.A_rr = a_rr;
    out.A_pp = 0.0;
    out.H_e = 2.0 * kappa;
    out.K_e = kappa * kappa;
    out.kappa1 = out.kappa2 = kappa;
    out.nu = nu;
    return out;
  }

  if (!(j.Psi > 0)) throw DomainError("extrinsic_geometry: degenerate surface (Psi = 0 off axis)");
  Eigen::Vector3d nu = Fr.cross(Fp).normalized();
  Eigen::Matrix2d first;
  first << Fr.dot(Fr), Fr.dot(Fp), Fp.dot(Fr), Fp.dot(Fp);
  Eigen::Matrix2d second;
  second << Frr.dot(nu), Frp.dot(nu), Frp.dot(nu), Fpp.dot(nu);
  const Eigen::Matrix2d shape = first.inverse() * second;
  if (shape.trace() < 0) {
    nu = -nu;
    second = -second;
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix2d> solver(second, first,
                                                                   Eigen::EigenvaluesOnly);
  out.A_rr = second(0, 0);
  out.A_pp = second(1, 1);
  out.H_e = (first.inverse() * second).trace();
  out.K_e = second.determinant() / first.determinant();
  out.kappa1 = solver.eigenvalues()(1);
  out.kappa2 = solver.eigenvalues()(0);
  out.nu = nu;
  return out;
}

}  // namespace

ExtrinsicData extrinsic_geometry(const RadialConformalMetric& m, double r, double phi) {
  return fundamental_forms(meridian_jet(m, r), phi);
}

ExtrinsicData extrinsic_geometry(const RevolutionEmbedding& e, double r, double phi) {
  return extrinsic_geometry(e.metric(), r, phi);
}

std::pair<double, double> principal_curvatures(double H, double K) {
  const double disc = 0.25 * H * H - K;
  if (disc < -1e-12) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "principal_curvatures: H^2/4 - K = " << disc << " < 0 (non-real curvatures)";
    throw DomainError(msg.str());
  }
  const double s = std::sqrt(std::max(disc, 0.0));
  return {0.5 * H + s, 0.5 * H - s};
}

std::pair<double, double> monge_ampere_residual(const RevolutionEmbedding& e, double r,
                                                const Tolerances& tol) {
  const auto& m = e.metric();
  if (!(r > 0.0 && r <= m.r_b())) {
    throw DomainError("monge_ampere_residual: r must lie in (0, r_b]; the polar chart degenerates at the axis");
  }
  const MeridianJet j = meridian_jet(m, r);
  const double Z = e.height(r, tol);
  const double df = j.Psi * j.dPsi + Z * j.dZ;
  const double d2f = j.dPsi * j.dPsi + j.Psi * j.d2Psi + j.dZ * j.dZ + Z * j.d2Z;

  // Christoffel symbols of E^2 (dr^2 + r^2 dphi^2): Gamma^r_rr = E'/E,
  // Gamma^r_phiphi = -r (1 + r E'/E).
  const double log_slope = j.dE / j.E;
  const double hess_rr = d2f - log_slope * df;
  const double hess_pp = r * (1.0 + r * log_slope) * df;
  const double h_rr = j.E * j.E;
  const double h_pp = h_rr * r * r;

  const double support = (j.Psi * j.dZ - Z * j.dPsi) / j.E;  // F . nu up to sign
  const double K = gauss_curvature(m, r);
  const double interior = (hess_rr - h_rr) * (hess_pp - h_pp) - h_rr * h_pp * K * support * support;

  const Eigen::Index b = e.size() - 1;
  const double boundary =
      e.Psi()[b] * e.dPsi()[b] + e.Z()[b] * e.dZ()[b] - m.E(m.r_b());
  return {interior, boundary};
}

}  // namespace fbweyl
