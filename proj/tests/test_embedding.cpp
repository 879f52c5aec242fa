#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fbweyl/embedding.hpp"
#include "fbweyl/errors.hpp"
#include "fbweyl/invariants.hpp"
#include "fbweyl/schwarzschild.hpp"

using namespace fbweyl;

namespace {

const SchwarzschildParams kExample{3.0 / 16, 9.0 / 32};

RadialConformalMetric perturbed(const RadialConformalMetric& base) {
  auto f = base.evaluator();
  return RadialConformalMetric(
      [f](double r) {
        const Jet<double> x = Jet<double>::variable(r);
        return f(r) * (1.0 + 0.01 * x * x);
      },
      base.r_b(), base.label() + "*(1+0.01r^2)");
}

SolveOptions unchecked() {
  SolveOptions o;
  o.require_admissible = false;
  return o;
}

}  // namespace

TEST_CASE("cap embeds as the model spherical cap") {
  const auto e = solve_embedding(cap_profile());
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    const double r = e.grid()[i];
    const double c = (1 - r * r) / (1 + r * r), s = 2 * r / (1 + r * r);
    CHECK(std::abs(e.Psi()[i] - s) <= 1e-10);
    CHECK(std::abs(e.Z()[i] - (std::sqrt(2.0) - c)) <= 1e-10);
  }
  const Eigen::Index mid = e.size() / 2;
  const double r = e.grid()[mid];
  const double c = (1 - r * r) / (1 + r * r), s = 2 * r / (1 + r * r);
  const Eigen::Vector3d p = e.point(mid, 0.7);
  CHECK((p - Eigen::Vector3d(s * std::sin(0.7), s * std::cos(0.7), std::sqrt(2.0) - c)).norm() <= 1e-10);
  CHECK(std::abs(e.height(0.123) - (std::sqrt(2.0) - (1 - 0.123 * 0.123) / (1 + 0.123 * 0.123))) <= 1e-10);
}

TEST_CASE("Schwarzschild example lands on the unit sphere") {
  const auto e = solve_embedding(conformal_profile(kExample));
  const Eigen::Index b = e.size() - 1;
  CHECK(std::abs(e.point(b, 0.3).norm() - 1) <= 1e-10);
}

TEST_CASE("solve_embedding: hypotheses are enforced") {
  try {
    solve_embedding(flat_profile());
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& ex) {
    CHECK(ex.hypothesis() == "K>0");
  }

  const RadialConformalMetric saddle([](double r) { return Jet<double>{1 + r * r, 2 * r, 2}; }, 0.4,
                                     "saddle");
  try {
    solve_embedding(saddle, {}, unchecked());
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& ex) {
    CHECK(ex.hypothesis() == "embeddability radicand>=0");
  }

  CHECK_THROWS_AS(solve_embedding(cap_profile().scaled(3.0), {}, unchecked()), PreconditionError);
}

TEST_CASE("free boundary residuals") {
  const auto cap = free_boundary_residuals(solve_embedding(cap_profile()));
  CHECK(cap.max() <= 1e-10);

  const auto ex = free_boundary_residuals(solve_embedding(conformal_profile(kExample)));
  CHECK(ex.max() <= 1e-8);

  // Breaking k_h = 1 must be visible in the radial conditions.
  const auto bad = free_boundary_residuals(solve_embedding(perturbed(cap_profile()), {}, unchecked()));
  CHECK(bad.radial_psi > 1e-3);
  CHECK(bad.radial_z > 1e-3);
}

TEST_CASE("extrinsic_geometry on the cap") {
  const auto e = solve_embedding(cap_profile());
  for (double r : {0.0, 0.05, 0.2, kCapDiscRadius}) {
    const ExtrinsicData d = extrinsic_geometry(e, r, 0.4);
    CHECK(std::abs(d.H_e - 2) <= 1e-10);
    CHECK(std::abs(d.kappa1 - 1) <= 1e-6);
    CHECK(std::abs(d.kappa2 - 1) <= 1e-6);
    CHECK(d.A_rr > 0);
  }
}

TEST_CASE("extrinsic_geometry: algebraic identities on the example") {
  const auto metric = conformal_profile(kExample);
  const auto e = solve_embedding(metric);
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> ur(0, kCapDiscRadius), up(0, 2 * std::numbers::pi);
  for (int i = 0; i < 30; ++i) {
    const double r = ur(rng);
    const ExtrinsicData d = extrinsic_geometry(e, r, up(rng));
    CHECK(std::abs(d.kappa1 + d.kappa2 - d.H_e) <= 1e-10);
    CHECK(std::abs(d.kappa1 * d.kappa2 - d.K_e) <= 1e-10);
    CHECK(std::abs(d.K_e - gauss_curvature(metric, r)) <= 1e-7);
    CHECK(d.kappa1 >= d.kappa2);
    CHECK(std::abs(extrinsic_geometry(metric, r).H_e - d.H_e) <= 1e-10);
  }
}

TEST_CASE("extrinsic_geometry: axis value is the limit of nearby samples") {
  const auto metric = conformal_profile(kExample);
  const double axis = extrinsic_geometry(metric, 0.0).H_e;
  CHECK(std::isfinite(axis));
  // H_e is even in r: extrapolate the r^2 term away.
  const double h = 1e-3;
  const double limit = (4 * extrinsic_geometry(metric, h).H_e - extrinsic_geometry(metric, 2 * h).H_e) / 3;
  CHECK(std::abs(limit - axis) <= 1e-6);
  CHECK(std::abs(extrinsic_geometry(metric, 1e-5).H_e - axis) <= 1e-6);
}

TEST_CASE("meridian-form mean curvature agrees up to the normal orientation") {
  const auto metric = conformal_profile(kExample);
  for (double r : numerics::linspace(kCapDiscRadius / 16, kCapDiscRadius, 40)) {
    const double He = extrinsic_geometry(metric, r).H_e;
    const double display = meridian_form_mean_curvature(metric, kExample.gamma, r);
    CHECK(std::abs(-display - He) <= 1e-8 * std::abs(He));
  }
}

TEST_CASE("principal_curvatures") {
  auto [a, b] = principal_curvatures(2, 1);
  CHECK(a == doctest::Approx(1));
  CHECK(b == doctest::Approx(1));
  auto [c, d] = principal_curvatures(3, 2);
  CHECK(c == doctest::Approx(2));
  CHECK(d == doctest::Approx(1));
  CHECK_THROWS_AS(principal_curvatures(2, 2), DomainError);
}

TEST_CASE("Monge-Ampere residual") {
  const auto cap = solve_embedding(cap_profile());
  auto [in_cap, bd_cap] = monge_ampere_residual(cap, 0.2);
  CHECK(std::abs(in_cap) <= 1e-8);
  CHECK(std::abs(bd_cap) <= 1e-8);
  CHECK_THROWS_AS(monge_ampere_residual(cap, 0.0), DomainError);

  const auto ex = solve_embedding(conformal_profile(kExample));
  double worst = 0;
  for (double r : numerics::linspace(kCapDiscRadius / 17, kCapDiscRadius * 16 / 17, 16)) {
    worst = std::max(worst, std::abs(monge_ampere_residual(ex, r).first));
  }
  CHECK(worst <= 1e-6);
  CHECK(std::abs(monge_ampere_residual(ex, kCapDiscRadius).second) <= 1e-8);
}

TEST_CASE("meridian_jet: radicand factorisation matches E^2 - Psi'^2") {
  const auto metric = conformal_profile(kExample);
  for (double r : {0.01, 0.1, 0.3, kCapDiscRadius}) {
    const MeridianJet j = meridian_jet(metric, r);
    CHECK(std::abs(j.radicand - (j.E * j.E - j.dPsi * j.dPsi)) <= 1e-12);
    CHECK(std::abs(j.dZ * j.dZ - j.radicand) <= 1e-12);
  }
}
