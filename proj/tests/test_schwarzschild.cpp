#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fbweyl/errors.hpp"
#include "fbweyl/schwarzschild.hpp"

using namespace fbweyl;

namespace {

const SchwarzschildParams kExample{3.0 / 16, 9.0 / 32};

double sup_gap_to_cap(double m) {
  const auto s = conformal_profile({m, 1.0});
  const auto cap = cap_profile();
  double sup = 0;
  for (double r : numerics::linspace(0, kCapDiscRadius, 257)) sup = std::max(sup, std::abs(s.E(r) - cap.E(r)));
  return sup;
}

}  // namespace

TEST_CASE("conformal_profile: flat space gives the cap") {
  const auto s = conformal_profile({0.0, 1.0});
  const auto cap = cap_profile();
  for (double r : numerics::linspace(0, kCapDiscRadius, 17)) {
    CHECK(std::abs(s.E(r) - cap.E(r)) <= 1e-15);
    CHECK(std::abs(s.dE(r) - cap.dE(r)) <= 1e-14);
  }
}

TEST_CASE("conformal_profile: example values") {
  const double expected_axis = std::pow((4 + std::sqrt(2.0)) / 3, 2) * 9.0 / 16;
  CHECK(std::abs(schwarzschild_factor(kExample, 0.0) - expected_axis) <= 1e-14);
  CHECK(expected_axis == doctest::Approx(1.832).epsilon(1e-3));
  CHECK(std::abs(coordinate_radius(kExample, kCapDiscRadius) - kExample.gamma) <= 1e-15);
  CHECK(std::abs(coordinate_radius(kExample, 0.0) - kExample.gamma * (std::sqrt(2.0) - 1)) <= 1e-15);
}

TEST_CASE("profile limit m -> 0 is linear in m") {
  const double ratio = sup_gap_to_cap(1e-3) / sup_gap_to_cap(1e-4);
  CHECK(ratio == doctest::Approx(10).epsilon(1e-2));
}

TEST_CASE("geodesic_curvature_closed_form") {
  CHECK(std::abs(geodesic_curvature_closed_form(kExample) - 1) <= 1e-15);
  for (double g : {0.3, 1.0, 4.0}) {
    CHECK(geodesic_curvature_closed_form({0.0, g}) == doctest::Approx(1 / g).epsilon(1e-15));
  }
  CHECK(is_admissible(kExample));
  CHECK_FALSE(is_admissible({0.1875, 0.5}));
  CHECK_THROWS_AS(geodesic_curvature_closed_form({0.1, 0.0}), DomainError);
}

TEST_CASE("closed-form k_h agrees with the generic circle curvature") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> um(0.0, 0.6), ug(0.05, 3.0);
  for (int i = 0; i < 20; ++i) {
    const SchwarzschildParams p{um(rng), ug(rng)};
    if (p.gamma <= p.m_adm / 2) continue;
    const double generic = geodesic_curvature(conformal_profile(p), kCapDiscRadius);
    CHECK(std::abs(generic - geodesic_curvature_closed_form(p)) <= 1e-8);
  }
}

TEST_CASE("admissible_gammas") {
  const auto ex = admissible_gammas(3.0 / 16);
  REQUIRE(ex.size() == 2);
  CHECK(std::any_of(ex.begin(), ex.end(), [](double g) { return std::abs(g - 9.0 / 32) <= 1e-8; }));
  CHECK(admissible_gammas(0.10).size() == 2);
  CHECK(admissible_gammas(0.18).size() == 2);
  CHECK(admissible_gammas(0.20).empty());
  CHECK(admissible_gammas(0.25).empty());

  const auto threshold = admissible_gamma_roots(kCriticalMass);
  REQUIRE(threshold.size() == 1);
  CHECK(threshold[0].tangential);
  CHECK(threshold[0].x == doctest::Approx(0.36).epsilon(0.01));
  CHECK(std::abs(geodesic_curvature_closed_form({kCriticalMass, threshold[0].x}) - 1) <= 1e-6);
}

TEST_CASE("admissible root count is non-increasing in m") {
  std::size_t previous = 2;
  for (double m : numerics::linspace(0.001, 0.3, 200)) {
    const std::size_t n = admissible_gammas(m).size();
    CHECK(n <= previous);
    CHECK(n != 1);
    previous = n;
  }
}

TEST_CASE("radial_normal_component") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> ug(0.1, 2.0), um(0.0, 0.2);
  for (int i = 0; i < 20; ++i) {
    const SchwarzschildParams p{um(rng), ug(rng)};
    CHECK(std::abs(radial_normal_component(p, kCapDiscRadius)) <= 1e-12);
    CHECK(std::abs(radial_normal_component(p, 0.0) + 1) <= 1e-12);
    // Polar-angle form: (gamma / r)(1 - sqrt(2) cos(theta)) with rhat = tan(theta / 2).
    for (double rhat : {0.05, 0.2, 0.35}) {
      const double theta = 2 * std::atan(rhat);
      const double r = coordinate_radius(p, rhat);
      const double form = p.gamma / r * (1 - std::sqrt(2.0) * std::cos(theta));
      CHECK(std::abs(radial_normal_component(p, rhat) - form) <= 1e-12);
    }
  }
}

TEST_CASE("intrinsic_mean_curvature: flat cap") {
  for (double r : numerics::linspace(0, kCapDiscRadius, 9)) {
    CHECK(std::abs(intrinsic_mean_curvature({0.0, 1.0}, r) - 2) <= 1e-14);
  }
}

TEST_CASE("support_sphere_data") {
  const auto ex = support_sphere_data(kExample);
  CHECK(ex.H_S == doctest::Approx(2).epsilon(1e-15));
  CHECK(ex.K_S == doctest::Approx(4).epsilon(1e-15));
  const auto flat = support_sphere_data({0.0, 1.0});
  CHECK(flat.H_S == 2.0);
  CHECK(flat.K_S == 1.0);
}

TEST_CASE("boundary_traces") {
  const auto flat = boundary_traces({0.0, 1.0}, solve_embedding(cap_profile()));
  CHECK(std::abs(flat.tr_Ae - 1) <= 1e-8);
  CHECK(std::abs(flat.tr_A - 1) <= 1e-8);
  CHECK(std::abs(flat.gap) <= 1e-8);

  const auto ex = boundary_traces(kExample, solve_embedding(conformal_profile(kExample)));
  CHECK(ex.gap > 0);
  CHECK(std::abs(ex.tr_A - ex.tr_A_oracle) <= 1e-5);
  // tr_Ae is the cotangent of the boundary polar angle on the unit sphere.
  const double psi = schwarzschild_factor(kExample, kCapDiscRadius) * kCapDiscRadius;
  CHECK(std::abs(ex.tr_Ae - std::sqrt(1 - psi * psi) / psi) <= 1e-10);
}
