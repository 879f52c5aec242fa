#pragma once

#include <string>
#include <vector>

#include "fbweyl/conformal_disc.hpp"
#include "fbweyl/numerics.hpp"

namespace fbweyl {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0;
  double threshold = 0;
};

/// Mean curvature from the meridian-form expression written in terms of
/// psi = Psi / gamma, zeta = Z / gamma and E = E~ / gamma:
///   zeta' / (gamma |(psi', zeta')|) * (-psi / (E^2 r^2) + (psi'' - psi' zeta'' / zeta') / E^2).
/// This expression uses the outward normal, so it is the negative of
/// extrinsic_geometry(...).H_e. Independent of the fundamental-form code.
double meridian_form_mean_curvature(const RadialConformalMetric& m, double gamma, double r);

/// Runs the library's invariant checks (cap model, the (3/16, 9/32) example,
/// oracle cross-checks, exact combinatorics). Each entry reports its measured
/// value against the pass threshold.
std::vector<CheckResult> run_invariant_suite(const Tolerances& tol = {});

}  // namespace fbweyl
