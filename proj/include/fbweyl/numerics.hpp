#pragma once

#include <functional>
#include <vector>

namespace fbweyl {

/// Numerical knobs shared by every module. All fields must be positive and
/// grid_n at least 16; see validate().
struct Tolerances {
  double quad_tol = 1e-10;    ///< absolute quadrature tolerance
  double root_tol = 1e-12;    ///< final bracket width for root refinement
  double fd_step = 1e-6;      ///< smallest step used by finite differences
  int grid_n = 2048;          ///< default number of radial samples
  double tangent_tol = 1e-9;  ///< |f| accepted at a double (tangential) root

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

namespace numerics {

using RealFn = std::function<double(double)>;

/// Globally adaptive 15-point Gauss-Kronrod quadrature of f over [a, b].
/// Throws EvaluationError carrying the abscissa of the first non-finite value.
double integrate(const RealFn& f, double a, double b, const Tolerances& tol = {});

struct Root {
  double x;
  bool tangential;  ///< even-multiplicity root found without a sign change

  friend bool operator==(const Root&, const Root&) = default;
};

/// All roots of f on [lo, hi]. The interval is split into n_seed brackets;
/// sign changes are refined by bisection, and brackets without a sign change
/// whose end slopes disagree are searched for a touching extremum.
/// Result is sorted ascending.
std::vector<Root> find_roots(const RealFn& f, double lo, double hi, int n_seed = 512,
                             const Tolerances& tol = {});

/// Convenience wrapper returning only the abscissae.
std::vector<double> root_positions(const std::vector<Root>& roots);

/// First or second derivative of f at x by Richardson-extrapolated central
/// differences (Ridders' scheme).
double derivative(const RealFn& f, double x, int order, const Tolerances& tol = {});

/// n uniformly spaced points on [a, b], endpoints included.
std::vector<double> linspace(double a, double b, int n);

}  // namespace numerics
}  // namespace fbweyl
