#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fbweyl/numerics.hpp"
#include "fbweyl/schwarzschild.hpp"

namespace fbweyl {

/// Integrals entering the free-boundary Brown-York mass of Sigma.
struct MassReport {
  double int_He = 0;        ///< int_Sigma H_e dvol
  double int_H = 0;         ///< int_Sigma H dvol
  double mass_fb_by = 0;    ///< int_He - int_H
  double hm_lhs = 0;        ///< int_Sigma (H_e^2 / H - H) dvol
  double hm_rhs = 0;        ///< 2 * boundary_gap
  double boundary_gap = 0;  ///< int_{dSigma} (tr A_e - tr A) dvol
};

/// Extra per-pair diagnostics gathered while computing a MassReport.
struct MassDiagnostics {
  double k_h = 0;
  double min_K = 0;
  double min_H = 0;
  BoundaryData boundary;
};

/// Requires an admissible pair; throws PreconditionError("H>0") if Sigma is
/// not strictly mean convex on the grid.
MassReport mass_report(const SchwarzschildParams& p, const Tolerances& tol = {},
                       MassDiagnostics* diagnostics = nullptr);

struct ScanRow {
  double m_adm = 0;
  int branch = 0;  ///< 0 for the smaller admissible gamma
  double gamma = 0;
  double k_h = 0;
  double min_K = 0;
  MassReport mass;

  friend bool operator==(const ScanRow& a, const ScanRow& b);
};

using ScanWarning = std::function<void(const std::string&)>;

/// One row per (mass, admissible gamma). Masses are linspace(m_lo, m_hi, n_m)
/// (just m_lo when n_m == 1). Rows are computed on `workers` threads and
/// returned ordered by (mass index, branch); rows whose evaluation throws are
/// dropped after reporting through `warn`.
std::vector<ScanRow> scan(double m_lo, double m_hi, int n_m, const Tolerances& tol = {},
                          unsigned workers = 0, const ScanWarning& warn = {});

std::vector<ScanRow> scan(const std::vector<double>& masses, const Tolerances& tol = {},
                          unsigned workers = 0, const ScanWarning& warn = {});

}  // namespace fbweyl
