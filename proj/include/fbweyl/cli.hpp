#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fbweyl/numerics.hpp"
#include "fbweyl/report_io.hpp"

namespace fbweyl::cli {

enum class Command { cap, schwarzschild, admissible, scan, path, check, catalan };

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

struct RunConfig {
  Command command = Command::check;
  std::optional<double> m_adm;
  std::optional<double> gamma;
  bool report = false;
  double m_lo = 0.01;
  double m_hi = 0.19;
  int n_m = 19;
  int n_t = 11;
  int n_r = 256;
  unsigned n_catalan = 10;
  unsigned workers = 0;
  Tolerances tol;
  std::optional<std::string> out_path;
  std::optional<io::Format> format;
};

/// Format actually used: explicit --format, else csv when writing to a file,
/// else pretty on a terminal and csv otherwise.
io::Format resolve_format(const RunConfig& config, bool stdout_is_terminal);

/// Applies FBWEYL_QUAD_TOL, FBWEYL_ROOT_TOL, FBWEYL_FD_STEP, FBWEYL_GRID_N.
Tolerances tolerances_from_env(Tolerances base);

/// Executes a parsed configuration. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err,
        bool stdout_is_terminal = false);

/// Parses argv and runs; usage errors return kExitUsage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               bool stdout_is_terminal = false);

}  // namespace fbweyl::cli
