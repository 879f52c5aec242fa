#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fbweyl/quasilocal_mass.hpp"

namespace fbweyl::io {

inline constexpr std::string_view kScanCsvHeader =
    "m_adm,branch,gamma,k_h,min_K,int_He,int_H,mass_fb_by,hm_lhs,hm_rhs,boundary_gap";

enum class Format { csv, json, pretty };

Format parse_format(std::string_view name);

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

/// Writes rows in the requested format; returns the number of bytes written.
/// Throws std::ios_base::failure-derived errors if the stream goes bad.
std::size_t emit(const std::vector<ScanRow>& rows, Format format, std::ostream& out);

std::vector<ScanRow> parse_csv(std::istream& in);
std::vector<ScanRow> parse_json(std::istream& in);

}  // namespace fbweyl::io
