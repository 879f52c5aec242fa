#include "fbweyl/report_io.hpp"

#include <array>
#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "fbweyl/errors.hpp"

namespace fbweyl::io {

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "pretty") return Format::pretty;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

namespace {

double parse_double(std::string_view s) {
  double value = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw DomainError("malformed number '" + std::string(s) + "'");
  }
  return value;
}

std::array<double, 11> fields(const ScanRow& r) {
  return {r.m_adm,          static_cast<double>(r.branch), r.gamma,
          r.k_h,            r.min_K,                       r.mass.int_He,
          r.mass.int_H,     r.mass.mass_fb_by,             r.mass.hm_lhs,
          r.mass.hm_rhs,    r.mass.boundary_gap};
}

const std::array<const char*, 11> kNames = {"m_adm",  "branch", "gamma",      "k_h",
                                            "min_K",  "int_He", "int_H",      "mass_fb_by",
                                            "hm_lhs", "hm_rhs", "boundary_gap"};

std::string render_csv(const std::vector<ScanRow>& rows) {
  std::string out(kScanCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    const auto f = fields(r);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ',';
      out += i == 1 ? std::to_string(r.branch) : format_double(f[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const std::vector<ScanRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    const auto f = fields(r);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i == 1) {
        obj[kNames[i]] = r.branch;
      } else {
        obj[kNames[i]] = f[i];
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render_pretty(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "m_adm" << std::setw(7) << "branch";
  for (std::size_t i = 2; i < kNames.size(); ++i) out << std::setw(15) << kNames[i];
  out << '\n';
  out << std::setprecision(8);
  for (const auto& r : rows) {
    const auto f = fields(r);
    out << std::setw(10) << r.m_adm << std::setw(7) << r.branch;
    for (std::size_t i = 2; i < f.size(); ++i) out << std::setw(15) << f[i];
    out << '\n';
  }
  return out.str();
}

ScanRow from_fields(const std::array<double, 11>& f) {
  ScanRow r;
  r.m_adm = f[0];
  r.branch = static_cast<int>(f[1]);
  r.gamma = f[2];
  r.k_h = f[3];
  r.min_K = f[4];
  r.mass.int_He = f[5];
  r.mass.int_H = f[6];
  r.mass.mass_fb_by = f[7];
  r.mass.hm_lhs = f[8];
  r.mass.hm_rhs = f[9];
  r.mass.boundary_gap = f[10];
  return r;
}

}  // namespace

std::size_t emit(const std::vector<ScanRow>& rows, Format format, std::ostream& out) {
  std::string text;
  switch (format) {
    case Format::csv:
      text = render_csv(rows);
      break;
    case Format::json:
      text = render_json(rows);
      break;
    case Format::pretty:
      text = render_pretty(rows);
      break;
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw std::ios_base::failure("failed to write report");
  return text.size();
}

std::vector<ScanRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kScanCsvHeader) {
    throw DomainError("CSV header mismatch");
  }
  std::vector<ScanRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 11> f{};
    std::size_t start = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::size_t end = line.find(',', start);
      if ((end == std::string::npos) != (i + 1 == f.size())) {
        throw DomainError("CSV row has the wrong number of fields: " + line);
      }
      const std::string_view cell(line.data() + start,
                                  (end == std::string::npos ? line.size() : end) - start);
      f[i] = parse_double(cell);
      start = end + 1;
    }
    rows.push_back(from_fields(f));
  }
  return rows;
}

std::vector<ScanRow> parse_json(std::istream& in) {
  const nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<ScanRow> rows;
  for (const auto& obj : doc) {
    std::array<double, 11> f{};
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = obj.at(kNames[i]).get<double>();
    rows.push_back(from_fields(f));
  }
  return rows;
}

}  // namespace fbweyl::io
