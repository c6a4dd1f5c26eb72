#pragma once

// Text, JSON and CSV output for certificates and grid reports, and the
// coefficient file format {"h": [[re, im], ...], "b": [[re, im], ...]}.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "harmomap/criteria.hpp"
#include "harmomap/geometry.hpp"
#include "harmomap/series.hpp"

namespace harmomap {

/// Line-oriented "key: value" report. States that a failed certificate is
/// not a disproof.
[[nodiscard]] std::string format_certificate(const Certificate& cert);
[[nodiscard]] nlohmann::json to_json(const Certificate& cert);

/// Line-oriented report including the pass/violation disclaimer.
[[nodiscard]] std::string format_grid_report(const GridReport& report);
[[nodiscard]] nlohmann::json to_json(const GridReport& report);

/// Header r,theta,re,im,value, one row per trace sample, 17 significant digits.
/// Throws DomainError if the report was produced without a trace.
void write_scan_csv(std::ostream& out, const GridReport& report);

/// 17 significant digits, shortest form that round-trips.
[[nodiscard]] std::string format_number(double value);

/// Parses a coefficient record. "g" is accepted as an alias of "b".
/// Throws DomainError on malformed input and the HarmonicMap errors on
/// normalization failures.
[[nodiscard]] HarmonicMap parse_coefficients(const nlohmann::json& record);
[[nodiscard]] HarmonicMap read_coefficients(const std::string& path);
[[nodiscard]] nlohmann::json coefficients_json(const HarmonicMap& f);

}  // namespace harmomap
