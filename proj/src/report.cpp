#include "harmomap/report.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "harmomap/error.hpp"

namespace harmomap {

namespace {

constexpr std::string_view kOneSidedNote =
    "note: the condition is sufficient only; not-certified does not disprove the conclusion";

nlohmann::json optional_json(const auto& value) {
  if (value) return *value;
  return nullptr;
}

std::vector<Complex> parse_side(const nlohmann::json& side, std::string_view name) {
  if (!side.is_array()) throw DomainError(fmt::format("coefficient record: \"{}\" must be an array", name));
  std::vector<Complex> coeffs;
  coeffs.reserve(side.size());
  for (const auto& entry : side) {
    if (entry.is_number()) {
      coeffs.emplace_back(entry.get<double>(), 0.0);
    } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number()) {
      coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    } else {
      throw DomainError(fmt::format("coefficient record: entry {} of \"{}\" is not [re, im]", coeffs.size(), name));
    }
  }
  if (coeffs.empty()) coeffs.emplace_back();
  return coeffs;
}

nlohmann::json side_json(const AnalyticSeries& s) {
  auto out = nlohmann::json::array();
  for (const Complex c : s.coeffs()) out.push_back({c.real(), c.imag()});
  return out;
}

}  // namespace

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

std::string format_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "criterion: " << cert.criterion << '\n';
  out << "conclusion: " << cert.conclusion << '\n';
  out << "sum: " << fmt::format("{:.12g}", cert.sum_value) << '\n';
  out << "bound: " << fmt::format("{:.15g}", cert.bound) << '\n';
  out << "margin: " << fmt::format("{:.12g}", cert.margin) << '\n';
  out << "method: " << to_string(cert.method) << '\n';
  if (cert.truncation) out << "truncation: " << *cert.truncation << '\n';
  if (cert.tail_bound) out << "tail_bound: " << fmt::format("{:.6g}", *cert.tail_bound) << '\n';
  out << "verdict: " << to_string(cert.verdict) << (cert.boundary ? " (boundary)" : "") << '\n';
  for (const auto& note : cert.notes) out << "note: " << note << '\n';
  if (!cert.certified()) out << kOneSidedNote << '\n';
  return out.str();
}

nlohmann::json to_json(const Certificate& cert) {
  return {
      {"criterion", cert.criterion},
      {"conclusion", cert.conclusion},
      {"sum", cert.sum_value},
      {"bound", cert.bound},
      {"margin", cert.margin},
      {"verdict", to_string(cert.verdict)},
      {"boundary", cert.boundary},
      {"method", to_string(cert.method)},
      {"truncation", optional_json(cert.truncation)},
      {"tail_bound", optional_json(cert.tail_bound)},
      {"notes", cert.notes},
  };
}

std::string format_grid_report(const GridReport& report) {
  std::ostringstream out;
  out << "functional: " << report.functional << '\n';
  out << "min: " << fmt::format("{:.12g}", report.min_value) << '\n';
  out << "argmin: r=" << fmt::format("{:.6g}", report.argmin.r) << " theta=" << fmt::format("{:.9g}", report.argmin.theta)
      << " z=" << fmt::format("{:.9g}{:+.9g}i", report.argmin.z().real(), report.argmin.z().imag()) << '\n';
  out << "samples: " << report.samples << '\n';
  if (report.degenerate_count > 0) {
    out << "degenerate: " << report.degenerate_count;
    if (report.degenerate_witness) {
      out << fmt::format(" (first at r={:.6g} theta={:.9g})", report.degenerate_witness->r,
                         report.degenerate_witness->theta);
    }
    out << '\n';
  }
  if (report.truncation_warning) out << "warning: truncation tail not negligible at the largest radius\n";
  out << "verdict: " << to_string(report.verdict) << '\n';
  out << "disclaimer: " << report.disclaimer << '\n';
  return out.str();
}

nlohmann::json to_json(const GridReport& report) {
  nlohmann::json degenerate_witness = nullptr;
  if (report.degenerate_witness) {
    degenerate_witness = {{"r", report.degenerate_witness->r}, {"theta", report.degenerate_witness->theta}};
  }
  return {
      {"functional", report.functional},
      {"min", report.min_value},
      {"argmin", {{"r", report.argmin.r}, {"theta", report.argmin.theta}}},
      {"samples", report.samples},
      {"verdict", to_string(report.verdict)},
      {"disclaimer", report.disclaimer},
      {"degenerate_count", report.degenerate_count},
      {"degenerate_witness", degenerate_witness},
      {"truncation_warning", report.truncation_warning},
  };
}

void write_scan_csv(std::ostream& out, const GridReport& report) {
  if (report.trace.empty()) throw DomainError("scan CSV needs a report produced with keep_trace");
  out << "r,theta,re,im,value\n";
  for (const auto& row : report.trace) {
    out << format_number(row.at.r) << ',' << format_number(row.at.theta) << ',' << format_number(row.image.real())
        << ',' << format_number(row.image.imag()) << ',' << format_number(row.value) << '\n';
  }
}

HarmonicMap parse_coefficients(const nlohmann::json& record) {
  if (!record.is_object()) throw DomainError("coefficient record must be a JSON object");
  if (!record.contains("h")) throw DomainError("coefficient record: missing \"h\"");
  if (record.contains("b") && record.contains("g")) {
    throw DomainError("coefficient record: give either \"b\" or \"g\", not both");
  }
  const auto h = parse_side(record.at("h"), "h");
  std::vector<Complex> g{Complex{}};
  if (record.contains("b")) g = parse_side(record.at("b"), "b");
  if (record.contains("g")) g = parse_side(record.at("g"), "g");
  return HarmonicMap(AnalyticSeries(h), AnalyticSeries(g));
}

HarmonicMap read_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(fmt::format("cannot open coefficient file '{}'", path));
  nlohmann::json record;
  try {
    in >> record;
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(fmt::format("malformed coefficient file '{}': {}", path, e.what()));
  }
  return parse_coefficients(record);
}

nlohmann::json coefficients_json(const HarmonicMap& f) { return {{"h", side_json(f.h())}, {"b", side_json(f.g())}}; }

}  // namespace harmomap
