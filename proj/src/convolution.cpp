#include "harmomap/convolution.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "harmomap/error.hpp"

namespace harmomap {

namespace {

void require_punctured(DiskPoint z) {
  if (z.value() == Complex{}) throw DomainError("kernel evaluation requires 0 < |z| < 1");
}

template <typename Rule>
AnalyticSeries kernel_from_rule(std::size_t order, Rule rule) {
  std::vector<Complex> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) c[n] = rule(static_cast<double>(n));
  return AnalyticSeries(std::move(c));
}

template <typename Eval>
KernelScanReport scan_kernel(const std::vector<double>& radii, std::size_t angles, std::size_t zeta_samples,
                             double tolerance, Eval&& eval_at) {
  KernelScanReport report;
  report.min_scaled_abs = std::numeric_limits<double>::infinity();
  report.z_samples = radii.size() * angles;
  const double dz = 2.0 * std::numbers::pi / static_cast<double>(angles);
  const double dzeta = 2.0 * std::numbers::pi / static_cast<double>(zeta_samples);
  for (std::size_t k = 0; k < zeta_samples; ++k) {
    const auto zeta = UnimodularParam::at_angle(dzeta * static_cast<double>(k));
    if (zeta.is_minus_one()) continue;
    ++report.zeta_samples;
    for (double r : radii) {
      for (std::size_t j = 0; j < angles; ++j) {
        const Complex z = std::polar(r, dz * static_cast<double>(j));
        const double scaled = std::abs(eval_at(DiskPoint(z), zeta)) / r;
        if (scaled < report.min_scaled_abs) {
          report.min_scaled_abs = scaled;
          report.argmin_z = z;
          report.argmin_zeta = zeta.value();
        }
      }
    }
  }
  report.nonvanishing = report.min_scaled_abs > tolerance;
  return report;
}

}  // namespace

UnimodularParam::UnimodularParam(Complex zeta) : zeta_(zeta) {
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12) {
    throw DomainError(fmt::format("zeta must lie on the unit circle (got |zeta| = {:.17g})", std::abs(zeta)));
  }
}

UnimodularParam UnimodularParam::at_angle(double phi) { return UnimodularParam(std::polar(1.0, phi)); }

bool UnimodularParam::is_minus_one() const noexcept { return std::abs(zeta_ + 1.0) < 1e-12; }

AnalyticSeries starlike_kernel_a(UnimodularParam zeta, std::size_t order) {
  const Complex s = zeta.value();
  return kernel_from_rule(order, [s](double n) { return n + (n - 1.0) * (s - 1.0) / 2.0; });
}

AnalyticSeries starlike_kernel_b(UnimodularParam zeta, std::size_t order) {
  const Complex s = std::conj(zeta.value());
  return kernel_from_rule(order, [s](double n) { return n * s - (n - 1.0) * (s - 1.0) / 2.0; });
}

AnalyticSeries mocanu_kernel_a(UnimodularParam zeta, std::size_t order) {
  const Complex s = zeta.value();
  return kernel_from_rule(order, [s](double n) { return 2.0 * n + (s - 1.0) * (n - 1.0); });
}

AnalyticSeries mocanu_kernel_b(UnimodularParam zeta, std::size_t order) {
  const Complex s = std::conj(zeta.value());
  return kernel_from_rule(order, [s](double n) { return 2.0 * n + (s - 1.0) * (n + 1.0 - 1.0 / (n + 1.0)); });
}

Complex starlike_kernel_a_closed(Complex z, UnimodularParam zeta) {
  const Complex s = zeta.value();
  return (z + (s - 1.0) / 2.0 * z * z) / ((1.0 - z) * (1.0 - z));
}

Complex starlike_kernel_b_closed(Complex z, UnimodularParam zeta) {
  const Complex s = std::conj(zeta.value());
  return (s * z - (s - 1.0) / 2.0 * z * z) / ((1.0 - z) * (1.0 - z));
}

Complex mocanu_kernel_a_closed(Complex z, UnimodularParam zeta) {
  const Complex s = zeta.value();
  return (2.0 * z + (s - 1.0) * z * z) / ((1.0 - z) * (1.0 - z));
}

Complex mocanu_kernel_b_closed(Complex z, UnimodularParam zeta) {
  const Complex s = std::conj(zeta.value());
  const Complex w = 1.0 - z;
  return (2.0 * z * z + z * (s - 1.0) + w * w * (s - 1.0) * std::log(w)) / (z * w * w);
}

Complex starlike_kernel_value(const HarmonicMap& f, DiskPoint z, UnimodularParam zeta) {
  require_punctured(z);
  if (f.b1() != Complex{}) throw HypothesisError("starlike kernel requires b1 = g'(0) = 0");
  const auto ha = hadamard(f.h(), starlike_kernel_a(zeta, f.h().order()));
  const auto gb = hadamard(f.g(), starlike_kernel_b(zeta, f.g().order()));
  return ha(z.value()) - std::conj(gb(z.value()));
}

Complex mocanu_kernel_value(const AnalyticSeries& h, DiskPoint z, UnimodularParam zeta) {
  require_punctured(z);
  const auto ha = hadamard(h, mocanu_kernel_a(zeta, h.order()));
  const auto hb = hadamard(h, mocanu_kernel_b(zeta, h.order()));
  const Complex w = z.value();
  return ha(w) - std::conj(w * hb(w));
}

Complex mocanu_direct_value(const AnalyticSeries& h, DiskPoint z, UnimodularParam zeta) {
  require_punctured(z);
  const Complex w = z.value();
  const Complex s = zeta.value();
  const auto jet = h.jet(w);
  // z^2 h' = z [h * z/(1-z)^2] and g = int_0^z t h'(t) dt.
  const Complex z2_hprime = w * hadamard(h, koebe_kernel(h.order()))(w);
  const Complex g = weighted_antiderivative(h)(w);
  return (s + 1.0) * w * jet.d1 - (s - 1.0) * jet.value -
         std::conj((std::conj(s) + 1.0) * z2_hprime + (std::conj(s) - 1.0) * g);
}

Complex direct_starlike_ratio(const HarmonicMap& f, DiskPoint z) {
  require_punctured(z);
  const Complex w = z.value();
  const auto hj = f.h().jet(w);
  const auto gj = f.g().jet(w);
  const Complex denominator = hj.value + std::conj(gj.value);
  if (std::abs(denominator) == 0.0) throw DomainError("starlike ratio undefined: f(z) = 0");
  return (w * hj.d1 - std::conj(w * gj.d1)) / denominator;
}

KernelScanReport scan_starlike_kernel(const HarmonicMap& f, const std::vector<double>& radii, std::size_t angles,
                                      std::size_t zeta_samples, double tolerance) {
  if (f.b1() != Complex{}) throw HypothesisError("starlike kernel requires b1 = g'(0) = 0");
  return scan_kernel(radii, angles, zeta_samples, tolerance, [&](DiskPoint z, UnimodularParam zeta) {
    return starlike_kernel_value(f, z, zeta);
  });
}

KernelScanReport scan_mocanu_kernel(const AnalyticSeries& h, const std::vector<double>& radii, std::size_t angles,
                                    std::size_t zeta_samples, double tolerance) {
  return scan_kernel(radii, angles, zeta_samples, tolerance, [&](DiskPoint z, UnimodularParam zeta) {
    return mocanu_kernel_value(h, z, zeta);
  });
}

}  // namespace harmomap
