#pragma once

// Convolution (Hadamard product) characterizations of full starlikeness.
// A zero of a kernel value at some 0 < |z| < 1, |zeta| = 1, zeta != -1 is a
// witness against full starlikeness; sampling finitely many (z, zeta) can
// only falsify, never prove.

#include <cstddef>
#include <vector>

#include "harmomap/series.hpp"

namespace harmomap {

/// A point on the unit circle.
class UnimodularParam {
 public:
  /// Throws DomainError if ||zeta| - 1| > 1e-12.
  explicit UnimodularParam(Complex zeta);
  static UnimodularParam at_angle(double phi);

  [[nodiscard]] Complex value() const noexcept { return zeta_; }
  [[nodiscard]] bool is_minus_one() const noexcept;

 private:
  Complex zeta_;
};

/// Coefficients n + (n-1)(zeta-1)/2 of (z + ((zeta-1)/2) z^2) / (1-z)^2.
[[nodiscard]] AnalyticSeries starlike_kernel_a(UnimodularParam zeta, std::size_t order);
/// Coefficients n conj(zeta) - (n-1)(conj(zeta)-1)/2 of the companion kernel.
[[nodiscard]] AnalyticSeries starlike_kernel_b(UnimodularParam zeta, std::size_t order);
/// Coefficients 2n + (zeta-1)(n-1) of (2z + (zeta-1) z^2) / (1-z)^2.
[[nodiscard]] AnalyticSeries mocanu_kernel_a(UnimodularParam zeta, std::size_t order);
/// Coefficients 2n + (conj(zeta)-1)(n+1 - 1/(n+1)) of
/// [2z^2 + z(conj(zeta)-1) + (1-z)^2 (conj(zeta)-1) log(1-z)] / (z (1-z)^2).
[[nodiscard]] AnalyticSeries mocanu_kernel_b(UnimodularParam zeta, std::size_t order);

/// The same kernels from their rational/logarithmic closed forms; only for
/// cross-checking the coefficient rules at moderate |z|.
[[nodiscard]] Complex starlike_kernel_a_closed(Complex z, UnimodularParam zeta);
[[nodiscard]] Complex starlike_kernel_b_closed(Complex z, UnimodularParam zeta);
[[nodiscard]] Complex mocanu_kernel_a_closed(Complex z, UnimodularParam zeta);
[[nodiscard]] Complex mocanu_kernel_b_closed(Complex z, UnimodularParam zeta);

/// (h * A)(z) - conj((g * B)(z)). Requires 0 < |z| < 1 and b_1 = 0.
[[nodiscard]] Complex starlike_kernel_value(const HarmonicMap& f, DiskPoint z, UnimodularParam zeta);

/// For f = h + conj(g) with g' = z h': (h * A)(z) - conj(z (h * B)(z)).
/// Requires 0 < |z| < 1 and h normalized.
[[nodiscard]] Complex mocanu_kernel_value(const AnalyticSeries& h, DiskPoint z, UnimodularParam zeta);

/// Direct route for the same quantity:
/// (zeta+1) z h' - (zeta-1) h - conj((conj(zeta)+1) z^2 h' + (conj(zeta)-1) int_0^z t h'(t) dt).
[[nodiscard]] Complex mocanu_direct_value(const AnalyticSeries& h, DiskPoint z, UnimodularParam zeta);

/// (z h' - conj(z g')) / (h + conj(g)); its real part is d/dtheta arg f(r e^{i theta}).
/// Throws DomainError when z = 0 or f(z) = 0.
[[nodiscard]] Complex direct_starlike_ratio(const HarmonicMap& f, DiskPoint z);

/// Smallest |kernel value| / |z| over a (z, zeta) mesh.
struct KernelScanReport {
  double min_scaled_abs = 0.0;
  Complex argmin_z{};
  Complex argmin_zeta{};
  std::size_t z_samples = 0;
  std::size_t zeta_samples = 0;
  /// min_scaled_abs > tolerance.
  bool nonvanishing = true;
};

/// Samples z on radii x angles and zeta on `zeta_samples` equispaced points
/// of the circle, skipping zeta = -1. Uses the starlike kernels.
[[nodiscard]] KernelScanReport scan_starlike_kernel(const HarmonicMap& f, const std::vector<double>& radii,
                                                    std::size_t angles, std::size_t zeta_samples,
                                                    double tolerance = 1e-9);
/// Same for the kernels of the g' = z h' class.
[[nodiscard]] KernelScanReport scan_mocanu_kernel(const AnalyticSeries& h, const std::vector<double>& radii,
                                                  std::size_t angles, std::size_t zeta_samples,
                                                  double tolerance = 1e-9);

}  // namespace harmomap
