#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "harmomap/series.hpp"

namespace testing {

using harmomap::Complex;

inline bool close(Complex x, Complex y, double tol) { return std::abs(x - y) <= tol; }

/// Seeded generator; every property test uses a fixed seed.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Complex random_complex(std::mt19937_64& gen, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(gen), u(gen)};
}

/// A point with |z| <= radius, uniform in angle and modulus.
inline Complex random_disk_point(std::mt19937_64& gen, double radius) {
  std::uniform_real_distribution<double> r(0.0, radius);
  std::uniform_real_distribution<double> t(0.0, 6.283185307179586);
  return std::polar(r(gen), t(gen));
}

/// Random polynomial of the given degree with zero constant term.
inline harmomap::AnalyticSeries random_polynomial(std::mt19937_64& gen, std::size_t degree, double scale,
                                                  bool normalized) {
  std::vector<Complex> c(degree + 1);
  for (std::size_t n = 1; n <= degree; ++n) c[n] = random_complex(gen, scale);
  if (normalized && degree >= 1) c[1] = 1.0;
  return harmomap::AnalyticSeries(std::move(c));
}

}  // namespace testing
