#pragma once

// Truncated power series in the unit disk and harmonic maps f = h + conj(g).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace harmomap {

using Complex = std::complex<double>;

/// Default truncation for polynomial-like series.
inline constexpr std::size_t kDefaultPolynomialOrder = 256;
/// Default truncation for hypergeometric families.
inline constexpr std::size_t kDefaultHypergeometricOrder = 4096;
/// Scans stay inside |z| <= 1 - kBoundaryMargin.
inline constexpr double kBoundaryMargin = 1e-3;

/// A point of the open unit disk.
class DiskPoint {
 public:
  /// Throws DomainError if |z| >= 1.
  explicit DiskPoint(Complex z);

  [[nodiscard]] Complex value() const noexcept { return z_; }
  [[nodiscard]] double modulus() const noexcept { return std::abs(z_); }

 private:
  Complex z_;
};

/// Value together with the first two derivatives of a series at one point.
struct SeriesJet {
  Complex value;
  Complex d1;
  Complex d2;
};

/// Coefficients c_0..c_N of sum c_n z^n. Immutable after construction.
class AnalyticSeries {
 public:
  /// The zero series of order 0.
  AnalyticSeries();
  /// An empty coefficient vector is treated as the zero series.
  explicit AnalyticSeries(std::vector<Complex> coeffs);

  static AnalyticSeries zero(std::size_t order);
  /// coefficient * z^power, padded with zeros up to `order` (>= power).
  static AnalyticSeries monomial(std::size_t power, Complex coefficient, std::size_t order);

  [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of z^n; zero beyond the truncation.
  [[nodiscard]] Complex operator[](std::size_t n) const noexcept {
    return n < coeffs_.size() ? coeffs_[n] : Complex{};
  }
  /// Index of the last nonzero coefficient (0 for the zero series).
  [[nodiscard]] std::size_t degree() const noexcept;

  /// Horner evaluation. No domain check: polynomials are entire, and callers
  /// evaluating a truncated infinite series own the truncation error.
  [[nodiscard]] Complex operator()(Complex z) const noexcept;
  /// Value, first and second derivative in one Horner pass.
  [[nodiscard]] SeriesJet jet(Complex z) const noexcept;

  [[nodiscard]] AnalyticSeries derivative() const;
  /// Termwise integral with zero constant term; order grows by one.
  [[nodiscard]] AnalyticSeries antiderivative() const;
  /// Multiply by z^k; order grows by k.
  [[nodiscard]] AnalyticSeries shifted(std::size_t k) const;
  [[nodiscard]] AnalyticSeries scaled(Complex factor) const;
  /// Zero-pad (or cut) to exactly `order`.
  [[nodiscard]] AnalyticSeries truncated(std::size_t order) const;

  friend AnalyticSeries operator+(const AnalyticSeries& p, const AnalyticSeries& q);
  friend AnalyticSeries operator-(const AnalyticSeries& p, const AnalyticSeries& q);

 private:
  std::vector<Complex> coeffs_;
};

/// f = h + conj(g) with h(0) = 0, h'(0) = 1, g(0) = 0 unless built relaxed.
class HarmonicMap {
 public:
  /// Validates the normalization; throws HypothesisError otherwise.
  HarmonicMap(AnalyticSeries h, AnalyticSeries g);

  /// Skips the normalization check (for f = conj(z) and similar test maps).
  static HarmonicMap relaxed(AnalyticSeries h, AnalyticSeries g);

  static HarmonicMap identity();

  [[nodiscard]] const AnalyticSeries& h() const noexcept { return h_; }
  [[nodiscard]] const AnalyticSeries& g() const noexcept { return g_; }
  [[nodiscard]] std::size_t truncation() const noexcept;
  /// b_1 = g'(0).
  [[nodiscard]] Complex b1() const noexcept { return g_[1]; }
  [[nodiscard]] bool is_normalized() const noexcept;

 private:
  struct Unchecked {};
  HarmonicMap(AnalyticSeries h, AnalyticSeries g, Unchecked);

  AnalyticSeries h_;
  AnalyticSeries g_;
};

/// The pair (f_z, f_zbar) = (h'(z), conj(g'(z))).
struct Partials {
  Complex f_z;
  Complex f_zbar;
};

[[nodiscard]] Complex eval(const HarmonicMap& f, DiskPoint z);
[[nodiscard]] Partials partials(const HarmonicMap& f, DiskPoint z);
/// |h'|^2 - |g'|^2.
[[nodiscard]] double jacobian(const HarmonicMap& f, DiskPoint z);
/// Df = z f_z - conj(z) f_zbar.
[[nodiscard]] Complex d_operator(const HarmonicMap& f, DiskPoint z);

/// Coefficientwise product; the shorter operand is zero-padded, so the
/// result has the larger of the two orders.
[[nodiscard]] AnalyticSeries hadamard(const AnalyticSeries& p, const AnalyticSeries& q);

/// Integral from 0 to z of t h'(t) dt: coefficient n a_n / (n + 1) at z^(n+1).
/// Requires h(0) = 0.
[[nodiscard]] AnalyticSeries weighted_antiderivative(const AnalyticSeries& h);

// Convolution kernels from their closed-form coefficient rules.

/// z / (1 - z): coefficient 1 for n >= 1.
[[nodiscard]] AnalyticSeries geometric_kernel(std::size_t order);
/// z / (1 - z)^2: coefficient n.
[[nodiscard]] AnalyticSeries koebe_kernel(std::size_t order);
/// log(1 - z): coefficient -1/n for n >= 1.
[[nodiscard]] AnalyticSeries log_kernel(std::size_t order);

}  // namespace harmomap
