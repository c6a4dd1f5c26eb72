#pragma once

// Pochhammer symbols, the Gamma function, and Gaussian hypergeometric
// coefficients A_n = (a,n)(b,n) / ((c,n) n!).

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "harmomap/series.hpp"

namespace harmomap {

/// Which of the admissible parameter regimes a hypergeometric triple is in.
enum class ParamMode {
  kRealPositiveProduct,  ///< a, b in (-1, inf), ab > 0
  kConjugatePair,        ///< b = conj(a), a != 0
  kNegativeInteger,      ///< a = b = -m, m a positive integer
};

[[nodiscard]] std::string_view to_string(ParamMode mode) noexcept;

/// (a, b, c) with c > 0 and one of the ParamMode regimes.
/// Construct through the named factories; each validates its regime.
class HypergeometricParams {
 public:
  static HypergeometricParams real_pair(double a, double b, double c);
  static HypergeometricParams conjugate_pair(Complex a, double c);
  static HypergeometricParams negative_integer(int m, double c);

  [[nodiscard]] Complex a() const noexcept { return a_; }
  [[nodiscard]] Complex b() const noexcept { return b_; }
  [[nodiscard]] double c() const noexcept { return c_; }
  [[nodiscard]] ParamMode mode() const noexcept { return mode_; }

  /// Re(a + b); a + b is real in every mode.
  [[nodiscard]] double sum_ab() const noexcept { return (a_ + b_).real(); }
  /// ab, real in every mode (|a|^2 for conjugate pairs).
  [[nodiscard]] double product_ab() const noexcept { return (a_ * b_).real(); }
  /// c - a - b.
  [[nodiscard]] double excess() const noexcept { return c_ - sum_ab(); }
  /// Degree of F when it is a polynomial (a = b = -m), otherwise empty.
  [[nodiscard]] std::optional<std::size_t> polynomial_degree() const noexcept;

  /// Same regime with c replaced.
  [[nodiscard]] HypergeometricParams with_c(double c) const;

 private:
  HypergeometricParams(Complex a, Complex b, double c, ParamMode mode);

  Complex a_;
  Complex b_;
  double c_;
  ParamMode mode_;
};

enum class SumMethod { kClosedForm, kSeries };

[[nodiscard]] std::string_view to_string(SumMethod method) noexcept;

/// A nonnegative sum, either exact from a closed form or a partial sum with
/// a bound on the neglected tail (value <= true sum <= value + tail_bound).
struct CoeffSumResult {
  double value = 0.0;
  SumMethod method = SumMethod::kClosedForm;
  std::optional<std::size_t> truncation;
  std::optional<double> tail_bound;
};

/// Rising factorial (a, n) = a (a+1) ... (a+n-1); (a, 0) = 1.
[[nodiscard]] Complex pochhammer(Complex a, std::size_t n) noexcept;

/// Gamma via Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2.
/// Throws PoleError at non-positive integers.
[[nodiscard]] Complex gamma(Complex z);

/// log Gamma on the principal branch of the Lanczos form; exp(log_gamma(z))
/// equals gamma(z) (the branch offset is a multiple of 2 pi i).
[[nodiscard]] Complex log_gamma(Complex z);

/// 1 / Gamma(z), zero at the poles of Gamma.
[[nodiscard]] Complex reciprocal_gamma(Complex z);

/// A_n for raw complex parameters via the ratio recurrence.
[[nodiscard]] Complex gauss_coeff(Complex a, Complex b, Complex c, std::size_t n) noexcept;
/// A_n = (a,n)(b,n) / ((c,n)(1,n)).
[[nodiscard]] Complex gauss_coeff(const HypergeometricParams& p, std::size_t n) noexcept;
/// A_0 .. A_N.
[[nodiscard]] std::vector<Complex> gauss_coeffs(Complex a, Complex b, Complex c, std::size_t order);
[[nodiscard]] std::vector<Complex> gauss_coeffs(const HypergeometricParams& p, std::size_t order);

/// Truncated series of F(a, b; c; z). Exact for terminating parameters.
[[nodiscard]] AnalyticSeries hypergeometric_series(Complex a, Complex b, Complex c, std::size_t order);

/// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)) for raw parameters.
/// Requires Re c > Re(a + b); throws ConvergenceError otherwise.
[[nodiscard]] Complex gauss_ratio(Complex a, Complex b, Complex c);

/// F(a, b; c; 1) by the Gauss formula. Real in every ParamMode: the
/// imaginary part is checked against 1e-10 (relative) and dropped.
[[nodiscard]] double gauss_sum(const HypergeometricParams& p);

/// |ab F(a+1, b+1; c+1; z) - c F'(a, b; c; z)| from truncated series of both
/// sides. Requires |z| <= 0.9.
[[nodiscard]] double derivative_identity_check(const HypergeometricParams& p, DiskPoint z);

}  // namespace harmomap
