#pragma once

// Sufficient coefficient conditions for close-to-convexity (class C1_H) and
// full starlikeness, closed-form weighted sums for the hypergeometric
// families, and the c-thresholds that follow from them.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harmomap/series.hpp"
#include "harmomap/special.hpp"

namespace harmomap {

/// A boundary within this distance of the bound still certifies.
inline constexpr double kBoundaryTolerance = 1e-9;

enum class Verdict { kCertified, kNotCertified };
enum class CertificateMethod { kClosedForm, kSeriesWithTail };

[[nodiscard]] std::string_view to_string(Verdict verdict) noexcept;
[[nodiscard]] std::string_view to_string(CertificateMethod method) noexcept;

/// Outcome of a one-sided sufficient criterion. "not-certified" only says the
/// condition failed; it says nothing about the geometric property itself.
struct Certificate {
  std::string criterion;
  /// Property that a certified verdict implies.
  std::string conclusion;
  double sum_value = 0.0;
  double bound = 1.0;
  double margin = 1.0;
  Verdict verdict = Verdict::kNotCertified;
  /// Certified only thanks to kBoundaryTolerance.
  bool boundary = false;
  CertificateMethod method = CertificateMethod::kClosedForm;
  std::optional<std::size_t> truncation;
  std::optional<double> tail_bound;
  std::vector<std::string> notes;

  [[nodiscard]] bool certified() const noexcept { return verdict == Verdict::kCertified; }
};

/// Builds a Certificate with verdict, margin and boundary flag filled in.
/// With a tail bound the verdict uses sum_value + tail_bound.
[[nodiscard]] Certificate make_certificate(std::string criterion, std::string conclusion, double sum_value,
                                           double bound, CertificateMethod method,
                                           std::optional<std::size_t> truncation = std::nullopt,
                                           std::optional<double> tail_bound = std::nullopt);

/// Which coefficient inequality is applied to a harmonic map.
enum class CoefficientRoute {
  /// |b_1| < 1 allowed; sum_{n>=2} n|a_n| + sum_{n>=1} n|b_n| <= 1 gives C1_H.
  kCloseToConvex,
  /// b_1 = 0 required; the same sum <= 1 also gives full starlikeness.
  kFullyStarlike,
};

/// Sums the coefficient condition over the stored truncation. `tail_bound`
/// folds in a known bound on the neglected coefficients.
/// Throws HypothesisError when b_1 violates the route's requirement.
[[nodiscard]] Certificate coefficient_margin(const HarmonicMap& f, CoefficientRoute route,
                                             std::optional<double> tail_bound = std::nullopt);

/// The hypergeometric families, named as on the command line.
enum class HyperFamily {
  kT41a,  ///< z + conj(alpha z^2 F)
  kT41b,  ///< z + conj(alpha z (F - 1))
  kT41c,  ///< z + conj(alpha z F)
  kT44a,  ///< z + conj(alpha int_0^z F)
  kT44b,  ///< z + conj(alpha z int_0^z F)
  kC46a,  ///< z + conj((alpha c / ab)(F - 1))
  kC46b,  ///< z + conj((alpha c / ab) z (F - 1))
};

[[nodiscard]] std::string_view to_string(HyperFamily family) noexcept;
/// Throws HypothesisError for unknown names.
[[nodiscard]] HyperFamily parse_hyper_family(std::string_view name);
[[nodiscard]] const std::vector<HyperFamily>& all_hyper_families();

struct FamilySpec {
  HyperFamily family;
  HypergeometricParams params;
  Complex alpha;
};

/// Co-analytic coefficient b_n of the family (h = z). Zero below the
/// family's first index.
[[nodiscard]] Complex family_coefficient(const FamilySpec& spec, std::size_t n);
/// Smallest n with a (generically) nonzero b_n.
[[nodiscard]] std::size_t family_first_index(HyperFamily family) noexcept;
/// b_n is built from A_{n - shift}.
[[nodiscard]] std::size_t family_shift(HyperFamily family) noexcept;

/// Checks the convergence hypotheses shared by the closed form and the
/// series (c against a + b, and the per-family side conditions on a, b).
void check_convergence(const FamilySpec& spec);
/// Checks the convergence hypotheses plus the range of |alpha|.
void check_hypotheses(const FamilySpec& spec);

/// sum n|b_n| from Gauss-formula closed forms, certified against 1.
[[nodiscard]] Certificate family_k_closed(const FamilySpec& spec);

/// sum n|b_n| summed directly to `truncation` with a bound on the tail.
/// The tail bound uses a Raabe-type ratio estimate
/// t_{n+1}/t_n <= 1 - s/(n+1) with s > 1 sampled on [N, 2^20 N].
/// Throws ConvergenceError if that exponent is not above 1.
[[nodiscard]] CoeffSumResult family_k_series(const FamilySpec& spec, std::size_t truncation);

/// Threshold corollaries: a = 1 specializations with a quadratic in c.
enum class ThresholdFamily {
  kC42a,  ///< from T41a
  kC42b,  ///< from T41b
  kC47,   ///< from C46a
};

[[nodiscard]] std::string_view to_string(ThresholdFamily family) noexcept;
[[nodiscard]] ThresholdFamily parse_threshold_family(std::string_view name);

/// A c^2 + B c + C >= 0 is equivalent to the parent certificate holding.
struct Quadratic {
  double a2;
  double a1;
  double a0;
};

struct ThresholdRoots {
  double root_plus;
  double root_minus;
  Quadratic quadratic;
};

[[nodiscard]] Quadratic threshold_quadratic(ThresholdFamily family, double b, Complex alpha);

/// Both roots of the threshold quadratic, root_plus >= root_minus.
/// Throws DegenerateQuadraticError when the leading coefficient vanishes,
/// HypothesisError when b <= 0 or |alpha| is outside the corollary's range.
[[nodiscard]] ThresholdRoots threshold_c(ThresholdFamily family, double b, Complex alpha);

/// The family whose certificate the threshold reproduces, at a = 1 and the given c.
[[nodiscard]] FamilySpec threshold_parent(ThresholdFamily family, double b, Complex alpha, double c);

}  // namespace harmomap
