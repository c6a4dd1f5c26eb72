#pragma once

// Grid scans of the real functionals behind sense-preservation, C1_H, full
// starlikeness and the convexity functional, plus a polyline
// self-intersection probe for non-univalence.
//
// Scans are evidence, not proofs: a violation comes with a witness point, a
// pass only means no violation was sampled.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harmomap/series.hpp"

namespace harmomap {

/// Polar sample grid: radii in (0, 1 - kBoundaryMargin], M equispaced angles.
class ScanGrid {
 public:
  /// Throws DomainError unless radii are nonempty, strictly increasing,
  /// positive and at most 1 - kBoundaryMargin, and angles >= 64.
  ScanGrid(std::vector<double> radii, std::size_t angles);

  /// {0.1, ..., 0.9} u {0.95, 0.99} with 1024 angles.
  static ScanGrid defaults();
  /// Default radii plus 0.995 and 0.999, for functionals whose extremum sits on |z| = 1.
  static ScanGrid boundary_refined(std::size_t angles = 1024);

  [[nodiscard]] const std::vector<double>& radii() const noexcept { return radii_; }
  [[nodiscard]] std::size_t angles() const noexcept { return angles_; }
  [[nodiscard]] double r_max() const noexcept { return radii_.back(); }
  [[nodiscard]] double angle(std::size_t k) const noexcept;
  [[nodiscard]] std::size_t sample_count() const noexcept { return radii_.size() * angles_; }

 private:
  std::vector<double> radii_;
  std::size_t angles_;
};

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;

  [[nodiscard]] Complex z() const noexcept { return std::polar(r, theta); }
};

enum class ScanVerdict { kPassed, kViolated };

[[nodiscard]] std::string_view to_string(ScanVerdict verdict) noexcept;

/// Text attached to every report.
inline constexpr std::string_view kViolatedDisclaimer =
    "violated: witness found (conclusive up to floating-point arithmetic)";
inline constexpr std::string_view kPassedDisclaimer =
    "passed: no violation found on the sampled grid (inconclusive; not a proof)";

struct ScanTraceRow {
  PolarPoint at;
  Complex image;  ///< the scanned map evaluated at the point
  double value;
};

/// Minimum of a functional over a ScanGrid. Violated iff min_value <= 0.
struct GridReport {
  std::string functional;
  double min_value = 0.0;
  PolarPoint argmin;
  std::size_t samples = 0;
  ScanVerdict verdict = ScanVerdict::kPassed;
  std::string disclaimer;
  /// Points where the functional is undefined (f = 0, h' = 0, ...). They count as value 0.
  std::size_t degenerate_count = 0;
  std::optional<PolarPoint> degenerate_witness;
  /// Coefficients near the truncation are not negligible at r_max.
  bool truncation_warning = false;
  /// Every sample in grid order, filled only when requested.
  std::vector<ScanTraceRow> trace;

  [[nodiscard]] bool passed() const noexcept { return verdict == ScanVerdict::kPassed; }
};

/// One evaluation of a scanned functional.
struct ScanSample {
  double value = 0.0;
  Complex image{};
  bool degenerate = false;
};

struct ScanOptions {
  bool keep_trace = false;
  /// Worker threads; 0 means scan_thread_count().
  std::size_t workers = 0;
};

/// Evaluates `functional` on every grid point in parallel and reduces by
/// minimum; ties go to the lexicographically smallest (r, theta), so the
/// result is independent of scheduling.
[[nodiscard]] GridReport scan_functional(std::string name, const ScanGrid& grid,
                                         const std::function<ScanSample(Complex)>& functional,
                                         ScanOptions options = {});

/// Worker count for scans: hardware concurrency, capped by HARMOMAP_THREADS.
[[nodiscard]] std::size_t scan_thread_count();

/// True when |c_n| n^2 r^n for the last coefficients exceeds 1e-10. Series
/// stored to fewer than kDefaultPolynomialOrder terms count as exact polynomials.
[[nodiscard]] bool truncation_suspect(const AnalyticSeries& s, double r);

/// Re f_z - |f_zbar|.
[[nodiscard]] GridReport scan_ch1(const HarmonicMap& f, const ScanGrid& grid, ScanOptions options = {});
/// |h'|^2 - |g'|^2.
[[nodiscard]] GridReport scan_jacobian(const HarmonicMap& f, const ScanGrid& grid, ScanOptions options = {});
/// Re(Df / f). Requires b_1 = 0; |f| < 1e-12 is a degenerate witness.
[[nodiscard]] GridReport scan_fully_starlike(const HarmonicMap& f, const ScanGrid& grid, ScanOptions options = {});
/// Re(1 + z h''/h') - lower.
[[nodiscard]] GridReport scan_convexity_functional(const AnalyticSeries& h, const ScanGrid& grid, double lower,
                                                   ScanOptions options = {});
/// upper - Re(1 + z h''/h').
[[nodiscard]] GridReport scan_convexity_upper(const AnalyticSeries& h, const ScanGrid& grid, double upper,
                                              ScanOptions options = {});
/// 2/3 - |z h'/h - 2/3|.
[[nodiscard]] GridReport starlike_disk_bound_check(const AnalyticSeries& h, const ScanGrid& grid,
                                                   ScanOptions options = {});

/// Image of the disk under w = (1 - n^2 a z^(n-1)) / (1 - n a z^(n-1)).
struct MoebiusImage {
  bool half_plane = false;
  double center = 0.0;    ///< disk case
  double radius = 0.0;    ///< disk case
  double boundary = 0.0;  ///< half-plane case: Re w < boundary

  /// Infimum of Re w over the image (-infinity for the half-plane).
  [[nodiscard]] double min_real() const noexcept;
};

/// Requires n >= 2 and 0 < a <= 1/n; throws DomainError otherwise.
[[nodiscard]] MoebiusImage moebius_disk_image(int n, double a);

/// A proper crossing of two non-adjacent segments of a sampled image curve.
struct CurveCrossing {
  std::size_t segment_i;
  std::size_t segment_j;
  double theta_i;  ///< parameter on the first segment
  double theta_j;  ///< parameter on the second segment
  Complex point;
};

/// Sorts segments by x-extent and sweeps, testing only overlapping pairs.
/// Returns the crossing with the smallest (i, j), or empty. Requires samples >= 512.
[[nodiscard]] std::optional<CurveCrossing> curve_self_intersection(const HarmonicMap& f, double r,
                                                                   std::size_t samples);

/// Same sweep on an explicit closed polyline.
[[nodiscard]] std::optional<CurveCrossing> polyline_self_intersection(const std::vector<Complex>& points);

}  // namespace harmomap
