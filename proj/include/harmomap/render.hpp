#pragma once

// Image curves f(r e^{i theta}) as deterministic SVG (polylines only) and CSV.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harmomap/geometry.hpp"
#include "harmomap/series.hpp"

namespace harmomap {

struct RenderSpec {
  std::vector<double> radii;
  std::size_t samples_per_circle = 1024;
  double width = 800.0;
  double height = 800.0;
  /// Stroke width as a fraction of the larger viewBox side.
  double stroke = 0.002;
};

/// Throws DomainError unless radii lie in (0, 1) and, for SVG, samples >= 256.
void validate(const RenderSpec& spec, bool svg);

struct ImageCurve {
  double r;
  std::vector<double> theta;
  std::vector<Complex> points;
};

[[nodiscard]] std::vector<ImageCurve> sample_image_curves(const HarmonicMap& f, const RenderSpec& spec);

/// Byte-stable SVG: coordinates at 9 significant digits, y axis flipped,
/// viewBox fitted to the curves with a 5% margin. The optional crossing is
/// drawn as a small red cross.
[[nodiscard]] std::string render_svg(const std::vector<ImageCurve>& curves, const RenderSpec& spec,
                                     const std::optional<CurveCrossing>& crossing = std::nullopt);

/// Header r,theta,re,im; 17 significant digits.
[[nodiscard]] std::string render_csv(const std::vector<ImageCurve>& curves);

/// A named figure: the map, its curves and whether to mark a crossing.
struct RenderPreset {
  std::string name;
  std::string caption;
  HarmonicMap map;
  RenderSpec spec;
  /// Radius at which curve_self_intersection is run for the marker.
  std::optional<double> crossing_radius;
};

/// "fig1" (the non-C1_H example), "fig2" (the non-univalent example) or "identity".
/// Throws DomainError for other names.
[[nodiscard]] RenderPreset render_preset(std::string_view name);

}  // namespace harmomap
