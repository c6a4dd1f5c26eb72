#include "harmomap/render.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "harmomap/error.hpp"
#include "harmomap/families.hpp"

namespace harmomap {

namespace {

std::string num9(double v) {
  // Avoid "-0" so that mirrored inputs do not change bytes.
  if (v == 0.0) v = 0.0;
  return fmt::format("{:.9g}", v);
}

std::string num17(double v) { return fmt::format("{:.17g}", v); }

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

}  // namespace

void validate(const RenderSpec& spec, bool svg) {
  if (spec.radii.empty()) throw DomainError("render: at least one radius is required");
  for (double r : spec.radii) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError(fmt::format("render: radius {} is outside (0, 1)", r));
  }
  if (svg && spec.samples_per_circle < 256) {
    throw DomainError(fmt::format("render: SVG output needs at least 256 samples per circle (got {})",
                                  spec.samples_per_circle));
  }
  if (spec.samples_per_circle < 3) throw DomainError("render: at least 3 samples per circle are required");
  if (!(spec.width > 0.0 && spec.height > 0.0)) throw DomainError("render: canvas size must be positive");
}

std::vector<ImageCurve> sample_image_curves(const HarmonicMap& f, const RenderSpec& spec) {
  validate(spec, false);
  const std::size_t m = spec.samples_per_circle;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  std::vector<ImageCurve> curves;
  curves.reserve(spec.radii.size());
  for (double r : spec.radii) {
    ImageCurve curve{r, {}, {}};
    curve.theta.reserve(m);
    curve.points.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
      const double theta = step * static_cast<double>(k);
      curve.theta.push_back(theta);
      curve.points.push_back(eval(f, DiskPoint(std::polar(r, theta))));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::string render_svg(const std::vector<ImageCurve>& curves, const RenderSpec& spec,
                       const std::optional<CurveCrossing>& crossing) {
  validate(spec, true);
  Box box;
  for (const auto& curve : curves) {
    for (const Complex p : curve.points) box.add(p.real(), -p.imag());
  }
  if (crossing) box.add(crossing->point.real(), -crossing->point.imag());
  if (!(box.x1 >= box.x0)) box = Box{-1.0, -1.0, 1.0, 1.0};
  const double side = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-12});
  const double margin = 0.05 * side;
  const double vx = box.x0 - margin;
  const double vy = box.y0 - margin;
  const double vw = box.x1 - box.x0 + 2.0 * margin;
  const double vh = box.y1 - box.y0 + 2.0 * margin;
  const double stroke = spec.stroke * std::max(vw, vh);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
      num9(spec.width), num9(spec.height), num9(vx), num9(vy), num9(vw), num9(vh));
  for (const auto& curve : curves) {
    out += fmt::format("<polyline data-r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\" points=\"",
                       num9(curve.r), num9(stroke));
    // Close the curve by repeating the first point.
    for (std::size_t k = 0; k <= curve.points.size(); ++k) {
      const Complex p = curve.points[k % curve.points.size()];
      if (k > 0) out += ' ';
      out += num9(p.real());
      out += ',';
      out += num9(-p.imag());
    }
    out += "\"/>\n";
  }
  if (crossing) {
    const double x = crossing->point.real();
    const double y = -crossing->point.imag();
    const double d = 0.02 * std::max(vw, vh);
    const auto arm = [&](double sx, double sy) {
      return fmt::format("<polyline class=\"crossing\" fill=\"none\" stroke=\"red\" stroke-width=\"{}\" points=\"{},{} {},{}\"/>\n",
                         num9(2.0 * stroke), num9(x - sx * d), num9(y - sy * d), num9(x + sx * d), num9(y + sy * d));
    };
    out += arm(1.0, 1.0);
    out += arm(1.0, -1.0);
  }
  out += "</svg>\n";
  return out;
}

std::string render_csv(const std::vector<ImageCurve>& curves) {
  std::string out = "r,theta,re,im\n";
  for (const auto& curve : curves) {
    for (std::size_t k = 0; k < curve.points.size(); ++k) {
      out += fmt::format("{},{},{},{}\n", num17(curve.r), num17(curve.theta[k]), num17(curve.points[k].real()),
                         num17(curve.points[k].imag()));
    }
  }
  return out;
}

RenderPreset render_preset(std::string_view name) {
  if (name == "fig1") {
    return {"fig1", "z - (3/10) z^2 + conj(z^2/2 - (1/5) z^3)", mocanu_example(2, 0.3).map,
            RenderSpec{{0.2, 0.4, 0.6, 0.8, 0.9, 0.95, 0.99}, 1024}, std::nullopt};
  }
  if (name == "fig2") {
    return {"fig2", "z - (1/2) z^2 + conj(z^2/2 - (1/3) z^3)", figure_two_map(),
            RenderSpec{{0.2, 0.4, 0.6, 0.8, 0.9, 0.95, 0.995}, 4096}, 0.995};
  }
  if (name == "identity") {
    return {"identity", "z", HarmonicMap::identity(), RenderSpec{{0.2, 0.4, 0.6, 0.8, 0.99}, 256}, std::nullopt};
  }
  throw DomainError(fmt::format("unknown render preset '{}' (expected fig1, fig2 or identity)", name));
}

}  // namespace harmomap
