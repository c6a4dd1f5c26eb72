#include "harmomap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>
#include <tuple>

#include <fmt/format.h>

#include "harmomap/error.hpp"

namespace harmomap {

namespace {

constexpr double kZeroTolerance = 1e-12;
constexpr double kTouchTolerance = 1e-9;

struct Best {
  double value = std::numeric_limits<double>::infinity();
  PolarPoint at{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  std::size_t degenerate = 0;
  std::optional<PolarPoint> first_degenerate;
};

bool lex_less(const PolarPoint& p, const PolarPoint& q) noexcept {
  return std::tie(p.r, p.theta) < std::tie(q.r, q.theta);
}

bool better(double value, const PolarPoint& at, const Best& best) noexcept {
  if (value != best.value) return value < best.value;
  return lex_less(at, best.at);
}

void merge(Best& into, const Best& from) {
  if (better(from.value, from.at, into)) {
    into.value = from.value;
    into.at = from.at;
  }
  into.degenerate += from.degenerate;
  if (from.first_degenerate && (!into.first_degenerate || lex_less(*from.first_degenerate, *into.first_degenerate))) {
    into.first_degenerate = from.first_degenerate;
  }
}

double cross(Complex u, Complex v) noexcept { return u.real() * v.imag() - u.imag() * v.real(); }

}  // namespace

ScanGrid::ScanGrid(std::vector<double> radii, std::size_t angles) : radii_(std::move(radii)), angles_(angles) {
  if (radii_.empty()) throw DomainError("scan grid needs at least one radius");
  if (angles_ < 64) throw DomainError(fmt::format("scan grid needs at least 64 angles (got {})", angles_));
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!(radii_[i] > 0.0)) throw DomainError(fmt::format("scan radius must be positive (got {})", radii_[i]));
    if (i > 0 && !(radii_[i] > radii_[i - 1])) throw DomainError("scan radii must be strictly increasing");
  }
  if (radii_.back() > 1.0 - kBoundaryMargin + 1e-15) {
    throw DomainError(fmt::format("scan radius {} exceeds 1 - {}", radii_.back(), kBoundaryMargin));
  }
}

ScanGrid ScanGrid::defaults() {
  return ScanGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99}, 1024);
}

ScanGrid ScanGrid::boundary_refined(std::size_t angles) {
  return ScanGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.995, 0.999}, angles);
}

double ScanGrid::angle(std::size_t k) const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angles_);
}

std::string_view to_string(ScanVerdict verdict) noexcept {
  return verdict == ScanVerdict::kPassed ? "passed" : "violated";
}

std::size_t scan_thread_count() {
  std::size_t count = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("HARMOMAP_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(cap, &end, 10);
    if (end != cap && value > 0) count = std::min(count, static_cast<std::size_t>(value));
  }
  return count;
}

bool truncation_suspect(const AnalyticSeries& s, double r) {
  const std::size_t order = s.order();
  if (order < kDefaultPolynomialOrder) return false;
  const std::size_t from = order > 8 ? order - 8 : 0;
  for (std::size_t n = std::max<std::size_t>(from, 1); n <= order; ++n) {
    const auto dn = static_cast<double>(n);
    if (std::abs(s[n]) * dn * dn * std::pow(r, dn) > 1e-10) return true;
  }
  return false;
}

GridReport scan_functional(std::string name, const ScanGrid& grid,
                           const std::function<ScanSample(Complex)>& functional, ScanOptions options) {
  const std::size_t total = grid.sample_count();
  const std::size_t workers = std::min(options.workers > 0 ? options.workers : scan_thread_count(), total);
  std::vector<Best> partial(workers);
  std::vector<ScanTraceRow> trace(options.keep_trace ? total : 0);

  const auto run = [&](std::size_t worker) {
    Best& best = partial[worker];
    const std::size_t begin = total * worker / workers;
    const std::size_t end = total * (worker + 1) / workers;
    for (std::size_t idx = begin; idx < end; ++idx) {
      const PolarPoint at{grid.radii()[idx / grid.angles()], grid.angle(idx % grid.angles())};
      ScanSample sample = functional(at.z());
      if (sample.degenerate || !std::isfinite(sample.value)) {
        sample.value = 0.0;
        ++best.degenerate;
        if (!best.first_degenerate || lex_less(at, *best.first_degenerate)) best.first_degenerate = at;
      }
      if (options.keep_trace) trace[idx] = {at, sample.image, sample.value};
      if (better(sample.value, at, best)) {
        best.value = sample.value;
        best.at = at;
      }
    }
  };

  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  Best best;
  for (const auto& p : partial) merge(best, p);

  GridReport report;
  report.functional = std::move(name);
  report.min_value = best.value;
  report.argmin = best.at;
  report.samples = total;
  report.verdict = best.value <= 0.0 ? ScanVerdict::kViolated : ScanVerdict::kPassed;
  report.disclaimer = std::string(report.passed() ? kPassedDisclaimer : kViolatedDisclaimer);
  report.degenerate_count = best.degenerate;
  report.degenerate_witness = best.first_degenerate;
  report.trace = std::move(trace);
  return report;
}

GridReport scan_ch1(const HarmonicMap& f, const ScanGrid& grid, ScanOptions options) {
  const auto& h = f.h();
  const auto& g = f.g();
  auto report = scan_functional("ch1: Re f_z - |f_zbar|", grid, [&](Complex z) {
    const auto hj = h.jet(z);
    const auto gj = g.jet(z);
    return ScanSample{hj.d1.real() - std::abs(gj.d1), hj.value + std::conj(gj.value)};
  }, options);
  report.truncation_warning = truncation_suspect(h, grid.r_max()) || truncation_suspect(g, grid.r_max());
  return report;
}

GridReport scan_jacobian(const HarmonicMap& f, const ScanGrid& grid, ScanOptions options) {
  const auto& h = f.h();
  const auto& g = f.g();
  auto report = scan_functional("jacobian: |h'|^2 - |g'|^2", grid, [&](Complex z) {
    const auto hj = h.jet(z);
    const auto gj = g.jet(z);
    return ScanSample{std::norm(hj.d1) - std::norm(gj.d1), hj.value + std::conj(gj.value)};
  }, options);
  report.truncation_warning = truncation_suspect(h, grid.r_max()) || truncation_suspect(g, grid.r_max());
  return report;
}

GridReport scan_fully_starlike(const HarmonicMap& f, const ScanGrid& grid, ScanOptions options) {
  if (f.b1() != Complex{}) {
    throw HypothesisError("fully starlike scan requires b1 = g'(0) = 0 so that Df/f -> 1 at the origin");
  }
  const auto& h = f.h();
  const auto& g = f.g();
  auto report = scan_functional("starlike: Re(Df/f)", grid, [&](Complex z) {
    const auto hj = h.jet(z);
    const auto gj = g.jet(z);
    const Complex value = hj.value + std::conj(gj.value);
    if (std::abs(value) < kZeroTolerance) return ScanSample{0.0, value, true};
    const Complex df = z * hj.d1 - std::conj(z * gj.d1);
    return ScanSample{(df / value).real(), value};
  }, options);
  report.truncation_warning = truncation_suspect(h, grid.r_max()) || truncation_suspect(g, grid.r_max());
  return report;
}

namespace {

GridReport convexity_scan(std::string name, const AnalyticSeries& h, const ScanGrid& grid, double shift,
                          double sign, ScanOptions options) {
  auto report = scan_functional(std::move(name), grid, [&](Complex z) {
    const auto hj = h.jet(z);
    if (std::abs(hj.d1) < kZeroTolerance) return ScanSample{0.0, hj.value, true};
    const double re = (1.0 + z * hj.d2 / hj.d1).real();
    return ScanSample{sign * (re - shift), hj.value};
  }, options);
  report.truncation_warning = truncation_suspect(h, grid.r_max());
  return report;
}

}  // namespace

GridReport scan_convexity_functional(const AnalyticSeries& h, const ScanGrid& grid, double lower,
                                     ScanOptions options) {
  return convexity_scan(fmt::format("convexity: Re(1 + z h''/h') - ({})", lower), h, grid, lower, 1.0, options);
}

GridReport scan_convexity_upper(const AnalyticSeries& h, const ScanGrid& grid, double upper, ScanOptions options) {
  return convexity_scan(fmt::format("convexity-upper: {} - Re(1 + z h''/h')", upper), h, grid, upper, -1.0,
                        options);
}

GridReport starlike_disk_bound_check(const AnalyticSeries& h, const ScanGrid& grid, ScanOptions options) {
  auto report = scan_functional("disk-bound: 2/3 - |z h'/h - 2/3|", grid, [&](Complex z) {
    const auto hj = h.jet(z);
    if (std::abs(hj.value) < kZeroTolerance) return ScanSample{0.0, hj.value, true};
    return ScanSample{2.0 / 3.0 - std::abs(z * hj.d1 / hj.value - 2.0 / 3.0), hj.value};
  }, options);
  report.truncation_warning = truncation_suspect(h, grid.r_max());
  return report;
}

double MoebiusImage::min_real() const noexcept {
  if (half_plane) return -std::numeric_limits<double>::infinity();
  return center - radius;
}

MoebiusImage moebius_disk_image(int n, double a) {
  if (n < 2) throw DomainError(fmt::format("Moebius image requires n >= 2 (got {})", n));
  const double dn = n;
  if (!(a > 0.0) || a * dn > 1.0 + 1e-14) {
    throw DomainError(fmt::format("Moebius image requires 0 < a <= 1/n (got a = {}, n = {})", a, n));
  }
  MoebiusImage image;
  if (std::abs(a * dn - 1.0) <= 1e-14) {
    image.half_plane = true;
    image.boundary = (dn + 1.0) / 2.0;
    return image;
  }
  const double denom = 1.0 - dn * dn * a * a;
  image.center = (1.0 - dn * dn * dn * a * a) / denom;
  image.radius = a * dn * (dn - 1.0) / denom;
  return image;
}

std::optional<CurveCrossing> polyline_self_intersection(const std::vector<Complex>& points) {
  const std::size_t m = points.size();
  if (m < 4) return std::nullopt;

  struct Segment {
    double x_lo;
    double x_hi;
    std::size_t index;
  };
  std::vector<Segment> segments(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Complex p = points[i];
    const Complex q = points[(i + 1) % m];
    segments[i] = {std::min(p.real(), q.real()), std::max(p.real(), q.real()), i};
  }
  std::sort(segments.begin(), segments.end(), [](const Segment& s, const Segment& t) {
    return std::tie(s.x_lo, s.index) < std::tie(t.x_lo, t.index);
  });

  const auto adjacent = [m](std::size_t i, std::size_t j) {
    const std::size_t d = i > j ? i - j : j - i;
    return d <= 1 || d == m - 1;
  };

  std::optional<CurveCrossing> best;
  const auto consider = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (adjacent(i, j)) return;
    if (best && std::tie(best->segment_i, best->segment_j) <= std::tie(i, j)) return;
    const Complex p1 = points[i], p2 = points[(i + 1) % m];
    const Complex q1 = points[j], q2 = points[(j + 1) % m];
    for (Complex u : {p1, p2}) {
      for (Complex v : {q1, q2}) {
        if (std::abs(u - v) < kTouchTolerance) return;
      }
    }
    const Complex dp = p2 - p1;
    const Complex dq = q2 - q1;
    const double o1 = cross(dp, q1 - p1);
    const double o2 = cross(dp, q2 - p1);
    const double o3 = cross(dq, p1 - q1);
    const double o4 = cross(dq, p2 - q1);
    if (!((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0))) return;
    if (!((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0))) return;
    const double t = cross(q1 - p1, dq) / cross(dp, dq);
    const double u = cross(q1 - p1, dp) / cross(dp, dq);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    best = CurveCrossing{i, j, (static_cast<double>(i) + t) * step, (static_cast<double>(j) + u) * step,
                         p1 + t * dp};
  };

  // Active set: segments whose x-extent may still overlap the sweep position.
  std::vector<const Segment*> active;
  for (const auto& seg : segments) {
    std::erase_if(active, [&](const Segment* s) { return s->x_hi < seg.x_lo; });
    for (const Segment* other : active) {
      const Complex a1 = points[seg.index], a2 = points[(seg.index + 1) % m];
      const Complex b1 = points[other->index], b2 = points[(other->index + 1) % m];
      const double ay_lo = std::min(a1.imag(), a2.imag()), ay_hi = std::max(a1.imag(), a2.imag());
      const double by_lo = std::min(b1.imag(), b2.imag()), by_hi = std::max(b1.imag(), b2.imag());
      if (ay_hi < by_lo || by_hi < ay_lo) continue;
      consider(seg.index, other->index);
    }
    active.push_back(&seg);
  }
  return best;
}

std::optional<CurveCrossing> curve_self_intersection(const HarmonicMap& f, double r, std::size_t samples) {
  if (samples < 512) throw DomainError(fmt::format("self-intersection probe needs >= 512 samples (got {})", samples));
  if (!(r > 0.0 && r < 1.0)) throw DomainError(fmt::format("self-intersection radius must lie in (0, 1) (got {})", r));
  std::vector<Complex> points(samples);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    points[k] = eval(f, DiskPoint(std::polar(r, step * static_cast<double>(k))));
  }
  return polyline_self_intersection(points);
}

}  // namespace harmomap
