#include "harmomap/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "harmomap/error.hpp"

namespace harmomap {

namespace {

constexpr double kNormalizationTolerance = 1e-12;

void require_in_disk(Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("point " + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") +
                      std::to_string(z.imag()) + "i is not in the open unit disk");
  }
}

}  // namespace

DiskPoint::DiskPoint(Complex z) : z_(z) { require_in_disk(z); }

AnalyticSeries::AnalyticSeries() : coeffs_(1, Complex{}) {}

AnalyticSeries::AnalyticSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back();
}

AnalyticSeries AnalyticSeries::zero(std::size_t order) {
  return AnalyticSeries(std::vector<Complex>(order + 1));
}

AnalyticSeries AnalyticSeries::monomial(std::size_t power, Complex coefficient, std::size_t order) {
  std::vector<Complex> c(std::max(order, power) + 1);
  c[power] = coefficient;
  return AnalyticSeries(std::move(c));
}

std::size_t AnalyticSeries::degree() const noexcept {
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    if (coeffs_[n] != Complex{}) return n;
  }
  return 0;
}

Complex AnalyticSeries::operator()(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

SeriesJet AnalyticSeries::jet(Complex z) const noexcept {
  // Horner for p, p', p''/2 simultaneously.
  Complex p{}, d1{}, d2{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    d2 = d2 * z + d1;
    d1 = d1 * z + p;
    p = p * z + *it;
  }
  return {p, d1, 2.0 * d2};
}

AnalyticSeries AnalyticSeries::derivative() const {
  if (coeffs_.size() == 1) return AnalyticSeries();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = static_cast<double>(n) * coeffs_[n];
  return AnalyticSeries(std::move(d));
}

AnalyticSeries AnalyticSeries::antiderivative() const {
  std::vector<Complex> a(coeffs_.size() + 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) a[n + 1] = coeffs_[n] / static_cast<double>(n + 1);
  return AnalyticSeries(std::move(a));
}

AnalyticSeries AnalyticSeries::shifted(std::size_t k) const {
  std::vector<Complex> s(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), s.begin() + static_cast<std::ptrdiff_t>(k));
  return AnalyticSeries(std::move(s));
}

AnalyticSeries AnalyticSeries::scaled(Complex factor) const {
  std::vector<Complex> s(coeffs_);
  for (auto& c : s) c *= factor;
  return AnalyticSeries(std::move(s));
}

AnalyticSeries AnalyticSeries::truncated(std::size_t order) const {
  std::vector<Complex> t(order + 1);
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), t.size()), t.begin());
  return AnalyticSeries(std::move(t));
}

AnalyticSeries operator+(const AnalyticSeries& p, const AnalyticSeries& q) {
  std::vector<Complex> s(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t n = 0; n < s.size(); ++n) s[n] = p[n] + q[n];
  return AnalyticSeries(std::move(s));
}

AnalyticSeries operator-(const AnalyticSeries& p, const AnalyticSeries& q) {
  std::vector<Complex> s(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t n = 0; n < s.size(); ++n) s[n] = p[n] - q[n];
  return AnalyticSeries(std::move(s));
}

HarmonicMap::HarmonicMap(AnalyticSeries h, AnalyticSeries g) : h_(std::move(h)), g_(std::move(g)) {
  if (std::abs(h_[0]) > kNormalizationTolerance || std::abs(h_[1] - 1.0) > kNormalizationTolerance) {
    throw HypothesisError("harmonic map must satisfy h(0) = 0 and h'(0) = 1");
  }
  if (std::abs(g_[0]) > kNormalizationTolerance) {
    throw HypothesisError("harmonic map must satisfy g(0) = 0");
  }
}

HarmonicMap::HarmonicMap(AnalyticSeries h, AnalyticSeries g, Unchecked)
    : h_(std::move(h)), g_(std::move(g)) {}

HarmonicMap HarmonicMap::relaxed(AnalyticSeries h, AnalyticSeries g) {
  return HarmonicMap(std::move(h), std::move(g), Unchecked{});
}

HarmonicMap HarmonicMap::identity() {
  return HarmonicMap(AnalyticSeries({0.0, 1.0}), AnalyticSeries());
}

std::size_t HarmonicMap::truncation() const noexcept { return std::max(h_.order(), g_.order()); }

bool HarmonicMap::is_normalized() const noexcept {
  return std::abs(h_[0]) <= kNormalizationTolerance &&
         std::abs(h_[1] - 1.0) <= kNormalizationTolerance &&
         std::abs(g_[0]) <= kNormalizationTolerance;
}

Complex eval(const HarmonicMap& f, DiskPoint z) {
  return f.h()(z.value()) + std::conj(f.g()(z.value()));
}

Partials partials(const HarmonicMap& f, DiskPoint z) {
  return {f.h().jet(z.value()).d1, std::conj(f.g().jet(z.value()).d1)};
}

double jacobian(const HarmonicMap& f, DiskPoint z) {
  const auto [fz, fzbar] = partials(f, z);
  return std::norm(fz) - std::norm(fzbar);
}

Complex d_operator(const HarmonicMap& f, DiskPoint z) {
  const auto [fz, fzbar] = partials(f, z);
  const Complex w = z.value();
  return w * fz - std::conj(w) * fzbar;
}

AnalyticSeries hadamard(const AnalyticSeries& p, const AnalyticSeries& q) {
  std::vector<Complex> r(std::max(p.order(), q.order()) + 1);
  for (std::size_t n = 0; n < r.size(); ++n) r[n] = p[n] * q[n];
  return AnalyticSeries(std::move(r));
}

AnalyticSeries weighted_antiderivative(const AnalyticSeries& h) {
  if (h[0] != Complex{}) {
    throw HypothesisError("weighted antiderivative requires h(0) = 0");
  }
  std::vector<Complex> w(h.order() + 2);
  for (std::size_t n = 1; n <= h.order(); ++n) {
    const auto dn = static_cast<double>(n);
    w[n + 1] = dn * h[n] / (dn + 1.0);
  }
  return AnalyticSeries(std::move(w));
}

AnalyticSeries geometric_kernel(std::size_t order) {
  std::vector<Complex> k(order + 1, Complex{1.0});
  k[0] = 0.0;
  return AnalyticSeries(std::move(k));
}

AnalyticSeries koebe_kernel(std::size_t order) {
  std::vector<Complex> k(order + 1);
  for (std::size_t n = 1; n <= order; ++n) k[n] = static_cast<double>(n);
  return AnalyticSeries(std::move(k));
}

AnalyticSeries log_kernel(std::size_t order) {
  std::vector<Complex> k(order + 1);
  for (std::size_t n = 1; n <= order; ++n) k[n] = -1.0 / static_cast<double>(n);
  return AnalyticSeries(std::move(k));
}

}  // namespace harmomap
