#include "harmomap/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "harmomap/error.hpp"

namespace harmomap {

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Above this modulus the Gauss ratio goes through log-gamma to avoid overflow.
constexpr double kDirectGammaLimit = 60.0;

bool is_pole(Complex z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

Complex lanczos_sum(Complex x) noexcept {
  Complex s = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) s += kLanczos[k] / (x + static_cast<double>(k));
  return s;
}

// log Gamma(z) for Re z >= 1/2.
Complex log_gamma_right(Complex z) noexcept {
  const Complex x = z - 1.0;
  const Complex t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(x));
}

Complex gamma_right(Complex z) noexcept {
  const Complex x = z - 1.0;
  const Complex t = x + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::exp((x + 0.5) * std::log(t) - t) * lanczos_sum(x);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return fmt::format("{:.17g}", z.real());
  return fmt::format("{:.17g}{:+.17g}i", z.real(), z.imag());
}

}  // namespace

std::string_view to_string(ParamMode mode) noexcept {
  switch (mode) {
    case ParamMode::kRealPositiveProduct: return "real-positive-product";
    case ParamMode::kConjugatePair: return "conjugate-pair";
    case ParamMode::kNegativeInteger: return "negative-integer";
  }
  return "unknown";
}

std::string_view to_string(SumMethod method) noexcept {
  return method == SumMethod::kClosedForm ? "closed-form" : "series";
}

HypergeometricParams::HypergeometricParams(Complex a, Complex b, double c, ParamMode mode)
    : a_(a), b_(b), c_(c), mode_(mode) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw HypothesisError(fmt::format("hypergeometric parameter c must be a positive real (got {})", c));
  }
}

HypergeometricParams HypergeometricParams::real_pair(double a, double b, double c) {
  if (!(a > -1.0) || !(b > -1.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw HypothesisError(fmt::format("real mode requires a, b in (-1, inf) (got a = {}, b = {})", a, b));
  }
  if (!(a * b > 0.0)) {
    throw HypothesisError(fmt::format("real mode requires ab > 0 (got ab = {})", a * b));
  }
  return {a, b, c, ParamMode::kRealPositiveProduct};
}

HypergeometricParams HypergeometricParams::conjugate_pair(Complex a, double c) {
  if (a == Complex{}) throw HypothesisError("conjugate-pair mode requires a != 0");
  return {a, std::conj(a), c, ParamMode::kConjugatePair};
}

HypergeometricParams HypergeometricParams::negative_integer(int m, double c) {
  if (m < 1) throw HypothesisError(fmt::format("negative-integer mode requires m >= 1 (got {})", m));
  return {-static_cast<double>(m), -static_cast<double>(m), c, ParamMode::kNegativeInteger};
}

std::optional<std::size_t> HypergeometricParams::polynomial_degree() const noexcept {
  if (mode_ != ParamMode::kNegativeInteger) return std::nullopt;
  return static_cast<std::size_t>(-a_.real());
}

HypergeometricParams HypergeometricParams::with_c(double c) const { return {a_, b_, c, mode_}; }

Complex pochhammer(Complex a, std::size_t n) noexcept {
  Complex p = 1.0;
  for (std::size_t k = 0; k < n; ++k) p *= a + static_cast<double>(k);
  return p;
}

Complex gamma(Complex z) {
  if (is_pole(z)) throw PoleError("Gamma has a pole at " + format_complex(z));
  if (z.real() < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma_right(1.0 - z));
  }
  return gamma_right(z);
}

Complex log_gamma(Complex z) {
  if (is_pole(z)) throw PoleError("Gamma has a pole at " + format_complex(z));
  if (z.real() < 0.5) {
    return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) - log_gamma_right(1.0 - z);
  }
  return log_gamma_right(z);
}

Complex reciprocal_gamma(Complex z) {
  if (is_pole(z)) return 0.0;
  return 1.0 / gamma(z);
}

Complex gauss_coeff(Complex a, Complex b, Complex c, std::size_t n) noexcept {
  Complex coeff = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto dk = static_cast<double>(k);
    coeff *= (a + dk) * (b + dk) / ((c + dk) * (1.0 + dk));
  }
  return coeff;
}

Complex gauss_coeff(const HypergeometricParams& p, std::size_t n) noexcept {
  return gauss_coeff(p.a(), p.b(), p.c(), n);
}

std::vector<Complex> gauss_coeffs(Complex a, Complex b, Complex c, std::size_t order) {
  std::vector<Complex> coeffs(order + 1);
  coeffs[0] = 1.0;
  for (std::size_t k = 0; k < order; ++k) {
    const auto dk = static_cast<double>(k);
    coeffs[k + 1] = coeffs[k] * (a + dk) * (b + dk) / ((c + dk) * (1.0 + dk));
  }
  return coeffs;
}

std::vector<Complex> gauss_coeffs(const HypergeometricParams& p, std::size_t order) {
  return gauss_coeffs(p.a(), p.b(), p.c(), order);
}

AnalyticSeries hypergeometric_series(Complex a, Complex b, Complex c, std::size_t order) {
  return AnalyticSeries(gauss_coeffs(a, b, c, order));
}

Complex gauss_ratio(Complex a, Complex b, Complex c) {
  if (!(c.real() > (a + b).real())) {
    throw ConvergenceError(fmt::format("Gauss formula requires Re c > Re(a+b) (got Re c = {}, Re(a+b) = {})",
                                       c.real(), (a + b).real()));
  }
  const Complex ca = c - a;
  const Complex cb = c - b;
  const Complex cab = c - a - b;
  if (is_pole(ca) || is_pole(cb)) return 0.0;
  const double largest = std::max({std::abs(c), std::abs(ca), std::abs(cb), std::abs(cab)});
  if (largest <= kDirectGammaLimit) {
    return gamma(c) * gamma(cab) / (gamma(ca) * gamma(cb));
  }
  return std::exp(log_gamma(c) + log_gamma(cab) - log_gamma(ca) - log_gamma(cb));
}

double gauss_sum(const HypergeometricParams& p) {
  const Complex value = gauss_ratio(p.a(), p.b(), p.c());
  if (std::abs(value.imag()) > 1e-10 * std::max(1.0, std::abs(value.real()))) {
    throw ConvergenceError(fmt::format("Gauss sum expected real for {} parameters, imaginary part {}",
                                       to_string(p.mode()), value.imag()));
  }
  return value.real();
}

double derivative_identity_check(const HypergeometricParams& p, DiskPoint z) {
  if (z.modulus() > 0.9) throw DomainError("derivative identity check requires |z| <= 0.9");
  // 0.9^2000 is far below double precision for polynomially growing A_n.
  constexpr std::size_t kOrder = 2000;
  const Complex a = p.a();
  const Complex b = p.b();
  const double c = p.c();
  const auto shifted = hypergeometric_series(a + 1.0, b + 1.0, c + 1.0, kOrder);
  const auto base = hypergeometric_series(a, b, c, kOrder + 1);
  const Complex lhs = a * b * shifted(z.value());
  const Complex rhs = c * base.derivative()(z.value());
  return std::abs(lhs - rhs);
}

}  // namespace harmomap
