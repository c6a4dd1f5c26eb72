#include "harmomap/families.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "harmomap/error.hpp"
#include "harmomap/special.hpp"

namespace harmomap {

MocanuExample mocanu_example(int n, double a) {
  if (n < 2) throw DomainError(fmt::format("Mocanu example requires n >= 2 (got {})", n));
  const double dn = n;
  if (!(a > 0.0) || a * dn > 1.0 + 1e-14) {
    throw DomainError(fmt::format("Mocanu example requires 0 < a <= 1/n (got a = {}, n = {})", a, n));
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<Complex> h(un + 1), g(un + 2);
  h[1] = 1.0;
  h[un] = -a;
  g[2] = 0.5;
  g[un + 1] = -dn / (dn + 1.0) * a;
  const double class_m_limit = 3.0 / (dn * (1.0 + 2.0 * dn));
  return {HarmonicMap(AnalyticSeries(std::move(h)), AnalyticSeries(std::move(g))), n, a,
          a <= class_m_limit * (1.0 + 1e-15)};
}

HarmonicMap conjectured_starlike(int n) {
  const double dn = n;
  return mocanu_example(n, 3.0 / (dn * (2.0 * dn + 1.0))).map;
}

HarmonicMap figure_two_map() {
  return HarmonicMap(AnalyticSeries({0.0, 1.0, -0.5}), AnalyticSeries({0.0, 0.0, 0.5, -1.0 / 3.0}));
}

HarmonicMap harmonic_koebe(std::size_t order) {
  // (1 - z)^-3 = sum (k+1)(k+2)/2 z^k
  const auto inv_cube = [](std::size_t k) {
    const auto dk = static_cast<double>(k);
    return (dk + 1.0) * (dk + 2.0) / 2.0;
  };
  const auto times_inv_cube = [&](const std::vector<double>& numerator) {
    std::vector<Complex> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
      double acc = 0.0;
      for (std::size_t j = 0; j < numerator.size() && j <= n; ++j) acc += numerator[j] * inv_cube(n - j);
      c[n] = acc;
    }
    return AnalyticSeries(std::move(c));
  };
  return HarmonicMap(times_inv_cube({0.0, 1.0, -0.5, 1.0 / 6.0}), times_inv_cube({0.0, 0.0, 0.5, 1.0 / 6.0}));
}

PolynomialSpec::PolynomialSpec(std::vector<Complex> coeffs, std::size_t hat_degree)
    : poly_(std::move(coeffs)), hat_degree_(hat_degree) {
  if (poly_.degree() > hat_degree_) {
    throw DomainError(fmt::format("polynomial degree {} exceeds hat degree {}", poly_.degree(), hat_degree_));
  }
}

PolynomialSpec qhat(const PolynomialSpec& q) {
  const std::size_t n = q.hat_degree();
  std::vector<Complex> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = std::conj(q.poly()[n - k]);
  return PolynomialSpec(std::move(c), n);
}

int winding_number(const AnalyticSeries& poly, double radius, std::size_t samples) {
  double total = 0.0;
  Complex previous = poly(Complex(radius, 0.0));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  for (std::size_t k = 1; k <= samples; ++k) {
    const Complex current = poly(std::polar(radius, step * static_cast<double>(k)));
    total += std::arg(current / previous);
    previous = current;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

SuffridgeMap suffridge_family(const PolynomialSpec& q, const SuffridgeParams& params) {
  const std::size_t n = params.target_degree;
  if (n < 2) throw HypothesisError(fmt::format("Suffridge construction requires degree n >= 2 (got {})", n));
  if (std::abs(q(0.0) - 1.0) > 1e-12) throw HypothesisError("Suffridge construction requires Q(0) = 1");
  if (q.poly().degree() > n - 2) {
    throw HypothesisError(
        fmt::format("Suffridge construction requires deg Q <= n - 2 (got deg Q = {}, n = {})", q.poly().degree(), n));
  }
  if (!(params.t >= 0.0 && params.t <= 1.0)) {
    throw HypothesisError(fmt::format("Suffridge construction requires 0 <= t <= 1 (got {})", params.t));
  }
  const int zeros = winding_number(q.poly(), 1.0 - kBoundaryMargin);
  if (zeros != 0) {
    throw HypothesisError(fmt::format("Q has {} zero(s) in the disk (winding count on |z| = {})", zeros,
                                      1.0 - kBoundaryMargin));
  }

  const std::size_t hat_degree = n - 2;
  const auto hat = qhat(PolynomialSpec(std::vector<Complex>(q.poly().coeffs().begin(), q.poly().coeffs().end()),
                                       hat_degree));
  const auto z_hat = hat.poly().truncated(hat_degree).shifted(1);
  const auto h_prime = q.poly().truncated(n - 1) + z_hat.scaled(std::polar(1.0 - params.t, params.phi));
  const auto g_prime = z_hat.scaled(std::polar(params.t, params.beta));
  return {HarmonicMap(h_prime.antiderivative(), g_prime.antiderivative()), hat_degree, zeros};
}

GridReport suffridge_ch1_margin(const PolynomialSpec& q, const ScanGrid& grid) {
  const auto hat = qhat(q);
  return scan_functional("suffridge: Re Q - |z Q^|", grid, [&](Complex z) {
    const Complex value = q(z);
    return ScanSample{value.real() - std::abs(z * hat(z)), value};
  });
}

HarmonicMap limit_mapping(const std::array<double, 3>& psi, double theta, std::size_t order) {
  std::vector<Complex> d(order + 1);
  d[0] = 1.0;
  for (double angle : psi) {
    // Multiply in place by 1 / (1 - z e^{i angle}).
    const Complex w = std::polar(1.0, angle);
    for (std::size_t k = 1; k <= order; ++k) d[k] += w * d[k - 1];
  }
  const AnalyticSeries h_prime(std::move(d));
  const auto g_prime = h_prime.truncated(order - 1).shifted(1).scaled(std::polar(1.0, theta));
  return HarmonicMap(h_prime.antiderivative(), g_prime.antiderivative());
}

HarmonicMap hypergeometric_family(const FamilySpec& spec, std::size_t order) {
  check_convergence(spec);
  std::size_t last = order;
  if (const auto degree = spec.params.polynomial_degree()) {
    const std::size_t first = family_first_index(spec.family);
    const std::size_t shift = family_shift(spec.family);
    last = std::max(*degree + shift, first);
  }
  std::vector<Complex> g(last + 1);
  for (std::size_t n = 1; n <= last; ++n) g[n] = family_coefficient(spec, n);
  return HarmonicMap(AnalyticSeries({0.0, 1.0}), AnalyticSeries(std::move(g)));
}

AnalyticSeries binomial_polynomial(int m, double c) {
  if (m < 1) throw DomainError(fmt::format("binomial form requires m >= 1 (got {})", m));
  const auto um = static_cast<std::size_t>(m);
  std::vector<Complex> coeffs(um + 1);
  double binom = 1.0;
  for (std::size_t n = 0; n <= um; ++n) {
    if (n > 0) binom = binom * static_cast<double>(um - n + 1) / static_cast<double>(n);
    coeffs[n] = binom * pochhammer(static_cast<double>(um - n + 1), n) / pochhammer(c, n);
  }
  return AnalyticSeries(std::move(coeffs));
}

ProblemFixture problem_fixture(double alpha, int n) {
  if (!(alpha > 2.0 / 3.0 && alpha <= 1.0)) {
    throw DomainError(fmt::format("problem fixture requires 2/3 < alpha <= 1 (got {})", alpha));
  }
  if (n < 2) throw DomainError(fmt::format("problem fixture requires n >= 2 (got {})", n));
  const double dn = n;
  const double a = (3.0 * alpha - 2.0) / (dn * (2.0 * dn - 3.0 * alpha));
  return {n, a, mocanu_example(n, a).map};
}

}  // namespace harmomap
