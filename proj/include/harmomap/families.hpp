#pragma once

// Constructors for the explicit harmonic maps: the Mocanu examples, Suffridge
// polynomials built from Q and its hat transform, the limit mapping, and the
// hypergeometric families (exact polynomials when a = b = -m).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "harmomap/criteria.hpp"
#include "harmomap/geometry.hpp"
#include "harmomap/series.hpp"

namespace harmomap {

struct MocanuExample {
  HarmonicMap map;
  int n;
  double a;
  /// a <= 3 / (n (1 + 2n)): Re(1 + z h''/h') > -1/2 on the disk.
  bool in_class_m;
};

/// h = z - a z^n, g = z^2/2 - (n/(n+1)) a z^(n+1), so g' = z h'.
/// Requires n >= 2 and 0 < a <= 1/n.
[[nodiscard]] MocanuExample mocanu_example(int n, double a);

/// The Mocanu example at a = 3 / (n (2n + 1)), the class-M boundary.
[[nodiscard]] HarmonicMap conjectured_starlike(int n);

/// z - z^2/2 + conj(z^2/2 - z^3/3): satisfies Re(1 + z h''/h') < 3/2 but is not univalent.
[[nodiscard]] HarmonicMap figure_two_map();

/// Harmonic Koebe function H + conj(G) with dilatation z, truncated.
[[nodiscard]] HarmonicMap harmonic_koebe(std::size_t order = 8192);

/// Polynomial Q together with the degree used by its hat transform.
class PolynomialSpec {
 public:
  /// Throws DomainError if deg(Q) > hat_degree.
  PolynomialSpec(std::vector<Complex> coeffs, std::size_t hat_degree);

  [[nodiscard]] const AnalyticSeries& poly() const noexcept { return poly_; }
  [[nodiscard]] std::size_t hat_degree() const noexcept { return hat_degree_; }
  [[nodiscard]] Complex operator()(Complex z) const noexcept { return poly_(z); }

 private:
  AnalyticSeries poly_;
  std::size_t hat_degree_;
};

/// Q^(z) = z^n conj(Q(1/conj(z))): coefficient k is conj(c_{n-k}).
[[nodiscard]] PolynomialSpec qhat(const PolynomialSpec& q);

/// Winding number of Q around 0 along |z| = radius, from `samples` points.
/// Equals the number of zeros inside when none lie on the circle.
[[nodiscard]] int winding_number(const AnalyticSeries& poly, double radius, std::size_t samples = 4096);

struct SuffridgeParams {
  double phi = 0.0;
  double beta = 0.0;
  double t = 0.0;
  std::size_t target_degree = 2;
};

struct SuffridgeMap {
  HarmonicMap map;
  /// The hat transform is taken with degree target_degree - 2.
  std::size_t hat_degree;
  /// Zeros of Q counted inside |z| = 1 - 1e-3 (always 0 on success).
  int interior_zeros;
};

/// h' = Q + e^{i phi}(1-t) z Q^, g' = e^{i beta} t z Q^, with h(0) = g(0) = 0.
/// Requires Q(0) = 1, deg Q <= n - 2, 0 <= t <= 1; throws HypothesisError if
/// the winding check finds a zero of Q in the disk.
[[nodiscard]] SuffridgeMap suffridge_family(const PolynomialSpec& q, const SuffridgeParams& params);

/// Re Q(z) - |z Q^(z)| over the grid, with Q^ at Q's own hat degree.
[[nodiscard]] GridReport suffridge_ch1_margin(const PolynomialSpec& q, const ScanGrid& grid);

/// h' = 1 / prod_j (1 - z e^{i psi_j}), g' = e^{i theta} z h', truncated at `order`.
[[nodiscard]] HarmonicMap limit_mapping(const std::array<double, 3>& psi, double theta,
                                        std::size_t order = kDefaultHypergeometricOrder);

/// z + conj(g) with g from the family's coefficient rule. Polynomial
/// parameters (a = b = -m) give the exact polynomial regardless of `order`.
[[nodiscard]] HarmonicMap hypergeometric_family(const FamilySpec& spec,
                                                std::size_t order = kDefaultHypergeometricOrder);

/// sum_{n=0}^m C(m, n) (m-n+1, n) / (c, n) z^n, the binomial form of F(-m, -m; c; z).
[[nodiscard]] AnalyticSeries binomial_polynomial(int m, double c);

/// One extremal member of P(alpha): h = z - a z^n with sup Re(1 + z h''/h') = 3 alpha / 2.
struct ProblemFixture {
  int n;
  double a;
  HarmonicMap map;
};

/// a = (3 alpha - 2) / (n (2n - 3 alpha)); requires 2/3 < alpha <= 1 and n >= 2.
[[nodiscard]] ProblemFixture problem_fixture(double alpha, int n);

}  // namespace harmomap
