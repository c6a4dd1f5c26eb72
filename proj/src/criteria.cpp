#include "harmomap/criteria.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include <fmt/format.h>

#include "harmomap/error.hpp"

namespace harmomap {

namespace {

constexpr std::string_view kStarlikeConclusion = "C1_H and S*0_H (fully starlike)";
constexpr std::string_view kCloseToConvexConclusion = "C1_H (close-to-convex, univalent)";

struct FamilyLayout {
  std::size_t shift;        // b_n uses A_{n - shift}
  std::size_t first_index;  // first n with b_n present
};

FamilyLayout layout(HyperFamily family) noexcept {
  switch (family) {
    case HyperFamily::kT41a: return {2, 2};
    case HyperFamily::kT41b: return {1, 2};
    case HyperFamily::kT41c: return {1, 1};
    case HyperFamily::kT44a: return {1, 1};
    case HyperFamily::kT44b: return {2, 2};
    case HyperFamily::kC46a: return {0, 1};
    case HyperFamily::kC46b: return {1, 2};
  }
  return {0, 1};
}

// Factor multiplying alpha * A_{n - shift} in b_n.
double family_weight(const FamilySpec& spec, std::size_t n) noexcept {
  const auto dn = static_cast<double>(n);
  switch (spec.family) {
    case HyperFamily::kT44a: return 1.0 / dn;
    case HyperFamily::kT44b: return 1.0 / (dn - 1.0);
    case HyperFamily::kC46a:
    case HyperFamily::kC46b: return spec.params.c() / spec.params.product_ab();
    default: return 1.0;
  }
}

// t_{n+1} / t_n for t_n = n |b_n|, valid while A_{n - shift} != 0.
double term_ratio(const FamilySpec& spec, double n) noexcept {
  const auto [shift, first] = layout(spec.family);
  const double j = n - static_cast<double>(shift);
  const auto& p = spec.params;
  double weight_ratio = 1.0;
  if (spec.family == HyperFamily::kT44a) weight_ratio = n / (n + 1.0);
  if (spec.family == HyperFamily::kT44b) weight_ratio = (n - 1.0) / n;
  const double coeff_ratio = std::abs((p.a() + j) * (p.b() + j)) / ((p.c() + j) * (j + 1.0));
  return (n + 1.0) / n * weight_ratio * coeff_ratio;
}

std::string alpha_text(Complex alpha) {
  return fmt::format("{:.6g}", std::abs(alpha));
}

double conclusion_bound_alpha(HyperFamily family) noexcept {
  switch (family) {
    case HyperFamily::kT41a:
    case HyperFamily::kT44b:
    case HyperFamily::kC46b: return 0.5;
    case HyperFamily::kT41c:
    case HyperFamily::kT44a:
    case HyperFamily::kC46a: return 1.0;
    case HyperFamily::kT41b: return 0.0;  // governed by 2|alpha| ab <= c instead
  }
  return 1.0;
}

std::string_view family_conclusion(HyperFamily family) noexcept {
  switch (family) {
    case HyperFamily::kT41a:
    case HyperFamily::kT41b:
    case HyperFamily::kT44b:
    case HyperFamily::kC46b: return kStarlikeConclusion;
    default: return kCloseToConvexConclusion;
  }
}

}  // namespace

std::string_view to_string(Verdict verdict) noexcept {
  return verdict == Verdict::kCertified ? "certified" : "not-certified";
}

std::string_view to_string(CertificateMethod method) noexcept {
  return method == CertificateMethod::kClosedForm ? "closed-form" : "series+tail";
}

Certificate make_certificate(std::string criterion, std::string conclusion, double sum_value, double bound,
                             CertificateMethod method, std::optional<std::size_t> truncation,
                             std::optional<double> tail_bound) {
  Certificate cert;
  cert.criterion = std::move(criterion);
  cert.conclusion = std::move(conclusion);
  cert.sum_value = sum_value;
  cert.bound = bound;
  cert.margin = bound - sum_value;
  cert.method = method;
  cert.truncation = truncation;
  cert.tail_bound = tail_bound;
  const double effective = sum_value + tail_bound.value_or(0.0);
  if (effective <= bound) {
    cert.verdict = Verdict::kCertified;
    cert.boundary = bound - effective <= kBoundaryTolerance;
  } else if (effective - bound <= kBoundaryTolerance) {
    cert.verdict = Verdict::kCertified;
    cert.boundary = true;
  } else {
    cert.verdict = Verdict::kNotCertified;
  }
  return cert;
}

Certificate coefficient_margin(const HarmonicMap& f, CoefficientRoute route, std::optional<double> tail_bound) {
  const Complex b1 = f.b1();
  if (route == CoefficientRoute::kFullyStarlike && b1 != Complex{}) {
    throw HypothesisError(fmt::format("starlike coefficient route requires b1 = g'(0) = 0 (got |b1| = {})",
                                      std::abs(b1)));
  }
  if (route == CoefficientRoute::kCloseToConvex && !(std::abs(b1) < 1.0)) {
    throw HypothesisError(fmt::format("close-to-convex coefficient route requires |b1| < 1 (got |b1| = {})",
                                      std::abs(b1)));
  }
  double sum = 0.0;
  for (std::size_t n = 2; n <= f.h().order(); ++n) sum += static_cast<double>(n) * std::abs(f.h()[n]);
  for (std::size_t n = 1; n <= f.g().order(); ++n) sum += static_cast<double>(n) * std::abs(f.g()[n]);

  const bool starlike = route == CoefficientRoute::kFullyStarlike;
  return make_certificate(starlike ? "coefficient-sum (b1 = 0)" : "coefficient-sum (|b1| < 1)",
                          std::string(starlike ? kStarlikeConclusion : kCloseToConvexConclusion), sum, 1.0,
                          tail_bound ? CertificateMethod::kSeriesWithTail : CertificateMethod::kClosedForm,
                          f.truncation(), tail_bound);
}

std::string_view to_string(HyperFamily family) noexcept {
  switch (family) {
    case HyperFamily::kT41a: return "T41a";
    case HyperFamily::kT41b: return "T41b";
    case HyperFamily::kT41c: return "T41c";
    case HyperFamily::kT44a: return "T44a";
    case HyperFamily::kT44b: return "T44b";
    case HyperFamily::kC46a: return "C46a";
    case HyperFamily::kC46b: return "C46b";
  }
  return "unknown";
}

const std::vector<HyperFamily>& all_hyper_families() {
  static const std::vector<HyperFamily> families = {HyperFamily::kT41a, HyperFamily::kT41b, HyperFamily::kT41c,
                                                    HyperFamily::kT44a, HyperFamily::kT44b, HyperFamily::kC46a,
                                                    HyperFamily::kC46b};
  return families;
}

HyperFamily parse_hyper_family(std::string_view name) {
  for (auto family : all_hyper_families()) {
    if (to_string(family) == name) return family;
  }
  throw HypothesisError(fmt::format("unknown hypergeometric family '{}'", name));
}

std::size_t family_first_index(HyperFamily family) noexcept { return layout(family).first_index; }

std::size_t family_shift(HyperFamily family) noexcept { return layout(family).shift; }

Complex family_coefficient(const FamilySpec& spec, std::size_t n) {
  const auto [shift, first] = layout(spec.family);
  if (n < first) return 0.0;
  return spec.alpha * family_weight(spec, n) * gauss_coeff(spec.params, n - shift);
}

void check_convergence(const FamilySpec& spec) {
  const auto& p = spec.params;
  const auto name = to_string(spec.family);
  const double sum_ab = p.sum_ab();
  const double c = p.c();
  const bool conj = p.mode() == ParamMode::kConjugatePair;
  const std::string_view ab_text = conj ? "Re(a+b)" : "a+b";

  switch (spec.family) {
    case HyperFamily::kT41a:
    case HyperFamily::kT41b:
    case HyperFamily::kT41c:
    case HyperFamily::kC46a:
      if (!(c > sum_ab + 1.0)) {
        throw HypothesisError(
            fmt::format("{} requires c > {}+1 (got c = {}, {}+1 = {})", name, ab_text, c, ab_text, sum_ab + 1.0));
      }
      break;
    case HyperFamily::kT44a:
      if (!(c > sum_ab)) {
        throw HypothesisError(fmt::format("{} requires c > {} (got c = {}, {} = {})", name, ab_text, c, ab_text, sum_ab));
      }
      break;
    case HyperFamily::kT44b: {
      // Terminating series only need c > 0, as in the polynomial corollary.
      const bool terminating = p.mode() == ParamMode::kNegativeInteger;
      const double floor = terminating ? 0.0 : std::max(1.0, sum_ab);
      if (!(c > floor)) {
        throw HypothesisError(fmt::format("{} requires c > max{{1, {}}} (got c = {}, max = {})", name, ab_text, c, floor));
      }
      if (conj && p.a() == Complex{1.0}) {
        throw HypothesisError(fmt::format("{} requires a not in {{0, 1}} for conjugate pairs", name));
      }
      // The closed form divides by (a-1)(b-1).
      const double shifted = ((p.a() - 1.0) * (p.b() - 1.0)).real();
      if (std::abs(shifted) < 1e-14) {
        throw HypothesisError(fmt::format("{} requires a, b != 1 (got (a-1)(b-1) = {})", name, shifted));
      }
      break;
    }
    case HyperFamily::kC46b: {
      const double floor = std::max(1.0, sum_ab + 1.0);
      if (!(c > floor)) {
        throw HypothesisError(
            fmt::format("{} requires c > max{{1, {}+1}} (got c = {}, max = {})", name, ab_text, c, floor));
      }
      if (conj && p.a() == Complex{1.0}) {
        throw HypothesisError(fmt::format("{} requires a not in {{0, 1}} for conjugate pairs", name));
      }
      break;
    }
  }
}

void check_hypotheses(const FamilySpec& spec) {
  check_convergence(spec);
  const auto name = to_string(spec.family);
  const double abs_alpha = std::abs(spec.alpha);
  if (spec.family == HyperFamily::kT41b) {
    const double ab = spec.params.product_ab();
    if (!(2.0 * abs_alpha * ab <= spec.params.c())) {
      throw HypothesisError(fmt::format("{} requires 2|alpha|ab <= c (got 2|alpha|ab = {}, c = {})", name,
                                        2.0 * abs_alpha * ab, spec.params.c()));
    }
    return;
  }
  const double upper = conclusion_bound_alpha(spec.family);
  if (!(abs_alpha > 0.0 && abs_alpha < upper)) {
    throw HypothesisError(
        fmt::format("{} requires 0 < |alpha| < {} (got |alpha| = {})", name, upper, alpha_text(spec.alpha)));
  }
}

Certificate family_k_closed(const FamilySpec& spec) {
  check_hypotheses(spec);
  const auto& p = spec.params;
  const double abs_alpha = std::abs(spec.alpha);
  const double c = p.c();
  const double ab = p.product_ab();
  const double excess = p.excess();  // c - a - b
  // G = F(a,b;c;1); G1 = Gamma(c)Gamma(c-a-b-1)/(Gamma(c-a)Gamma(c-b)) = G/(c-a-b-1).
  const auto gauss = [&] { return gauss_sum(p); };
  const auto gauss_shifted = [&] { return gauss_sum(p) / (excess - 1.0); };

  double k = 0.0;
  switch (spec.family) {
    case HyperFamily::kT41a: k = abs_alpha * gauss_shifted() * (ab + 2.0 * (excess - 1.0)); break;
    case HyperFamily::kT41b: k = abs_alpha * (gauss_shifted() * (ab + excess - 1.0) - 1.0); break;
    case HyperFamily::kT41c: k = abs_alpha * gauss_shifted() * (ab + excess - 1.0); break;
    case HyperFamily::kT44a: k = abs_alpha * gauss(); break;
    case HyperFamily::kT44b: {
      const double shifted = ((p.a() - 1.0) * (p.b() - 1.0)).real();
      k = abs_alpha * (gauss() * (1.0 + excess / shifted) - (c - 1.0) / shifted);
      break;
    }
    case HyperFamily::kC46a: k = abs_alpha * c * gauss_shifted(); break;
    case HyperFamily::kC46b: k = abs_alpha * (c * gauss_shifted() + c * (gauss() - 1.0) / ab); break;
  }

  auto cert = make_certificate(fmt::format("{} closed form", to_string(spec.family)),
                               std::string(family_conclusion(spec.family)), k, 1.0, CertificateMethod::kClosedForm);
  cert.notes.push_back(fmt::format("parameters: {} mode, a = {:.17g}{:+.17g}i, c = {:.17g}, |alpha| = {:.17g}",
                                   to_string(p.mode()), p.a().real(), p.a().imag(), c, abs_alpha));
  if (spec.family == HyperFamily::kT41b && p.mode() == ParamMode::kConjugatePair) {
    cert.notes.emplace_back("side condition 2|alpha|ab <= c read with ab = |a|^2 (conjugate pair)");
  }
  return cert;
}

CoeffSumResult family_k_series(const FamilySpec& spec, std::size_t truncation) {
  check_convergence(spec);
  const auto [shift, first] = layout(spec.family);
  CoeffSumResult result;
  result.method = SumMethod::kSeries;
  result.truncation = truncation;
  if (spec.alpha == Complex{}) {
    result.value = 0.0;
    result.tail_bound = 0.0;
    return result;
  }

  const auto term = [&](std::size_t n, Complex a_coeff) {
    return static_cast<double>(n) * std::abs(spec.alpha * family_weight(spec, n) * a_coeff);
  };

  if (const auto degree = spec.params.polynomial_degree()) {
    // b_n vanishes beyond n = degree + shift: the sum is finite.
    const std::size_t last = *degree + shift;
    const auto coeffs = gauss_coeffs(spec.params, *degree);
    double head = 0.0;
    double rest = 0.0;
    for (std::size_t n = first; n <= last; ++n) {
      (n <= truncation ? head : rest) += term(n, coeffs[n - shift]);
    }
    result.value = head;
    result.tail_bound = rest;
    return result;
  }

  if (truncation < first + 1) {
    throw ConvergenceError(fmt::format("truncation {} is below the first coefficient of {}", truncation,
                                       to_string(spec.family)));
  }
  const auto coeffs = gauss_coeffs(spec.params, truncation - shift);
  double sum = 0.0;
  for (std::size_t n = first; n <= truncation; ++n) sum += term(n, coeffs[n - shift]);
  const double last_term = term(truncation, coeffs[truncation - shift]);

  // Raabe exponent s_n = (n+1)(1 - t_{n+1}/t_n), sampled from N outward.
  constexpr double kLargestSample = 1e9;
  double exponent = std::numeric_limits<double>::infinity();
  for (double n = static_cast<double>(truncation); n <= kLargestSample; n *= 2.0) {
    exponent = std::min(exponent, (n + 1.0) * (1.0 - term_ratio(spec, n)));
  }
  if (!(exponent > 1.0)) {
    throw ConvergenceError(fmt::format("{}: tail ratio exponent {} never exceeds 1 beyond N = {}; cannot bound the tail",
                                       to_string(spec.family), exponent, truncation));
  }
  result.value = sum;
  result.tail_bound = last_term * static_cast<double>(truncation) / (exponent - 1.0);
  return result;
}

std::string_view to_string(ThresholdFamily family) noexcept {
  switch (family) {
    case ThresholdFamily::kC42a: return "C42a";
    case ThresholdFamily::kC42b: return "C42b";
    case ThresholdFamily::kC47: return "C47";
  }
  return "unknown";
}

ThresholdFamily parse_threshold_family(std::string_view name) {
  for (auto family : {ThresholdFamily::kC42a, ThresholdFamily::kC42b, ThresholdFamily::kC47}) {
    if (to_string(family) == name) return family;
  }
  throw HypothesisError(fmt::format("unknown threshold family '{}' (expected C42a, C42b or C47)", name));
}

Quadratic threshold_quadratic(ThresholdFamily family, double b, Complex alpha) {
  // Each parent inequality at a = 1 is cleared of (c-b-1)(c-b-2) > 0.
  const double x = std::abs(alpha);
  switch (family) {
    case ThresholdFamily::kC42a:
      // |x|(c-1)(2c-b-4) <= (c-b-1)(c-b-2)
      return {1.0 - 2.0 * x, b * (x - 2.0) - 3.0 + 6.0 * x, b * b + (3.0 - x) * b + 2.0 - 4.0 * x};
    case ThresholdFamily::kC42b:
      // x((c-1)(c-2) - (c-b-1)(c-b-2)) <= (c-b-1)(c-b-2)
      return {1.0, -(2.0 * b * (1.0 + x) + 3.0), (b * b + 3.0 * b) * (1.0 + x) + 2.0};
    case ThresholdFamily::kC47:
      // x c (c-1) <= (c-b-1)(c-b-2)
      return {1.0 - x, x - (2.0 * b + 3.0), (b + 1.0) * (b + 2.0)};
  }
  return {1.0, 0.0, 0.0};
}

ThresholdRoots threshold_c(ThresholdFamily family, double b, Complex alpha) {
  const auto name = to_string(family);
  if (!(b > 0.0)) throw HypothesisError(fmt::format("{} requires b > 0 (got {})", name, b));
  const auto q = threshold_quadratic(family, b, alpha);
  if (std::abs(q.a2) < 1e-15) {
    throw DegenerateQuadraticError(
        fmt::format("{}: leading coefficient vanishes at |alpha| = {}; the threshold is linear with root {:.12g}",
                    name, std::abs(alpha), -q.a0 / q.a1),
        -q.a0 / q.a1);
  }
  const double x = std::abs(alpha);
  if (family == ThresholdFamily::kC42a && !(x > 0.0 && x < 0.5)) {
    throw HypothesisError(fmt::format("{} requires 0 < |alpha| < 1/2 (got {})", name, x));
  }
  if (family == ThresholdFamily::kC47 && !(x > 0.0 && x < 1.0)) {
    throw HypothesisError(fmt::format("{} requires 0 < |alpha| < 1 (got {})", name, x));
  }
  const double disc = q.a1 * q.a1 - 4.0 * q.a2 * q.a0;
  if (disc < 0.0) {
    throw HypothesisError(fmt::format("{}: threshold quadratic has no real roots (discriminant {})", name, disc));
  }
  // Cancellation-free pair of roots.
  const double root_disc = std::sqrt(disc);
  const double half = -0.5 * (q.a1 + std::copysign(root_disc, q.a1));
  double r1 = half / q.a2;
  double r2 = half != 0.0 ? q.a0 / half : r1;
  if (r1 < r2) std::swap(r1, r2);
  return {r1, r2, q};
}

FamilySpec threshold_parent(ThresholdFamily family, double b, Complex alpha, double c) {
  const auto params = HypergeometricParams::real_pair(1.0, b, c);
  switch (family) {
    case ThresholdFamily::kC42a: return {HyperFamily::kT41a, params, alpha};
    case ThresholdFamily::kC42b: return {HyperFamily::kT41b, params, alpha};
    case ThresholdFamily::kC47: return {HyperFamily::kC46a, params, alpha};
  }
  return {HyperFamily::kT41a, params, alpha};
}

}  // namespace harmomap
