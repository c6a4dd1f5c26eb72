#include <cmath>
#include <random>
#include <string>
#include <string_view>

#include "doctest.h"
#include "harmomap/criteria.hpp"
#include "harmomap/error.hpp"
#include "harmomap/families.hpp"
#include "reference/values.hpp"
#include "support.hpp"

using namespace harmomap;

namespace {

FamilySpec spec_from(const reference::KCase& ref) {
  const auto family = parse_hyper_family(ref.family);
  switch (ref.mode) {
    case reference::Mode::kReal:
      return {family, HypergeometricParams::real_pair(ref.a_re, ref.b, ref.c), ref.alpha};
    case reference::Mode::kConj:
      return {family, HypergeometricParams::conjugate_pair({ref.a_re, ref.a_im}, ref.c), ref.alpha};
    case reference::Mode::kNegint:
      return {family, HypergeometricParams::negative_integer(static_cast<int>(ref.a_re), ref.c), ref.alpha};
  }
  return {family, HypergeometricParams::real_pair(1.0, 1.0, 4.0), ref.alpha};
}

// T44b's closed form divides by (a-1)(b-1); the reference matrix keeps those
// rows for the other families.
bool closed_form_defined(const reference::KCase& ref) {
  return !(ref.family == std::string_view("T44b") && ref.mode == reference::Mode::kReal &&
           (ref.a_re == 1.0 || ref.b == 1.0));
}

// Direct evaluation of the parent inequality in c: the oracle for the thresholds.
double parent_sum(ThresholdFamily family, double b, double alpha, double c) {
  return family_k_closed(threshold_parent(family, b, alpha, c)).sum_value;
}

}  // namespace

TEST_SUITE("criteria") {
  TEST_CASE("coefficient margin examples") {
    const auto id = coefficient_margin(HarmonicMap::identity(), CoefficientRoute::kFullyStarlike);
    CHECK(id.sum_value == 0.0);
    CHECK(id.certified());

    const HarmonicMap half(AnalyticSeries({0.0, 1.0}), AnalyticSeries({0.0, 0.0, 0.5}));
    const auto boundary = coefficient_margin(half, CoefficientRoute::kFullyStarlike);
    CHECK(boundary.sum_value == doctest::Approx(1.0));
    CHECK(boundary.certified());

    const auto f0 = coefficient_margin(mocanu_example(2, 0.3).map, CoefficientRoute::kFullyStarlike);
    CHECK(f0.sum_value == doctest::Approx(2.2).epsilon(1e-15));
    CHECK_FALSE(f0.certified());
    CHECK(f0.margin == doctest::Approx(-1.2).epsilon(1e-15));
  }

  TEST_CASE("coefficient margin checks b1 against the route") {
    const HarmonicMap with_b1(AnalyticSeries({0.0, 1.0}), AnalyticSeries({0.0, 0.3}));
    CHECK_THROWS_AS((void)coefficient_margin(with_b1, CoefficientRoute::kFullyStarlike), HypothesisError);
    const auto cert = coefficient_margin(with_b1, CoefficientRoute::kCloseToConvex);
    CHECK(cert.sum_value == doctest::Approx(0.3));
    CHECK(cert.certified());
    CHECK(cert.conclusion.find("starlike") == std::string::npos);
    const HarmonicMap big_b1(AnalyticSeries({0.0, 1.0}), AnalyticSeries({0.0, 1.0}));
    CHECK_THROWS_AS((void)coefficient_margin(big_b1, CoefficientRoute::kCloseToConvex), HypothesisError);
  }

  TEST_CASE("boundary tolerance and tail folding") {
    const auto within = make_certificate("x", "y", 1.0 + 5e-10, 1.0, CertificateMethod::kClosedForm);
    CHECK(within.certified());
    CHECK(within.boundary);
    const auto beyond = make_certificate("x", "y", 1.0 + 5e-9, 1.0, CertificateMethod::kClosedForm);
    CHECK_FALSE(beyond.certified());
    const auto tail = make_certificate("x", "y", 0.99, 1.0, CertificateMethod::kSeriesWithTail, 100, 0.02);
    CHECK_FALSE(tail.certified());
    CHECK(tail.margin == doctest::Approx(0.01));
  }

  TEST_CASE("closed forms: worked examples") {
    const FamilySpec t41a{HyperFamily::kT41a, HypergeometricParams::real_pair(1.0, 1.0, 4.0), 0.2};
    const auto cert = family_k_closed(t41a);
    CHECK(cert.sum_value == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(cert.certified());

    const FamilySpec t44a{HyperFamily::kT44a, HypergeometricParams::real_pair(1.0, 1.0, 3.0), std::polar(0.4, 1.0)};
    CHECK(family_k_closed(t44a).sum_value == doctest::Approx(0.8).epsilon(1e-14));

    const FamilySpec poly{HyperFamily::kT41a, HypergeometricParams::negative_integer(2, 3.0), 0.1};
    const auto exact = family_k_series(poly, 100);
    CHECK(exact.tail_bound == std::optional<double>(0.0));
    CHECK(std::abs(exact.value - family_k_closed(poly).sum_value) <= 1e-12);

    // Terminating T44b stays valid for 0 < c <= 1.
    for (double c : {0.4, 0.92, 1.0, 1.7}) {
      const FamilySpec low{HyperFamily::kT44b, HypergeometricParams::negative_integer(2, c), 0.1};
      CHECK(std::abs(family_k_series(low, 10).value - family_k_closed(low).sum_value) <= 1e-13);
    }

    for (auto family : all_hyper_families()) {
      const FamilySpec zero{family, HypergeometricParams::real_pair(0.5, 1.5, 5.0), 0.0};
      CHECK(family_k_series(zero, 1000).value == 0.0);
    }
  }

  TEST_CASE("closed forms against arbitrary-precision reference") {
    for (const auto& ref : reference::kWeightedSums) {
      if (!closed_form_defined(ref)) continue;
      const auto spec = spec_from(ref);
      CAPTURE(ref.family);
      CAPTURE(ref.a_re);
      CAPTURE(ref.c);
      CHECK(std::abs(family_k_closed(spec).sum_value - ref.k) <= 1e-11 * std::max(1.0, ref.k));
    }
  }

  TEST_CASE("series with tail bound brackets the reference") {
    for (const auto& ref : reference::kWeightedSums) {
      if (!closed_form_defined(ref)) continue;
      const auto spec = spec_from(ref);
      const auto series = family_k_series(spec, 20000);
      CAPTURE(ref.family);
      CAPTURE(ref.a_re);
      CAPTURE(ref.c);
      REQUIRE(series.tail_bound.has_value());
      CHECK(series.value <= ref.k + 1e-10);
      CHECK(ref.k <= series.value + *series.tail_bound + 1e-10);
    }
  }

  TEST_CASE("hypothesis gates name the violated condition") {
    const FamilySpec low_c{HyperFamily::kT41a, HypergeometricParams::real_pair(1.0, 1.0, 2.5), 0.2};
    CHECK_THROWS_WITH_AS((void)family_k_closed(low_c), doctest::Contains("requires c > a+b+1"), HypothesisError);
    const FamilySpec big_alpha{HyperFamily::kT41a, HypergeometricParams::real_pair(1.0, 1.0, 4.0), 0.5};
    CHECK_THROWS_AS((void)family_k_closed(big_alpha), HypothesisError);
    const FamilySpec side{HyperFamily::kT41b, HypergeometricParams::real_pair(2.0, 2.0, 6.0), 0.9};
    CHECK_THROWS_WITH_AS((void)family_k_closed(side), doctest::Contains("2|alpha|ab <= c"), HypothesisError);
    const FamilySpec conj_t41b{HyperFamily::kT41b, HypergeometricParams::conjugate_pair({1.0, 1.0}, 5.0), 0.2};
    const auto cert = family_k_closed(conj_t41b);
    CHECK(cert.notes.back().find("|a|^2") != std::string::npos);
    const FamilySpec t44b{HyperFamily::kT44b, HypergeometricParams::real_pair(1.0, 0.5, 4.0), 0.2};
    CHECK_THROWS_AS((void)family_k_closed(t44b), HypothesisError);
    CHECK_THROWS_AS((void)parse_hyper_family("T99"), HypothesisError);
  }

  TEST_CASE("closed form decreases in c") {
    for (auto family : all_hyper_families()) {
      CAPTURE(to_string(family));
      const double alpha = 0.3;
      double previous = INFINITY;
      for (double c = 3.1; c < 12.0; c += 0.1) {
        const FamilySpec spec{family, HypergeometricParams::real_pair(0.5, 1.5, c), alpha};
        const double k = family_k_closed(spec).sum_value;
        CHECK(k < previous);
        previous = k;
      }
    }
  }

  TEST_CASE("threshold examples") {
    CHECK(threshold_c(ThresholdFamily::kC42b, 1.0, 0.0).root_plus == doctest::Approx(3.0).epsilon(1e-15));
    const auto beta = threshold_c(ThresholdFamily::kC42a, 1.0, 0.25);
    CHECK(beta.root_plus == doctest::Approx(4.2807764064).epsilon(1e-10));
    CHECK(std::abs(parent_sum(ThresholdFamily::kC42a, 1.0, 0.25, beta.root_plus) - 1.0) <= 1e-9);
    try {
      (void)threshold_c(ThresholdFamily::kC42a, 1.0, 0.5);
      FAIL("expected a degenerate quadratic");
    } catch (const DegenerateQuadraticError& e) {
      // 0 c^2 + (b(x-2) - 3 + 6x) c + ... at x = 1/2: linear root.
      CHECK(std::isfinite(e.single_root()));
    }
    CHECK_THROWS_AS((void)threshold_c(ThresholdFamily::kC47, 1.0, 1.0), DegenerateQuadraticError);
    const auto r1 = threshold_c(ThresholdFamily::kC47, 1.0, 0.5);
    CHECK(std::abs(parent_sum(ThresholdFamily::kC47, 1.0, 0.5, r1.root_plus) - 1.0) <= 1e-9);
  }

  TEST_CASE("closed-form radical for the second threshold") {
    // The displayed r+ = (3 + 2b(1+x) + sqrt(b^2(4x^2+4x) + 1)) / 2.
    for (double b : {0.5, 1.0, 2.5}) {
      for (double x : {0.0, 0.1, 0.4}) {
        const double displayed = (3.0 + 2.0 * b * (1.0 + x) + std::sqrt(b * b * (4.0 * x * x + 4.0 * x) + 1.0)) / 2.0;
        CHECK(threshold_c(ThresholdFamily::kC42b, b, x).root_plus == doctest::Approx(displayed).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("thresholds are equalities of the parent sum (property)") {
    auto gen = testing::rng(41);
    std::uniform_real_distribution<double> bdist(0.2, 3.0);
    std::uniform_real_distribution<double> xdist(0.01, 0.45);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    for (int trial = 0; trial < 20; ++trial) {
      const double b = bdist(gen);
      const Complex alpha = std::polar(xdist(gen), phase(gen));
      for (auto family : {ThresholdFamily::kC42a, ThresholdFamily::kC42b, ThresholdFamily::kC47}) {
        CAPTURE(to_string(family));
        CAPTURE(b);
        CAPTURE(alpha);
        const double c = threshold_c(family, b, alpha).root_plus;
        CHECK(std::abs(parent_sum(family, b, std::abs(alpha), c) - 1.0) <= 1e-9);
        try {
          CHECK(parent_sum(family, b, std::abs(alpha), c - 0.01) > 1.0);
        } catch (const HypothesisError&) {
          // c - 0.01 left the convergence region; the certificate fails there too.
        }
      }
    }
  }
}
