#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "harmomap/error.hpp"
#include "harmomap/families.hpp"
#include "harmomap/series.hpp"
#include "support.hpp"

using namespace harmomap;
using testing::close;

namespace {

HarmonicMap half_square() { return HarmonicMap(AnalyticSeries({0.0, 1.0}), AnalyticSeries({0.0, 0.0, 0.5})); }

// Integral of t h'(t) along the segment [0, z] by adaptive Gauss-Kronrod.
Complex radial_quadrature(const AnalyticSeries& h, Complex z) {
  const auto dh = h.derivative();
  const auto integrand = [&](double s, bool imag) {
    const Complex t = s * z;
    const Complex v = t * dh(t) * z;
    return imag ? v.imag() : v.real();
  };
  using boost::math::quadrature::gauss_kronrod;
  const double re = gauss_kronrod<double, 31>::integrate([&](double s) { return integrand(s, false); }, 0.0, 1.0, 15, 1e-14);
  const double im = gauss_kronrod<double, 31>::integrate([&](double s) { return integrand(s, true); }, 0.0, 1.0, 15, 1e-14);
  return {re, im};
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("eval on the worked examples") {
    CHECK(close(eval(HarmonicMap::identity(), DiskPoint({0.3, 0.4})), {0.3, 0.4}, 1e-15));
    CHECK(eval(mocanu_example(2, 0.3).map, DiskPoint(0.0)) == Complex{});
    CHECK(close(eval(half_square(), DiskPoint(0.5)), 0.625, 1e-15));
  }

  TEST_CASE("disk points must lie inside the unit disk") {
    CHECK_THROWS_AS(DiskPoint(1.0), DomainError);
    CHECK_THROWS_AS(DiskPoint({0.6, 0.8}), DomainError);
    CHECK_NOTHROW(DiskPoint(0.999999));
  }

  TEST_CASE("partials and jacobian") {
    const auto id = partials(HarmonicMap::identity(), DiskPoint({0.2, -0.7}));
    CHECK(id.f_z == Complex(1.0));
    CHECK(id.f_zbar == Complex{});
    const auto p = partials(half_square(), DiskPoint(0.5));
    CHECK(close(p.f_z, 1.0, 1e-15));
    CHECK(close(p.f_zbar, 0.5, 1e-15));
    const auto f0 = partials(mocanu_example(2, 0.3).map, DiskPoint(0.0));
    CHECK(f0.f_z == Complex(1.0));
    CHECK(f0.f_zbar == Complex{});

    CHECK(jacobian(HarmonicMap::identity(), DiskPoint({0.1, 0.5})) == doctest::Approx(1.0));
    CHECK(jacobian(half_square(), DiskPoint(0.5)) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(jacobian(half_square(), DiskPoint(0.99)) == doctest::Approx(0.0199).epsilon(1e-12));
  }

  TEST_CASE("D operator") {
    CHECK(close(d_operator(HarmonicMap::identity(), DiskPoint({0.0, 0.5})), {0.0, 0.5}, 1e-15));
    // f = conj(z): Df = -conj(z).
    const auto bar = HarmonicMap::relaxed(AnalyticSeries(), AnalyticSeries({0.0, 1.0}));
    const Complex z(0.3, 0.45);
    CHECK(close(d_operator(bar, DiskPoint(z)), -std::conj(z), 1e-15));
    CHECK(close(d_operator(half_square(), DiskPoint(0.5)), 0.25, 1e-15));
  }

  TEST_CASE("normalization is enforced unless relaxed") {
    CHECK_THROWS_AS(HarmonicMap(AnalyticSeries({0.0, 2.0}), AnalyticSeries()), HypothesisError);
    CHECK_THROWS_AS(HarmonicMap(AnalyticSeries({0.1, 1.0}), AnalyticSeries()), HypothesisError);
    CHECK_THROWS_AS(HarmonicMap(AnalyticSeries({0.0, 1.0}), AnalyticSeries({0.3})), HypothesisError);
    CHECK_FALSE(HarmonicMap::relaxed(AnalyticSeries(), AnalyticSeries({0.0, 1.0})).is_normalized());
  }

  TEST_CASE("hadamard product") {
    auto gen = testing::rng(11);
    const auto p = testing::random_polynomial(gen, 9, 1.0, false);
    const auto same = hadamard(p, geometric_kernel(9));
    for (std::size_t n = 0; n <= 9; ++n) CHECK(same[n] == p[n]);

    const auto zh = hadamard(AnalyticSeries({0.0, 1.0, 1.0}), koebe_kernel(2));
    CHECK(zh[1] == Complex(1.0));
    CHECK(zh[2] == Complex(2.0));

    const auto zero = hadamard(p, AnalyticSeries::zero(4));
    for (const Complex c : zero.coeffs()) CHECK(c == Complex{});
    // Padding keeps the larger order.
    CHECK(zero.order() == 9);
  }

  TEST_CASE("hadamard with the Koebe kernel gives z h' (property)") {
    auto gen = testing::rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      const auto h = testing::random_polynomial(gen, 12, 1.0, false);
      const Complex z = testing::random_disk_point(gen, 0.9);
      const Complex lhs = hadamard(h, koebe_kernel(h.order()))(z);
      const Complex rhs = z * h.jet(z).d1;
      CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
  }

  TEST_CASE("weighted antiderivative") {
    const auto a = weighted_antiderivative(AnalyticSeries({0.0, 1.0}));
    CHECK(a[2] == Complex(0.5));
    const auto b = weighted_antiderivative(AnalyticSeries({0.0, 1.0, 1.0}));
    CHECK(b[2] == Complex(0.5));
    CHECK(std::abs(b[3] - 2.0 / 3.0) <= 1e-16);
    const auto zero = weighted_antiderivative(AnalyticSeries::zero(3));
    for (const Complex c : zero.coeffs()) CHECK(c == Complex{});
    CHECK_THROWS_AS(weighted_antiderivative(AnalyticSeries({1.0, 1.0})), HypothesisError);
  }

  TEST_CASE("weighted antiderivative agrees with quadrature (property)") {
    auto gen = testing::rng(13);
    for (int trial = 0; trial < 40; ++trial) {
      const auto h = testing::random_polynomial(gen, 10, 1.0, false);
      const Complex z = testing::random_disk_point(gen, 0.9);
      CHECK(std::abs(weighted_antiderivative(h)(z) - radial_quadrature(h, z)) <= 1e-8);
    }
  }

  TEST_CASE("jacobian and D operator are consistent with partials (property)") {
    auto gen = testing::rng(14);
    for (int trial = 0; trial < 100; ++trial) {
      const auto h = testing::random_polynomial(gen, 6, 0.3, true);
      const auto g = testing::random_polynomial(gen, 6, 0.3, false);
      const HarmonicMap f(h, g);
      const DiskPoint z(testing::random_disk_point(gen, 0.9));
      const auto p = partials(f, z);
      CHECK(jacobian(f, z) == doctest::Approx(std::norm(p.f_z) - std::norm(p.f_zbar)).epsilon(1e-14));
      const HarmonicMap analytic(h, AnalyticSeries());
      CHECK(d_operator(analytic, z) == z.value() * h.jet(z.value()).d1);
    }
  }

  TEST_CASE("series arithmetic") {
    const AnalyticSeries p({1.0, 2.0, 3.0});
    CHECK(p.degree() == 2);
    CHECK(p[7] == Complex{});
    const auto d = p.derivative();
    CHECK(d[0] == Complex(2.0));
    CHECK(d[1] == Complex(6.0));
    const auto i = p.antiderivative();
    CHECK(i[0] == Complex{});
    CHECK(i[3] == Complex(1.0));
    const auto s = p.shifted(2);
    CHECK(s[4] == Complex(3.0));
    CHECK(s.order() == 4);
    CHECK((p - p).degree() == 0);
    const auto jet = p.jet(0.5);
    CHECK(close(jet.value, 1.0 + 1.0 + 0.75, 1e-15));
    CHECK(close(jet.d1, 2.0 + 3.0, 1e-15));
    CHECK(close(jet.d2, 6.0, 1e-15));
    const auto lg = log_kernel(4);
    CHECK(lg[4] == Complex(-0.25));
  }
}
