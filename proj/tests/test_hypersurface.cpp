#include <cmath>
#include <numbers>

#include "doctest.h"
#include "error.hpp"
#include "hypersurface.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

using namespace solvgeom;
using std::numbers::pi;

namespace {

const double kSqrt3 = std::sqrt(3.0);

TangentVector random_unit(sampling::Rng& rng) {
  return from_coefficients(sampling::unit_vector(rng, 7));
}

}  // namespace

TEST_SUITE("hypersurface") {
  TEST_CASE("alpha outside [0, pi/2] is rejected") {
    CHECK_THROWS_AS(HypersurfaceModel(-0.1), Error);
    CHECK_THROWS_AS(HypersurfaceModel(2.0), Error);
    CHECK_THROWS_AS(HypersurfaceModel(std::nan("")), Error);
    CHECK_NOTHROW(HypersurfaceModel(pi / 2.0));
  }

  TEST_CASE("coefficient round trip") {
    TangentVector x{{1.0, 2.0}, {3.0, -4.0}, {0.5, 0.25}, -1.5};
    const auto y = from_coefficients(to_coefficients(x));
    CHECK(y.a == x.a);
    CHECK(y.b == x.b);
    CHECK(y.c == x.c);
    CHECK(y.t == x.t);
    CHECK(x.norm_squared() == doctest::Approx(1 + 4 + 9 + 16 + 0.25 + 0.0625 + 2.25));
  }

  TEST_CASE("ambient curvature values") {
    const auto h0 = ambient::H0();
    CHECK(std::abs(ambient_curvature(h0, ambient::H1())) <= 1e-15);
    CHECK(ambient_curvature(ambient::V(), ambient::V()) == 0.0);
    CHECK(ambient_curvature(ambient::V(), h0) < 0.0);
  }

  TEST_CASE("second fundamental form values") {
    for (double alpha : {0.0, 0.2, pi / 4.0, pi / 3.0, 1.3, pi / 2.0}) {
      const HypersurfaceModel m(alpha);
      const TangentVector v{1.0, 0.0, 0.0, 0.0}, z{0.0, 0.0, 1.0, 0.0}, h{0.0, 0.0, 0.0, 1.0};
      CHECK(std::abs(second_fundamental_form(m, v, v) - (kSqrt3 / 2.0 * std::cos(alpha) - std::sin(alpha) / 2.0)) <= 1e-14);
      CHECK(std::abs(second_fundamental_form(m, z, z) + std::sin(alpha)) <= 1e-14);
      CHECK(std::abs(second_fundamental_form(m, h, h)) <= 1e-15);
    }
  }

  TEST_CASE("shape spectrum values") {
    const auto s0 = shape_spectrum(HypersurfaceModel(0.0));
    const double expected0[] = {kSqrt3 / 2, kSqrt3 / 2, -kSqrt3 / 2, -kSqrt3 / 2, 0, 0, 0};
    for (int i = 0; i < 7; ++i) CHECK(std::abs(s0[i] - expected0[i]) <= 1e-14);
    const auto s1 = shape_spectrum(HypersurfaceModel(pi / 2.0));
    const double expected1[] = {-0.5, -0.5, -0.5, -0.5, -1, -1, 0};
    for (int i = 0; i < 7; ++i) CHECK(std::abs(s1[i] - expected1[i]) <= 1e-14);
    CHECK(std::abs(shape_spectrum(HypersurfaceModel(pi / 3.0))[0]) <= 1e-15);
  }

  TEST_CASE("property: second fundamental form is diagonal with the oracle values") {
    for (int k = 0; k <= 30; ++k) {
      const double alpha = pi / 2.0 * (k / 30.0);
      const auto II = second_fundamental_matrix(HypersurfaceModel(alpha));
      const auto w = oracle::shape_values(alpha);
      const double diag[] = {w[0], w[0], w[1], w[1], w[2], w[2], w[3]};
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(std::abs(II(i, j) - (i == j ? diag[i] : 0.0)) <= 1e-13);
    }
  }

  TEST_CASE("mean curvature values") {
    CHECK(std::abs(mean_curvature(HypersurfaceModel(0.0))) <= 1e-15);
    CHECK(mean_curvature(HypersurfaceModel(pi / 2.0)) == doctest::Approx(-4.0).epsilon(1e-14));
    CHECK(mean_curvature(HypersurfaceModel(pi / 6.0)) == doctest::Approx(-2.0).epsilon(1e-14));
  }

  TEST_CASE("plane sigma") {
    for (double alpha : {0.0, 0.1, pi / 4.0, 1.0, pi / 2.0}) {
      const HypersurfaceModel m(alpha);
      CHECK(std::abs(k_sigma(m) - oracle::k_sigma(alpha)) <= 1e-12);
      const auto [x1, x2] = sigma_plane();
      CHECK(std::abs(gauss_sectional(m, x1, x2) - oracle::k_sigma(alpha)) <= 1e-12);
    }
    CHECK(std::abs(k_sigma(HypersurfaceModel(0.0))) <= 1e-15);
    CHECK(k_sigma(HypersurfaceModel(pi / 2.0)) == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
  }

  TEST_CASE("Ricci values from the Gauss pipeline") {
    for (double alpha : {0.0, 0.5, pi / 3.0, pi / 2.0}) {
      CHECK(ricci_gauss(HypersurfaceModel(alpha), TangentVector{0.0, 0.0, 0.0, 1.0}) == doctest::Approx(-3.0).epsilon(1e-13));
    }
    CHECK(std::abs(ricci_gauss(HypersurfaceModel(pi / 3.0), TangentVector{0.0, 0.0, 1.0, 0.0})) <= 1e-13);
    CHECK(ricci_gauss(HypersurfaceModel(0.0), TangentVector{1.0, 0.0, 0.0, 0.0}) == doctest::Approx(-3.0).epsilon(1e-13));
  }

  TEST_CASE("Ricci closed form values") {
    CHECK(std::abs(ricci_closed(pi / 3.0, TangentVector{0.0, 0.0, 1.0, 0.0})) <= 1e-15);
    CHECK(ricci_closed(pi / 2.0, TangentVector{0.0, 1.0, 0.0, 0.0}) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(ricci_closed(0.9, TangentVector{0.0, 0.0, 0.0, 1.0}) == doctest::Approx(-3.0).epsilon(1e-15));
    CHECK_THROWS_AS(ricci_closed(0.9, TangentVector{0.0, 0.0, 0.0, 2.0}), Error);
  }

  TEST_CASE("property: Ricci pipelines agree with the raw polynomial oracle") {
    sampling::Rng rng(31);
    std::uniform_real_distribution<double> angle(0.0, pi / 2.0);
    for (int n = 0; n < 500; ++n) {
      const double alpha = angle(rng);
      const HypersurfaceModel m(alpha);
      const auto x = random_unit(rng);
      const double raw = oracle::ricci_raw_polynomial(alpha, std::norm(x.a), std::norm(x.b), std::norm(x.c), x.t);
      CHECK(std::abs(ricci_gauss(m, x) - raw) <= 1e-10);
      CHECK(std::abs(ricci_closed(alpha, x) - raw) <= 1e-10);
    }
  }

  TEST_CASE("property: Gauss pipeline agrees with the intrinsic oracle") {
    sampling::Rng rng(32);
    for (double alpha : {0.0, 0.6, pi / 3.0, pi / 2.0}) {
      const HypersurfaceModel m(alpha);
      const oracle::Algebra O(oracle::hypersurface_basis(alpha));
      for (int n = 0; n < 100; ++n) {
        const auto x = sampling::gaussian_vector(rng, 7);
        const auto y = sampling::gaussian_vector(rng, 7);
        CHECK(std::abs(gauss_sectional(m, x, y) - O.sectional(x, y)) <= 1e-10);
      }
    }
  }

  TEST_CASE("Ricci extremes") {
    auto ext = ricci_extremes(0.0);
    CHECK(ext.min == doctest::Approx(-3.0));
    CHECK(ext.max == doctest::Approx(-3.0));
    ext = ricci_extremes(pi / 3.0);
    CHECK(ext.min == doctest::Approx(-3.0));
    CHECK(std::abs(ext.max) <= 1e-15);
    ext = ricci_extremes(pi / 2.0);
    CHECK(ext.min == doctest::Approx(-3.0));
    CHECK(ext.max == doctest::Approx(1.0));
  }

  TEST_CASE("property: Ricci extremes bound every sample and are attained") {
    sampling::Rng rng(33);
    for (int k = 0; k <= 20; ++k) {
      const double alpha = pi / 2.0 * (k / 20.0);
      const auto ext = ricci_extremes(alpha);
      double lo = 1e300, hi = -1e300;
      for (int n = 0; n < 300; ++n) {
        const double r = ricci_closed(alpha, random_unit(rng));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      CHECK(lo >= ext.min - 1e-12);
      CHECK(hi <= ext.max + 1e-12);
      // extremes sit on the coordinate directions a, b, c, t
      double cand_lo = 1e300, cand_hi = -1e300;
      for (const TangentVector x : {TangentVector{1.0, 0.0, 0.0, 0.0}, TangentVector{0.0, 1.0, 0.0, 0.0},
                                    TangentVector{0.0, 0.0, 1.0, 0.0}, TangentVector{0.0, 0.0, 0.0, 1.0}}) {
        const double r = oracle::ricci_raw_polynomial(alpha, std::norm(x.a), std::norm(x.b), std::norm(x.c), x.t);
        cand_lo = std::min(cand_lo, r);
        cand_hi = std::max(cand_hi, r);
      }
      CHECK(std::abs(ext.min - cand_lo) <= 1e-12);
      CHECK(std::abs(ext.max - cand_hi) <= 1e-12);
    }
  }

  TEST_CASE("classification at the landmark angles") {
    const auto r0 = classify(0.0, 200, 1);
    CHECK(r0.is_minimal);
    CHECK(r0.is_einstein);
    CHECK_FALSE(r0.is_horosphere_range);
    CHECK(r0.regime == RicciRegime::NegativeRicci);
    CHECK(r0.cheeger == doctest::Approx(4.0));
    CHECK(std::abs(r0.k_sigma) <= 1e-15);
    CHECK(r0.cross_pipeline_residual <= 1e-10);

    const auto r3 = classify(pi / 3.0, 200, 1);
    CHECK(r3.regime == RicciRegime::RicciNullDirection);
    CHECK(r3.is_horosphere_range);
    CHECK(r3.cheeger == doctest::Approx(2.0));
    CHECK_FALSE(r3.is_einstein);

    const auto r2 = classify(pi / 2.0, 200, 1);
    CHECK(r2.regime == RicciRegime::MixedRicci);
    CHECK(r2.mean_curvature == doctest::Approx(-4.0));
    CHECK(std::abs(r2.cheeger) <= 1e-12);
    CHECK_FALSE(r2.is_minimal);

    CHECK(to_string(RicciRegime::NegativeRicci) == "NegativeRicci");
    CHECK(to_string(RicciRegime::RicciNullDirection) == "RicciNullDirection");
    CHECK(to_string(RicciRegime::MixedRicci) == "MixedRicci");
  }

  TEST_CASE("property: classification is deterministic in the seed") {
    const auto a = classify(0.8, 300, 5);
    const auto b = classify(0.8, 300, 5);
    CHECK(a.cross_pipeline_residual == b.cross_pipeline_residual);
  }

  TEST_CASE("property: report fields are consistent") {
    for (int k = 0; k <= 12; ++k) {
      const double alpha = pi / 2.0 * (k / 12.0);
      const auto r = classify(alpha, 50, 2);
      double trace = 0.0;
      bool nonpositive = true;
      for (double v : r.shape_eigenvalues) {
        trace += v;
        nonpositive = nonpositive && v <= 1e-12;
      }
      CHECK(std::abs(trace - r.mean_curvature) <= 1e-12);
      CHECK(nonpositive == r.is_horosphere_range);
      CHECK(r.ricci_min <= r.ricci_max);
      CHECK((r.ricci_max < 0.0) == (r.regime == RicciRegime::NegativeRicci));
    }
  }

  TEST_CASE("built algebra carries the bracket coefficients") {
    for (double alpha : {0.0, 0.4, 1.1, pi / 2.0}) {
      const auto L = build_hypersurface_algebra(alpha);
      CHECK(std::abs(L.structure(6, 0, 0) - (std::cos(alpha) / 2.0 + kSqrt3 / 2.0 * std::sin(alpha))) <= 1e-13);
      CHECK(std::abs(L.structure(6, 4, 4) - std::cos(alpha)) <= 1e-13);
      CHECK(L.labels()[6] == "H");
    }
  }

  TEST_CASE("non-positivity scan") {
    const auto s0 = nonpositivity_scan(0.0, 20000, 4);
    CHECK(s0.max_k <= 1e-10);
    const auto s = nonpositivity_scan(pi / 4.0, 1000, 4);
    CHECK(s.max_k >= oracle::k_sigma(pi / 4.0) - 1e-12);
    CHECK(oracle::k_sigma(pi / 4.0) == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0)) + 1.0 / 18.0).epsilon(1e-15));
  }

  TEST_CASE("zero curvature planes at alpha = 0") {
    const HypersurfaceModel m(0.0);
    const auto scan = nonpositivity_scan(0.0, 2000, 9);
    const auto found = minimize_abs_curvature(m, scan.argmax_random);
    CHECK(found.abs_k <= 1e-6);
    CHECK(std::abs(gauss_sectional(m, found.plane.first, found.plane.second)) == doctest::Approx(found.abs_k));
  }
}
