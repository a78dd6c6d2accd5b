#include <cmath>
#include <numbers>

#include "doctest.h"
#include "error.hpp"
#include "foliation.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

using namespace solvgeom;
using std::numbers::pi;

namespace {

oracle::M3 oracle_matrix(const GroupElement& q) {
  oracle::M3 n = oracle::M3::Identity();
  n(0, 1) = q.x;
  n(1, 2) = q.y;
  n(0, 2) = q.z;
  const oracle::M3 log_a = q.t * oracle::h_dir(q.alpha) + q.normal * oracle::t_dir(q.alpha);
  oracle::M3 a = oracle::M3::Zero();
  for (int i = 0; i < 3; ++i) a(i, i) = std::exp(log_a(i, i));
  return n * a;
}

double distance(const SquareComplexMatrix& m, const oracle::M3& o) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(m(i, j) - o(i, j)));
  return d;
}

GroupElement random_element(sampling::Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, pi / 2.0);
  auto g = [&] { return sampling::gaussian(rng); };
  return GroupElement{{g(), g()}, {g(), g()}, {g(), g()}, g(), 0.0, angle(rng)};
}

}  // namespace

TEST_SUITE("foliation") {
  TEST_CASE("group element matrix matches the oracle") {
    sampling::Rng rng(41);
    for (int n = 0; n < 100; ++n) {
      auto q = random_element(rng);
      q.normal = sampling::gaussian(rng);
      CHECK(distance(to_matrix(q), oracle_matrix(q)) <= 1e-12);
    }
  }

  TEST_CASE("flow of the identity is the diagonal exponential") {
    for (double alpha : {0.0, 0.7, pi / 2.0}) {
      const GroupElement e{0.0, 0.0, 0.0, 0.0, 0.0, alpha};
      const double s = 1.3;
      const auto m = to_matrix(flow_point(e, s));
      const auto tau = oracle::tau(alpha);
      for (int i = 0; i < 3; ++i) CHECK(std::abs(m(i, i) - std::exp(s * tau[i])) <= 1e-14);
      CHECK(distance(normal_exponential(alpha, s), oracle_matrix(flow_point(e, s))) <= 1e-14);
    }
  }

  TEST_CASE("zero flow time is the identity") {
    sampling::Rng rng(42);
    const auto q = random_element(rng);
    const auto f = flow_point(q, 0.0);
    CHECK(f.x == q.x);
    CHECK(f.normal == q.normal);
    const auto c = leaf_conjugate(q, 0.0);
    CHECK(c.x == q.x);
    CHECK(c.y == q.y);
    CHECK(c.z == q.z);
    CHECK(foliation_residual(q, 0.0) == 0.0);
  }

  TEST_CASE("leaf conjugate example") {
    const GroupElement q{1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    const auto c = leaf_conjugate(q, 1.0);
    CHECK(std::abs(c.x - std::exp(oracle::kSqrt3 / 2.0)) <= 1e-14);
  }

  TEST_CASE("property: exp(sT) q' = q exp(sT)") {
    sampling::Rng rng(43);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
      const auto q = random_element(rng);
      const double s = 2.0 * sampling::gaussian(rng);
      const auto c = leaf_conjugate(q, s);
      const oracle::M3 e = oracle_matrix(flow_point(GroupElement{0.0, 0.0, 0.0, 0.0, 0.0, q.alpha}, s));
      const oracle::M3 lhs = e * oracle_matrix(c);
      const oracle::M3 rhs = oracle_matrix(q) * e;
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, rhs.cwiseAbs().maxCoeff()));
      CHECK(foliation_residual(q, s) <= 1e-10 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("volume distortion") {
    for (double s : {-3.0, -0.5, 0.0, 0.25, 1.0, 7.0}) CHECK(volume_distortion(0.0, s) == 1.0);
    CHECK(volume_distortion(pi / 2.0, 1.0) == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
    CHECK(volume_distortion(0.9, 0.0) == 1.0);
    // determinant of the adjoint action of exp(sT) on n
    for (double alpha : {0.3, 1.0}) {
      const auto tau = oracle::tau(alpha);
      const double s = 0.6;
      const double det = std::exp(2.0 * s * ((tau[0] - tau[1]) + (tau[1] - tau[2]) + (tau[0] - tau[2])));
      CHECK(volume_distortion(alpha, s) == doctest::Approx(1.0 / det).epsilon(1e-13));
    }
  }

  TEST_CASE("invalid input") {
    CHECK_THROWS_AS(volume_distortion(3.0, 1.0), Error);
    GroupElement q{};
    q.x = {std::nan(""), 0.0};
    CHECK_THROWS_AS(flow_point(q, 1.0), Error);
    q.x = 0.0;
    q.alpha = -1.0;
    CHECK_THROWS_AS(leaf_conjugate(q, 1.0), Error);
  }
}
