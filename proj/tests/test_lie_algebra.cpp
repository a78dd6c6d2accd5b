#include <cmath>
#include <numbers>
#include <vector>

#include "ambient.hpp"
#include "doctest.h"
#include "error.hpp"
#include "hypersurface.hpp"
#include "lie_algebra.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

using namespace solvgeom;
using namespace solvgeom::ambient;

namespace {

MetricLieAlgebra solvable_algebra() {
  const auto b = solvable_basis();
  return from_matrix_basis(b, InnerProduct::Solvable);
}

MetricLieAlgebra alpha_zero_algebra() {
  const auto full = solvable_basis();
  std::vector<SquareComplexMatrix> b(full.begin(), full.begin() + 7);
  return from_matrix_basis(b, InnerProduct::Solvable);
}

CoefficientVector e(std::size_t n, std::size_t i) { return CoefficientVector::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i)); }

const std::vector<std::size_t> kV = {0, 1, 2, 3};
const std::vector<std::size_t> kZ = {4, 5};

}  // namespace

TEST_SUITE("lie_engine") {
  TEST_CASE("seven dimensional algebra at alpha = 0") {
    const auto L = alpha_zero_algebra();
    CHECK(L.dim() == 7);
    CHECK((L.gram() - Eigen::MatrixXd::Identity(7, 7)).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(L.structure(0, 2, 4) == doctest::Approx(1.0));  // [V, W] = Z0
    CHECK(L.structure(6, 0, 0) == doctest::Approx(0.5));  // [H0, V] = V/2
    CHECK(L.structure(6, 4, 4) == doctest::Approx(1.0));  // [H0, Z0] = Z0
    CHECK(L.labels().front() == "e0");
  }

  TEST_CASE("eight dimensional algebra has identity gram") {
    const auto L = solvable_algebra();
    CHECK(L.dim() == 8);
    CHECK((L.gram() - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(L.jacobi_residual() <= 1e-14);
  }

  TEST_CASE("construction errors") {
    const SquareComplexMatrix vw[] = {V(), W()};
    try {
      from_matrix_basis(vw, InnerProduct::Solvable);
      FAIL("expected failure");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::NotSubalgebra);
      CHECK(std::string(err.what()).find("not a subalgebra") != std::string::npos);
    }
    const SquareComplexMatrix dependent[] = {V(), 2.0 * V()};
    CHECK_THROWS_AS(from_matrix_basis(dependent, InnerProduct::Solvable), Error);

    // [e0,e1] = e2, [e1,e2] = e0, [e0,e2] = e0 violates Jacobi
    std::vector<double> c(27, 0.0);
    auto set = [&](int i, int j, int k, double v) {
      c[(i * 3 + j) * 3 + k] = v;
      c[(j * 3 + i) * 3 + k] = -v;
    };
    set(0, 1, 2, 1.0);
    set(1, 2, 0, 1.0);
    set(0, 2, 0, 1.0);
    try {
      MetricLieAlgebra(3, c, Eigen::MatrixXd::Identity(3, 3));
      FAIL("expected failure");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::InvalidAlgebra);
      CHECK(std::string(err.what()) == "Jacobi identity violated");
    }
    std::vector<double> zero(8, 0.0);
    CHECK_THROWS_AS(MetricLieAlgebra(2, zero, Eigen::MatrixXd::Zero(2, 2)), Error);
    std::vector<double> asym(8, 0.0);
    asym[(0 * 2 + 1) * 2 + 0] = 1.0;
    CHECK_THROWS_AS(MetricLieAlgebra(2, asym, Eigen::MatrixXd::Identity(2, 2)), Error);
  }

  TEST_CASE("connection values") {
    const auto L8 = solvable_algebra();
    CHECK(koszul(L8, e(8, 6), e(8, 6)).norm() <= 1e-15);
    const auto L7 = alpha_zero_algebra();
    CHECK(L7.inner(koszul(L7, e(7, 0), e(7, 6)), e(7, 0)) == doctest::Approx(-0.5).epsilon(1e-14));
  }

  TEST_CASE("property: connection is torsion free and metric") {
    const auto L = solvable_algebra();
    sampling::Rng rng(21);
    double torsion = 0.0, metric = 0.0;
    for (int n = 0; n < 500; ++n) {
      const auto x = sampling::gaussian_vector(rng, 8);
      const auto y = sampling::gaussian_vector(rng, 8);
      const auto z = sampling::gaussian_vector(rng, 8);
      torsion = std::max(torsion, (koszul(L, x, y) - koszul(L, y, x) - L.bracket(x, y)).cwiseAbs().maxCoeff());
      metric = std::max(metric, std::abs(L.inner(koszul(L, x, y), z) + L.inner(y, koszul(L, x, z))));
    }
    CHECK(torsion <= 1e-10);
    CHECK(metric <= 1e-10);
  }

  TEST_CASE("curvature values") {
    const auto L = solvable_algebra();
    const auto x = e(8, 3);
    CHECK(curvature(L, x, x, e(8, 0)).norm() == 0.0);
    CHECK(std::abs(L.inner(curvature(L, e(8, 6), e(8, 7), e(8, 7)), e(8, 6))) <= 1e-14);
    CHECK(std::abs(ambient_curvature(H0(), H1())) <= 1e-15);
    const double k = sectional(L, e(8, 0), e(8, 6));
    CHECK(k < 0.0);
    CHECK(k == doctest::Approx(ambient_curvature(V(), H0())).epsilon(1e-12));
    CHECK(k == doctest::Approx(-0.25).epsilon(1e-12));
  }

  TEST_CASE("property: curvature symmetries and first Bianchi identity") {
    const auto L = build_hypersurface_algebra(0.7);
    sampling::Rng rng(22);
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
      const auto x = sampling::gaussian_vector(rng, 7);
      const auto y = sampling::gaussian_vector(rng, 7);
      const auto z = sampling::gaussian_vector(rng, 7);
      const auto w = sampling::gaussian_vector(rng, 7);
      const double rxyzw = L.inner(curvature(L, x, y, z), w);
      worst = std::max(worst, std::abs(rxyzw + L.inner(curvature(L, y, x, z), w)));
      worst = std::max(worst, std::abs(rxyzw + L.inner(curvature(L, x, y, w), z)));
      worst = std::max(worst, std::abs(rxyzw - L.inner(curvature(L, z, w, x), y)));
      worst = std::max(worst, (curvature(L, x, y, z) + curvature(L, y, z, x) + curvature(L, z, x, y)).cwiseAbs().maxCoeff());
    }
    CHECK(worst <= 1e-9);
  }

  TEST_CASE("sectional curvature depends only on the plane") {
    const auto L = build_hypersurface_algebra(0.4);
    sampling::Rng rng(23);
    for (int n = 0; n < 50; ++n) {
      const auto x = sampling::gaussian_vector(rng, 7);
      const auto y = sampling::gaussian_vector(rng, 7);
      const double k = sectional(L, x, y);
      CHECK(std::abs(k - sectional(L, y, x)) <= 1e-12);
      CHECK(std::abs(k - sectional(L, x, 2.0 * x + 3.0 * y)) <= 1e-9);
    }
    CHECK_THROWS_AS(sectional(L, e(7, 0), 2.0 * e(7, 0)), Error);
  }

  TEST_CASE("Ricci curvature values") {
    const auto L = alpha_zero_algebra();
    CHECK(ricci(L, e(7, 6)) == doctest::Approx(-3.0).epsilon(1e-13));
    sampling::Rng rng(24);
    for (int n = 0; n < 100; ++n) {
      CHECK(ricci(L, sampling::unit_vector(rng, 7)) == doctest::Approx(-3.0).epsilon(1e-12));
    }
    CHECK(ricci(L, CoefficientVector::Zero(7)) == 0.0);
  }

  TEST_CASE("engine agrees with the independent adjoint-formula oracle") {
    sampling::Rng rng(25);
    for (double alpha : {0.0, 0.3, std::numbers::pi / 3.0, 1.2, std::numbers::pi / 2.0}) {
      const auto L = build_hypersurface_algebra(alpha);
      const oracle::Algebra O(oracle::hypersurface_basis(alpha));
      for (int n = 0; n < 50; ++n) {
        const auto x = sampling::gaussian_vector(rng, 7);
        const auto y = sampling::gaussian_vector(rng, 7);
        CHECK((koszul(L, x, y) - O.nabla(x, y)).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(std::abs(sectional(L, x, y) - O.sectional(x, y)) <= 1e-10);
        CHECK(std::abs(ricci(L, x) - O.ricci(x)) <= 1e-10);
      }
    }
    const auto L8 = solvable_algebra();
    const oracle::Algebra O8(oracle::solvable_basis());
    for (int n = 0; n < 50; ++n) {
      const auto x = sampling::gaussian_vector(rng, 8);
      CHECK(std::abs(ricci(L8, x) - O8.ricci(x)) <= 1e-10);
    }
  }

  TEST_CASE("non-orthonormal gram") {
    // s with the ambient product has gram diag(2,2,2,2,2,2,1,1)
    const auto b = solvable_basis();
    const auto La = from_matrix_basis(b, InnerProduct::Ambient);
    CHECK(La.gram()(0, 0) == doctest::Approx(2.0));
    CHECK(La.gram()(6, 6) == doctest::Approx(1.0));
    const auto onb = orthonormal_basis(La);
    CHECK((onb.transpose() * La.gram() * onb - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-13);
    const auto sym = orthonormal_basis_symmetric(La);
    CHECK((sym.transpose() * La.gram() * sym - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-13);
    sampling::Rng rng(26);
    const auto x = sampling::gaussian_vector(rng, 8);
    CHECK(std::abs(ricci(La, x, onb) - ricci(La, x, sym)) <= 1e-11);
    CHECK((koszul(La, x, x)).size() == 8);
  }

  TEST_CASE("trace form vector") {
    const auto L8 = solvable_algebra();
    CoefficientVector expected = CoefficientVector::Zero(8);
    expected(6) = 4.0;
    CHECK((trace_form_vector(L8) - expected).cwiseAbs().maxCoeff() <= 1e-12);
    for (double alpha : {0.0, 0.5, 1.0, std::numbers::pi / 2.0}) {
      const auto v = trace_form_vector(build_hypersurface_algebra(alpha));
      CHECK(std::abs(v(6) - 4.0 * std::cos(alpha)) <= 1e-12);
      CHECK(v.head(6).cwiseAbs().maxCoeff() <= 1e-12);
    }
    const auto n = nilpotent_basis();
    const auto Ln = from_matrix_basis(n, InnerProduct::Solvable);
    CHECK(trace_form_vector(Ln).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(cheeger(Ln) == 0.0);
  }

  TEST_CASE("Cheeger constant values") {
    CHECK(cheeger(build_hypersurface_algebra(0.0)) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(std::abs(cheeger(build_hypersurface_algebra(std::numbers::pi / 2.0))) <= 1e-12);
    CHECK(cheeger(build_hypersurface_algebra(std::numbers::pi / 3.0)) == doctest::Approx(2.0).epsilon(1e-13));
  }

  TEST_CASE("Einstein check") {
    const auto r0 = einstein_check(build_hypersurface_algebra(0.0), 1e-10);
    CHECK(r0.is_einstein);
    CHECK(std::abs(r0.constant + 3.0) <= 1e-12);
    CHECK_FALSE(einstein_check(build_hypersurface_algebra(std::numbers::pi / 4.0), 1e-10).is_einstein);
    const auto flat = einstein_check(MetricLieAlgebra(3, std::vector<double>(27, 0.0), Eigen::MatrixXd::Identity(3, 3)), 1e-12);
    CHECK(flat.is_einstein);
    CHECK(flat.constant == 0.0);
    const auto s = einstein_check(solvable_algebra(), 1e-10);
    CHECK(s.is_einstein);
    CHECK(std::abs(s.constant + 3.0) <= 1e-12);
  }

  TEST_CASE("J operator on the Heisenberg part") {
    const auto L = alpha_zero_algebra();
    CHECK((j_operator(L, e(7, 4), e(7, 0), kV) - e(7, 2)).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((j_operator(L, e(7, 4), e(7, 2), kV) + e(7, 0)).cwiseAbs().maxCoeff() <= 1e-14);
    // <J_Z0 iV, U'> = <Z0, [iV, U']> is -1 for U' = iW
    CHECK((j_operator(L, e(7, 4), e(7, 1), kV) + e(7, 3)).cwiseAbs().maxCoeff() <= 1e-14);
    const auto jv = j_operator(L, e(7, 4), e(7, 0), kV);
    CHECK((j_operator(L, e(7, 4), jv, kV) + e(7, 0)).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK_THROWS_AS(j_operator(L, e(7, 4), e(7, 6), kV), Error);
  }

  TEST_CASE("Damek-Ricci check") {
    const auto r0 = damek_ricci_check(build_hypersurface_algebra(0.0), kV, kZ, 6);
    CHECK(r0.overall);
    CHECK(r0.is_two_step_nilpotent);
    for (const auto& a : r0.axiom) {
      CHECK(a.passed);
      CHECK(a.residual <= 1e-10);
    }
    CHECK(r0.j_squared_residual <= 1e-10);

    const auto r = damek_ricci_check(build_hypersurface_algebra(std::numbers::pi / 6.0), kV, kZ, 6);
    CHECK_FALSE(r.overall);
    CHECK_FALSE(r.axiom[4].passed);
    CHECK(r.axiom[4].residual > 0.1);
    CHECK(r.axiom[0].passed);

    const std::vector<std::size_t> overlap = {0, 1, 2, 4};
    CHECK_THROWS_AS(damek_ricci_check(build_hypersurface_algebra(0.0), overlap, kZ, 6), Error);
  }
}
