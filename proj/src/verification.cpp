#include "verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ambient.hpp"
#include "foliation.hpp"
#include "hypersurface.hpp"
#include "lie_algebra.hpp"
#include "sampling.hpp"

namespace solvgeom {

namespace {

using sampling::Rng;

CheckResult at_most(std::string name, double residual, double tol) {
  return {std::move(name), residual <= tol, residual, tol, true};
}

MetricLieAlgebra solvable_algebra() {
  const auto basis = ambient::solvable_basis();
  std::vector<std::string> labels(ambient::kSolvableLabels.begin(), ambient::kSolvableLabels.end());
  return from_matrix_basis(basis, InnerProduct::Solvable, std::move(labels));
}

double torsion_metric_residual(const MetricLieAlgebra& L, Rng& rng, std::size_t samples) {
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = sampling::gaussian_vector(rng, L.dim());
    const auto y = sampling::gaussian_vector(rng, L.dim());
    const auto z = sampling::gaussian_vector(rng, L.dim());
    worst = std::max(worst, (koszul(L, x, y) - koszul(L, y, x) - L.bracket(x, y)).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(L.inner(koszul(L, x, y), z) + L.inner(y, koszul(L, x, z))));
  }
  return worst;
}

double curvature_symmetry_residual(const MetricLieAlgebra& L, Rng& rng, std::size_t samples) {
  auto r4 = [&](const CoefficientVector& x, const CoefficientVector& y, const CoefficientVector& z,
                const CoefficientVector& w) { return L.inner(curvature(L, x, y, z), w); };
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = sampling::gaussian_vector(rng, L.dim());
    const auto y = sampling::gaussian_vector(rng, L.dim());
    const auto z = sampling::gaussian_vector(rng, L.dim());
    const auto w = sampling::gaussian_vector(rng, L.dim());
    const double base = r4(x, y, z, w);
    worst = std::max({worst, std::abs(base + r4(y, x, z, w)), std::abs(base + r4(x, y, w, z)),
                      std::abs(base - r4(z, w, x, y))});
    const CoefficientVector bianchi = curvature(L, x, y, z) + curvature(L, y, z, x) + curvature(L, z, x, y);
    worst = std::max(worst, bianchi.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyConfig& cfg) {
  using std::numbers::pi;
  std::vector<CheckResult> out;
  Rng rng(cfg.seed);
  const std::size_t n = std::max<std::size_t>(cfg.samples, 1);
  const MetricLieAlgebra s8 = solvable_algebra();

  {
    double worst = s8.jacobi_residual();
    for (std::size_t s = 0; s < n; ++s) {
      const auto x = sampling::solvable_element(rng);
      const auto y = sampling::solvable_element(rng);
      const auto z = sampling::solvable_element(rng);
      const auto j = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
      worst = std::max(worst, j.max_abs());
    }
    out.push_back(at_most("Jacobi identity", worst, 1e-10));
  }
  {
    double worst = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      const auto x = sampling::sl3_element(rng);
      const auto y = sampling::sl3_element(rng);
      worst = std::max(worst, std::abs(inner_g(x, y) + killing_form(x, cartan_involution(y)) / 6.0));
      worst = std::max(worst, std::abs(inner_g(cartan_involution(x), cartan_involution(y)) - inner_g(x, y)));
    }
    out.push_back(at_most("inner_g = -B(X, theta Y)/6", worst, 1e-10));
  }
  {
    double worst = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      const auto x = sampling::solvable_element(rng);
      const auto y = sampling::solvable_element(rng);
      worst = std::max(worst, std::abs(inner_s(x, y) - inner_g(phi(x), phi(y))));
    }
    out.push_back(at_most("inner_s = inner_g after phi", worst, 1e-12));
  }
  out.push_back(at_most("Orthonormal basis of s",
                        (s8.gram() - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-14));

  const std::size_t engine_samples = std::max<std::size_t>(n / 2, 1);
  {
    double worst = torsion_metric_residual(s8, rng, engine_samples);
    worst = std::max(worst, torsion_metric_residual(build_hypersurface_algebra(pi / 5.0), rng, engine_samples));
    out.push_back(at_most("Koszul connection torsion-free and metric", worst, 1e-10));
  }
  {
    double worst = curvature_symmetry_residual(s8, rng, engine_samples);
    worst = std::max(worst, curvature_symmetry_residual(build_hypersurface_algebra(pi / 7.0), rng, engine_samples));
    out.push_back(at_most("Curvature symmetries and Bianchi identity", worst, 1e-9));
  }
  {
    const auto basis = ambient::solvable_basis();
    auto to_matrix = [&](const CoefficientVector& v) {
      SquareComplexMatrix m(ambient::kDim);
      for (std::size_t i = 0; i < basis.size(); ++i) m += v(static_cast<Eigen::Index>(i)) * basis[i];
      return m;
    };
    double worst = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      const auto x = sampling::gaussian_vector(rng, 8);
      const auto y = sampling::gaussian_vector(rng, 8);
      const double area2 = x.squaredNorm() * y.squaredNorm() - std::pow(x.dot(y), 2);
      const double k_ambient = ambient_curvature(to_matrix(x), to_matrix(y)) / area2;
      worst = std::max(worst, std::abs(sectional(s8, x, y) - k_ambient));
    }
    out.push_back(at_most("Ambient vs Koszul sectional curvature on s", worst, 1e-9));
  }
  {
    double worst_k = 0.0;
    double worst_ric = 0.0;
    const std::size_t per_alpha = std::max<std::size_t>(n / 20, 1);
    for (int a = 0; a < 20; ++a) {
      const double alpha = kAlphaMax * (a / 19.0);
      const HypersurfaceModel m(alpha);
      const MetricLieAlgebra L = build_hypersurface_algebra(alpha);
      for (std::size_t s = 0; s < per_alpha; ++s) {
        const auto x = sampling::gaussian_vector(rng, 7);
        const auto y = sampling::gaussian_vector(rng, 7);
        worst_k = std::max(worst_k, std::abs(gauss_sectional(m, x, y) - sectional(L, x, y)));
        worst_ric = std::max(worst_ric, std::abs(ricci_gauss(m, from_coefficients(x)) - ricci(L, x)));
      }
    }
    out.push_back(at_most("Gauss vs Koszul sectional curvature", worst_k, 1e-9));
    out.push_back(at_most("Gauss vs Koszul Ricci", worst_ric, 1e-9));
  }
  {
    std::uniform_real_distribution<double> angle(0.0, kAlphaMax);
    double worst = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      const double alpha = angle(rng);
      const TangentVector x = from_coefficients(sampling::unit_vector(rng, 7));
      worst = std::max(worst, std::abs(ricci_gauss(HypersurfaceModel(alpha), x) - ricci_closed(alpha, x)));
    }
    out.push_back(at_most("Gauss vs closed-form Ricci", worst, 1e-10));
  }
  {
    double worst_trace = 0.0;
    double worst_offdiag = 0.0;
    double worst_cheeger = 0.0;
    double worst_sigma = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double alpha = kAlphaMax * (i / 99.0);
      const HypersurfaceModel m(alpha);
      worst_trace = std::max(worst_trace, std::abs(mean_curvature(m) + 4.0 * std::sin(alpha)));
      Eigen::MatrixXd ii = second_fundamental_matrix(m);
      ii.diagonal().setZero();
      worst_offdiag = std::max(worst_offdiag, ii.cwiseAbs().maxCoeff());
      worst_cheeger = std::max(worst_cheeger, std::abs(cheeger(build_hypersurface_algebra(alpha)) - 4.0 * std::cos(alpha)));
      const double expected = 4.0 / (3.0 * std::sqrt(3.0)) * std::sin(alpha) * std::cos(alpha) +
                              std::pow(std::sin(alpha), 2) / 9.0;
      worst_sigma = std::max(worst_sigma, std::abs(k_sigma(m) - expected));
    }
    out.push_back(at_most("Mean curvature = -4 sin(alpha) = trace of shape operator", worst_trace, 1e-12));
    out.push_back(at_most("Second fundamental form diagonal", worst_offdiag, 1e-12));
    out.push_back(at_most("Cheeger constant = 4 cos(alpha)", worst_cheeger, 1e-12));
    out.push_back(at_most("K(sigma) closed form", worst_sigma, 1e-10));
  }
  {
    const std::size_t v[] = {0, 1, 2, 3};
    const std::size_t z[] = {4, 5};
    const auto rep = damek_ricci_check(build_hypersurface_algebra(0.0), v, z, 6, 100, cfg.seed);
    double worst = 0.0;
    for (const auto& a : rep.axiom) worst = std::max(worst, a.residual);
    out.push_back({"Damek-Ricci axioms at alpha=0", rep.overall, worst, kDamekRicciTol, true});

    double least = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 20; ++i) {
      const double alpha = std::min(kAlphaMax, 0.1 + (kAlphaMax - 0.1) * (i / 20.0));
      least = std::min(least, damek_ricci_check(build_hypersurface_algebra(alpha), v, z, 6, 4, cfg.seed).axiom[4].residual);
    }
    out.push_back({"Damek-Ricci axiom (5) fails for alpha >= 0.1", least >= 0.05, least, 0.05, false});
  }
  {
    const auto at0 = einstein_check(build_hypersurface_algebra(0.0), 1e-10);
    bool ok = at0.is_einstein && std::abs(at0.constant + 3.0) <= 1e-10;
    for (double alpha : {pi / 6.0, pi / 4.0, pi / 3.0, pi / 2.0}) {
      const auto r = einstein_check(build_hypersurface_algebra(alpha), 1e-10);
      ok = ok && !r.is_einstein && r.spread > 0.1;
    }
    out.push_back({"Einstein (constant -3) iff alpha=0", ok, std::max(at0.spread, std::abs(at0.constant + 3.0)), 1e-10, true});
  }
  {
    const auto scan = nonpositivity_scan(0.0, n, cfg.seed);
    out.push_back(at_most("Non-positive sectional curvature at alpha=0", scan.max_k, 1e-10));
  }
  {
    std::uniform_real_distribution<double> angle(0.0, kAlphaMax);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    double worst = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      GroupElement q{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}, {coord(rng), coord(rng)}, coord(rng), 0.0, angle(rng)};
      worst = std::max(worst, foliation_residual(q, coord(rng)));
    }
    out.push_back(at_most("Foliation identity exp(sT) q' = q exp(sT)", worst, 1e-10));
    double vp = 0.0;
    for (int i = -10; i < 10; ++i) vp = std::max(vp, std::abs(volume_distortion(0.0, 0.7 * i) - 1.0));
    out.push_back(at_most("Flow volume preserving at alpha=0", vp, 0.0));
  }
  {
    CoefficientVector expected = CoefficientVector::Zero(8);
    expected(6) = 4.0;
    out.push_back(at_most("H_Q = 4·H0", (trace_form_vector(s8) - expected).cwiseAbs().maxCoeff(), 1e-12));
  }
  return out;
}

}  // namespace solvgeom
