#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "complex_matrix.hpp"

namespace solvgeom {

/// Coordinates of a vector in the ordered basis of a MetricLieAlgebra.
using CoefficientVector = Eigen::VectorXd;

inline constexpr double kJacobiTol = 1e-10;
inline constexpr double kGramMinEigenvalue = 1e-10;
inline constexpr double kClosureTol = 1e-9;

/// Finite-dimensional real Lie algebra with an inner product, given by
/// structure constants [e_i, e_j] = sum_k c(i, j, k) e_k and a Gram matrix.
///
/// The constructor validates antisymmetry, the Jacobi identity and positive
/// definiteness of the Gram matrix, throwing Error(InvalidAlgebra) naming the
/// first violated invariant. The Levi-Civita connection coefficients of the
/// left-invariant metric are computed once here.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(std::size_t dim, std::vector<double> structure, Eigen::MatrixXd gram,
                   std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  double structure(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<double>& structure_constants() const noexcept { return structure_; }
  const Eigen::MatrixXd& gram() const noexcept { return gram_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  CoefficientVector basis_vector(std::size_t i) const;
  CoefficientVector bracket(const CoefficientVector& x, const CoefficientVector& y) const;
  double inner(const CoefficientVector& x, const CoefficientVector& y) const;
  double norm(const CoefficientVector& x) const;

  /// Nabla_{e_i} e_j in coordinates.
  CoefficientVector connection(std::size_t i, std::size_t j) const;

  /// Largest Jacobi residual over all basis triples.
  double jacobi_residual() const;

 private:
  friend CoefficientVector koszul(const MetricLieAlgebra&, const CoefficientVector&,
                                  const CoefficientVector&);

  std::size_t dim_;
  std::vector<double> structure_;
  Eigen::MatrixXd gram_;
  std::vector<std::string> labels_;
  std::vector<double> christoffel_;  // (i*dim + j)*dim + k
};

enum class InnerProduct { Solvable, Ambient };

/// Structure constants of the real span of `basis` (brackets expanded by least
/// squares in the real coordinates of the matrix entries) and the Gram matrix
/// of the chosen inner product.
MetricLieAlgebra from_matrix_basis(std::span<const SquareComplexMatrix> basis, InnerProduct inner,
                                   std::vector<std::string> labels = {});

/// Levi-Civita connection of the left-invariant metric, nabla_X Y.
CoefficientVector koszul(const MetricLieAlgebra& L, const CoefficientVector& x,
                         const CoefficientVector& y);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
CoefficientVector curvature(const MetricLieAlgebra& L, const CoefficientVector& x,
                            const CoefficientVector& y, const CoefficientVector& z);

/// <R(X,Y)Y, X> / (|X|^2 |Y|^2 - <X,Y>^2). Throws DegeneratePlane.
double sectional(const MetricLieAlgebra& L, const CoefficientVector& x, const CoefficientVector& y);

/// Columns are a Gram-orthonormal basis (modified Gram-Schmidt).
Eigen::MatrixXd orthonormal_basis(const MetricLieAlgebra& L);
/// Columns are the orthonormal basis gram^{-1/2}; used to cross-check basis independence.
Eigen::MatrixXd orthonormal_basis_symmetric(const MetricLieAlgebra& L);

/// Ric(X) = sum_i <R(e_i, X)X, e_i> over an orthonormal basis.
double ricci(const MetricLieAlgebra& L, const CoefficientVector& x);
double ricci(const MetricLieAlgebra& L, const CoefficientVector& x, const Eigen::MatrixXd& onb);

/// Matrix of the Ricci form in the given orthonormal basis (columns of `onb`).
Eigen::MatrixXd ricci_matrix(const MetricLieAlgebra& L, const Eigen::MatrixXd& onb);

/// The vector h with <h, X> = Tr ad X for every X.
CoefficientVector trace_form_vector(const MetricLieAlgebra& L);

/// max of Tr ad X over unit X, i.e. the Gram norm of trace_form_vector.
/// Only meaningful as a Cheeger constant for solvable algebras.
double cheeger(const MetricLieAlgebra& L);

struct EinsteinResult {
  bool is_einstein;
  double constant;  // mean Ricci eigenvalue
  double spread;    // max |eigenvalue - mean|
};

EinsteinResult einstein_check(const MetricLieAlgebra& L, double tol);

/// J_Z U in v, defined by <J_Z U, U'> = <Z, [U, U']> for all U' in v.
CoefficientVector j_operator(const MetricLieAlgebra& L, const CoefficientVector& z,
                             const CoefficientVector& u, std::span<const std::size_t> v_indices);

struct AxiomResult {
  bool passed;
  double residual;
};

struct DamekRicciReport {
  AxiomResult axiom[5];  // (1) .. (5)
  double j_squared_residual;
  bool is_two_step_nilpotent;
  bool overall;
};

inline constexpr double kDamekRicciTol = 1e-10;

/// Checks the Damek-Ricci axioms for n = v + z extended by the unit vector
/// e_{a_index}. Axiom (4) is evaluated on an orthonormal basis of z and on
/// `random_z` seeded random unit vectors of z.
DamekRicciReport damek_ricci_check(const MetricLieAlgebra& L,
                                   std::span<const std::size_t> v_indices,
                                   std::span<const std::size_t> z_indices, std::size_t a_index,
                                   std::size_t random_z = 100, std::uint64_t seed = 7);

}  // namespace solvgeom
