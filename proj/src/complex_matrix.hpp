#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace solvgeom {

using Complex = std::complex<double>;

/// Membership tolerance for traceless / in-s tests.
inline constexpr double kMembershipTol = 1e-12;

/// Dense n x n complex matrix with value semantics. Row-major storage.
class SquareComplexMatrix {
 public:
  SquareComplexMatrix() = default;
  explicit SquareComplexMatrix(std::size_t dim);
  /// Row-major entries; the list length must be dim*dim.
  SquareComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries);

  static SquareComplexMatrix zero(std::size_t dim) { return SquareComplexMatrix(dim); }
  static SquareComplexMatrix identity(std::size_t dim);
  /// E_ij: a single 1 at (i, j).
  static SquareComplexMatrix unit(std::size_t dim, std::size_t i, std::size_t j);
  static SquareComplexMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  std::span<const Complex> entries() const noexcept { return entries_; }

  SquareComplexMatrix& operator+=(const SquareComplexMatrix& other);
  SquareComplexMatrix& operator-=(const SquareComplexMatrix& other);
  SquareComplexMatrix& operator*=(Complex s);

  SquareComplexMatrix transpose() const;
  SquareComplexMatrix conj_transpose() const;
  Complex trace() const;
  /// Largest entry modulus.
  double max_abs() const;
  double frobenius_norm() const;

  friend bool operator==(const SquareComplexMatrix&, const SquareComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

SquareComplexMatrix operator+(SquareComplexMatrix a, const SquareComplexMatrix& b);
SquareComplexMatrix operator-(SquareComplexMatrix a, const SquareComplexMatrix& b);
SquareComplexMatrix operator-(SquareComplexMatrix a);
SquareComplexMatrix operator*(const SquareComplexMatrix& a, const SquareComplexMatrix& b);
SquareComplexMatrix operator*(Complex s, SquareComplexMatrix a);
SquareComplexMatrix operator*(double s, SquareComplexMatrix a);

/// XY - YX.
SquareComplexMatrix bracket(const SquareComplexMatrix& x, const SquareComplexMatrix& y);

/// theta(X) = -conj(X)^T.
SquareComplexMatrix cartan_involution(const SquareComplexMatrix& x);

/// Killing form of sl(n, C) viewed as a real Lie algebra: 4n Re Tr(XY)
/// (12 Re Tr(XY) for n = 3).
double killing_form(const SquareComplexMatrix& x, const SquareComplexMatrix& y);

/// <X, Y>_g = 2 Re Tr(X conj(Y)^T).
double inner_g(const SquareComplexMatrix& x, const SquareComplexMatrix& y);

/// phi(X) = (X + conj(X)^T) / 2, the isometry s -> p.
SquareComplexMatrix phi(const SquareComplexMatrix& x);

/// Metric on s = n + a: Re Tr(Y1 conj(Y2)^T) + 2 Tr(H1 H2), where Y is the
/// strictly upper part and H the diagonal part. Throws NotInSolvable for
/// arguments outside s.
double inner_s(const SquareComplexMatrix& x, const SquareComplexMatrix& y);

bool is_traceless(const SquareComplexMatrix& x, double tol = kMembershipTol);

/// Strictly-lower part vanishes, diagonal real and traceless.
bool is_in_solvable(const SquareComplexMatrix& x, double tol = kMembershipTol);

}  // namespace solvgeom
