#include "complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace solvgeom {

namespace {

void require_same_dim(const SquareComplexMatrix& a, const SquareComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": dimension mismatch (" +
                                                  std::to_string(a.dim()) + " vs " +
                                                  std::to_string(b.dim()) + ")");
  }
}

// Re Tr(A conj(B)^T) = Re sum_ij A_ij conj(B_ij), without forming the product.
double re_hermitian_pairing(const SquareComplexMatrix& a, const SquareComplexMatrix& b) {
  double acc = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    acc += ea[k].real() * eb[k].real() + ea[k].imag() * eb[k].imag();
  }
  return acc;
}

}  // namespace

SquareComplexMatrix::SquareComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

SquareComplexMatrix::SquareComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries)
    : dim_(dim), entries_(entries) {
  if (entries_.size() != dim * dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix literal needs " + std::to_string(dim * dim) + " entries, got " +
                    std::to_string(entries_.size()));
  }
}

SquareComplexMatrix SquareComplexMatrix::identity(std::size_t dim) {
  SquareComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

SquareComplexMatrix SquareComplexMatrix::unit(std::size_t dim, std::size_t i, std::size_t j) {
  if (i >= dim || j >= dim) throw Error(ErrorCode::OutOfRange, "unit matrix index out of range");
  SquareComplexMatrix m(dim);
  m(i, j) = 1.0;
  return m;
}

SquareComplexMatrix SquareComplexMatrix::diagonal(std::span<const double> diag) {
  SquareComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

SquareComplexMatrix& SquareComplexMatrix::operator+=(const SquareComplexMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

SquareComplexMatrix& SquareComplexMatrix::operator-=(const SquareComplexMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

SquareComplexMatrix& SquareComplexMatrix::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

SquareComplexMatrix SquareComplexMatrix::transpose() const {
  SquareComplexMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SquareComplexMatrix SquareComplexMatrix::conj_transpose() const {
  SquareComplexMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

Complex SquareComplexMatrix::trace() const {
  Complex tr = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) tr += (*this)(i, i);
  return tr;
}

double SquareComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double SquareComplexMatrix::frobenius_norm() const { return std::sqrt(re_hermitian_pairing(*this, *this)); }

SquareComplexMatrix operator+(SquareComplexMatrix a, const SquareComplexMatrix& b) { return a += b; }
SquareComplexMatrix operator-(SquareComplexMatrix a, const SquareComplexMatrix& b) { return a -= b; }
SquareComplexMatrix operator-(SquareComplexMatrix a) { return a *= -1.0; }
SquareComplexMatrix operator*(Complex s, SquareComplexMatrix a) { return a *= s; }
SquareComplexMatrix operator*(double s, SquareComplexMatrix a) { return a *= s; }

SquareComplexMatrix operator*(const SquareComplexMatrix& a, const SquareComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  SquareComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

SquareComplexMatrix bracket(const SquareComplexMatrix& x, const SquareComplexMatrix& y) {
  require_same_dim(x, y, "bracket");
  return x * y - y * x;
}

SquareComplexMatrix cartan_involution(const SquareComplexMatrix& x) { return -x.conj_transpose(); }

double killing_form(const SquareComplexMatrix& x, const SquareComplexMatrix& y) {
  require_same_dim(x, y, "killing_form");
  // Re Tr(XY) = Re sum_ij X_ij Y_ji
  const std::size_t n = x.dim();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc += (x(i, j) * y(j, i)).real();
  return 4.0 * static_cast<double>(n) * acc;
}

double inner_g(const SquareComplexMatrix& x, const SquareComplexMatrix& y) {
  require_same_dim(x, y, "inner_g");
  return 2.0 * re_hermitian_pairing(x, y);
}

SquareComplexMatrix phi(const SquareComplexMatrix& x) { return 0.5 * (x + x.conj_transpose()); }

bool is_traceless(const SquareComplexMatrix& x, double tol) { return std::abs(x.trace()) <= tol; }

bool is_in_solvable(const SquareComplexMatrix& x, double tol) {
  const std::size_t n = x.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(x(i, i).imag()) > tol) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(x(i, j)) > tol) return false;
  }
  return is_traceless(x, tol);
}

double inner_s(const SquareComplexMatrix& x, const SquareComplexMatrix& y) {
  require_same_dim(x, y, "inner_s");
  if (!is_in_solvable(x) || !is_in_solvable(y)) {
    throw Error(ErrorCode::NotInSolvable, "inner_s: argument is not in s = n + a");
  }
  const std::size_t n = x.dim();
  double nil = 0.0;
  double diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    diag += x(i, i).real() * y(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      nil += x(i, j).real() * y(i, j).real() + x(i, j).imag() * y(i, j).imag();
    }
  }
  return nil + 2.0 * diag;
}

}  // namespace solvgeom
