#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cuh {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. `hermitian_hint` records that the producer
/// guarantees Hermiticity; it is never established by symmetrizing.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool hermitian_hint() const noexcept { return hermitian_hint_; }
  /// Marks the matrix Hermitian after asserting max|M_ij - conj(M_ji)| <= 1e-12.
  /// Throws NotHermitian / NotSquare otherwise.
  ComplexMatrix& mark_hermitian();

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix scaled(double factor) const;
  ComplexVector apply(std::span<const Complex> x) const;

  Complex trace() const;
  double frobenius_norm() const;
  /// max_ij |M_ij - conj(M_ji)|; requires a square matrix.
  double hermitian_defect() const;

  std::span<const Complex> data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
  bool hermitian_hint_ = false;
};

inline constexpr double kHermitianTolerance = 1e-12;

/// Entrywise max |a - b|; throws LengthMismatch on a shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

double norm2(std::span<const Complex> x);
Complex inner(std::span<const Complex> x, std::span<const Complex> y);  // x⁺y

}  // namespace cuh
