#include "cuhyper/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cuhyper/error.hpp"

namespace cuh {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::LengthMismatch,
                "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  m.hermitian_hint_ = true;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  m.hermitian_hint_ = true;
  return m;
}

ComplexMatrix& ComplexMatrix::mark_hermitian() {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "Hermitian matrix must be square");
  if (const double defect = hermitian_defect(); defect > kHermitianTolerance) {
    throw Error(ErrorCode::NotHermitian, "Hermitian defect " + std::to_string(defect));
  }
  hermitian_hint_ = true;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  out.hermitian_hint_ = hermitian_hint_;
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw Error(ErrorCode::LengthMismatch, "inner dimensions differ in matrix product");
  }
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex a = (*this)(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  require_same_shape(*this, rhs);
  ComplexMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - rhs.data_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  require_same_shape(*this, rhs);
  ComplexMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + rhs.data_[k];
  return out;
}

ComplexMatrix ComplexMatrix::scaled(double factor) const {
  ComplexMatrix out = *this;
  for (Complex& z : out.data_) z *= factor;
  return out;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != cols_) {
    throw Error(ErrorCode::LengthMismatch, "vector length does not match column count");
  }
  ComplexVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

double ComplexMatrix::hermitian_defect() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "Hermitian defect needs a square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  return worst;
}

double norm2(std::span<const Complex> x) {
  double sum = 0.0;
  for (const Complex& z : x) sum += std::norm(z);
  return std::sqrt(sum);
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "inner product lengths differ");
  Complex acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

}  // namespace cuh
