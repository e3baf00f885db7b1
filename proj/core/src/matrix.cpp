#include "nhq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "nhq/errors.hpp"

namespace nhq {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 3) {
    throw InvalidArgument("matrix dimension must be 2 or 3, got " + std::to_string(dim));
  }
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(static_cast<int>(rows.size())) {
  check_dim(dim_);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) {
      throw InvalidArgument("ragged matrix initializer");
    }
    int c = 0;
    for (const auto& value : row) (*this)(r, c++) = value;
    ++r;
  }
  if (!is_finite()) throw InvalidArgument("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> entries) {
  ComplexMatrix m(static_cast<int>(entries.size()));
  int i = 0;
  for (const auto& value : entries) {
    m(i, i) = value;
    ++i;
  }
  if (!m.is_finite()) throw InvalidArgument("matrix entries must be finite");
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (int i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) sum += std::norm((*this)(i, j));
  return std::sqrt(sum);
}

double ComplexMatrix::norm_1() const {
  double best = 0.0;
  for (int j = 0; j < dim_; ++j) {
    double col = 0.0;
    for (int i = 0; i < dim_; ++i) col += std::abs((*this)(i, j));
    best = std::max(best, col);
  }
  return best;
}

bool ComplexMatrix::is_finite() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const Complex& z = (*this)(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  check_same_dim(*this, rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  check_same_dim(*this, rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : a_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  check_same_dim(lhs, rhs);
  const int n = lhs.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex l = lhs(i, k);
      if (l == Complex{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
    }
  return out;
}

bool operator==(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  return lhs.dim_ == rhs.dim_ && lhs.a_ == rhs.a_;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b);
  double best = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) best = std::max(best, std::abs(a(i, j) - b(i, j)));
  return best;
}

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) {
  os << '[';
  for (int i = 0; i < m.dim(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace nhq
