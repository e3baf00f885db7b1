#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <iosfwd>

namespace nhq {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Dense complex square matrix of dimension 2 or 3 stored row-major.
///
/// The qutrit lives in dimension 3 with basis (g, e, f); the postselected
/// qubit in dimension 2 with basis (e, f). Storage is a fixed array and every
/// operation is allocation-free.
class ComplexMatrix {
 public:
  static constexpr int kMaxDim = 3;

  /// Zero matrix. Throws InvalidArgument unless dim is 2 or 3.
  explicit ComplexMatrix(int dim);

  /// Row-by-row construction; the number of rows fixes the dimension.
  /// Throws InvalidArgument for ragged rows, wrong size or non-finite entries.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::initializer_list<Complex> entries);

  int dim() const noexcept { return dim_; }

  Complex& operator()(int row, int col) noexcept { return a_[row * kMaxDim + col]; }
  const Complex& operator()(int row, int col) const noexcept { return a_[row * kMaxDim + col]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  // Maximum absolute column sum.
  double norm_1() const;

  bool is_finite() const;
  bool is_hermitian(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  int dim_;
  std::array<Complex, kMaxDim * kMaxDim> a_{};
};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest elementwise modulus of a - b. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m);

}  // namespace nhq
