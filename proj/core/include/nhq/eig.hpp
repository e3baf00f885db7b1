#pragma once

#include <array>

#include "nhq/matrix.hpp"
#include "nhq/state.hpp"
#include "nhq/tolerances.hpp"

namespace nhq {

/// Eigen-decomposition of a general (non-normal) 2x2 matrix.
///
/// values[0] = tr/2 + s and values[1] = tr/2 - s, where s is the principal
/// square root of ((a - d)/2)^2 + bc. Eigenvectors are unit length with the
/// fix_phase() convention. At a double root with a single eigenvector both
/// entries of `vectors` coincide; defective() reports it.
struct Eigen2 {
  std::array<Complex, 2> values;
  std::array<StateVector, 2> vectors;

  /// |<v0|v1>| in [0, 1].
  double overlap() const;
  bool defective(double threshold = tol::kDefectiveOverlap) const { return overlap() > threshold; }
};

Eigen2 eig_general_2x2(const ComplexMatrix& m);

/// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Eigenvalues ascend; eigenvectors are orthonormal and phase fixed.
struct HermitianEigen {
  int dim;
  std::array<double, 3> values;
  std::array<StateVector, 3> vectors;
};

/// Throws InvalidArgument if m is not Hermitian within tol::kHermitianInput.
HermitianEigen eig_hermitian(const ComplexMatrix& m);

}  // namespace nhq
