#pragma once

#include "nhq/matrix.hpp"
#include "nhq/state.hpp"

namespace nhq {

/// Validated density matrix of dimension 2 or 3: Hermitian within
/// tol::kHermitian, eigenvalues above tol::kMinEigenvalue, trace in
/// (0, 1 + tol::kTraceExcess]. Conditional (sub-normalized) states are allowed.
class DensityMatrix {
 public:
  /// Throws InvalidArgument when any invariant fails.
  explicit DensityMatrix(const ComplexMatrix& m);

  /// |psi><psi| for a ket with norm^2 in (0, 1].
  static DensityMatrix pure(const StateVector& psi);

  /// Maximally mixed state of the given dimension.
  static DensityMatrix maximally_mixed(int dim);

  int dim() const noexcept { return m_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  double trace() const { return m_.trace().real(); }
  /// <i|rho|i>
  double population(int index) const { return m_(index, index).real(); }
  double population(Level level) const { return population(level_index(level, dim())); }

  /// Fidelity with a pure state, <psi|rho|psi> / <psi|psi>.
  double fidelity(const StateVector& psi) const;

  double min_eigenvalue() const;

 private:
  ComplexMatrix m_;
};

/// Trace distance 1/2 ||a - b||_1 between two matrices of equal dimension.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Expectation values of (sigma_x, sigma_y, sigma_z) on the (e, f) manifold.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  /// Throws InvalidArgument if the vector leaves the unit ball by more
  /// than tol::kBlochExcess or has a non-finite component.
  void validate() const;
};

/// Bloch vector of a 2x2 density matrix (trace normalized first).
BlochVector bloch_vector(const DensityMatrix& rho);

/// 1/2 (I + x sigma_x + y sigma_y + z sigma_z); validates the vector.
DensityMatrix density_from_bloch(const BlochVector& b);

}  // namespace nhq
