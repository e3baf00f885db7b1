#include "nhq/density.hpp"

#include <cmath>

#include "nhq/eig.hpp"
#include "nhq/errors.hpp"
#include "nhq/tolerances.hpp"

namespace nhq {

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : m_(m) {
  if (!m_.is_finite()) throw InvalidArgument("density matrix has non-finite entries");
  if (!m_.is_hermitian(tol::kHermitian)) throw InvalidArgument("density matrix is not Hermitian");
  const double tr = trace();
  if (!(tr > 0.0) || tr > 1.0 + tol::kTraceExcess) {
    throw InvalidArgument("density matrix trace " + std::to_string(tr) + " outside (0, 1]");
  }
  if (min_eigenvalue() < tol::kMinEigenvalue) {
    throw InvalidArgument("density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) { return DensityMatrix(psi.projector()); }

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * (1.0 / dim));
}

double DensityMatrix::fidelity(const StateVector& psi) const {
  const StateVector rho_psi = m_ * psi;
  return inner(psi, rho_psi).real() / psi.norm2();
}

double DensityMatrix::min_eigenvalue() const { return eig_hermitian(m_).values[0]; }

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix diff = a - b;
  diff = 0.5 * (diff + diff.adjoint());
  const HermitianEigen eig = eig_hermitian(diff);
  double sum = 0.0;
  for (int k = 0; k < eig.dim; ++k) sum += std::abs(eig.values[k]);
  return 0.5 * sum;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

void BlochVector::validate() const {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw InvalidArgument("Bloch vector has non-finite components");
  }
  if (x * x + y * y + z * z > 1.0 + tol::kBlochExcess) {
    throw InvalidArgument("Bloch vector outside the unit ball");
  }
}

BlochVector bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw InvalidArgument("bloch_vector expects a 2x2 density matrix");
  const ComplexMatrix& m = rho.matrix();
  const double tr = rho.trace();
  return BlochVector{2.0 * m(1, 0).real() / tr, 2.0 * m(1, 0).imag() / tr,
                     (m(0, 0).real() - m(1, 1).real()) / tr};
}

DensityMatrix density_from_bloch(const BlochVector& bloch) {
  bloch.validate();
  BlochVector b = bloch;
  if (const double n = b.norm(); n > 1.0) b = BlochVector{b.x / n, b.y / n, b.z / n};
  const ComplexMatrix m{{0.5 * (1.0 + b.z), 0.5 * Complex(b.x, -b.y)},
                        {0.5 * Complex(b.x, b.y), 0.5 * (1.0 - b.z)}};
  return DensityMatrix(m);
}

}  // namespace nhq
