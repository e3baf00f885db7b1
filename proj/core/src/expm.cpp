#include "nhq/expm.hpp"

#include <cmath>

#include "nhq/eig.hpp"
#include "nhq/errors.hpp"
#include "nhq/tolerances.hpp"

namespace nhq {

namespace {

// After scaling ||A||_1 <= 1/2, so 20 terms reach far below double epsilon.
constexpr int kTaylorTerms = 20;
constexpr double kScaledNorm = 0.5;

}  // namespace

ComplexMatrix exp_taylor(const ComplexMatrix& a) {
  const double norm = a.norm_1();
  int squarings = 0;
  if (norm > kScaledNorm) squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNorm)));
  const ComplexMatrix scaled = a * std::ldexp(1.0, -squarings);

  const int n = a.dim();
  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= kTaylorTerms; ++k) {
    term = term * scaled * (1.0 / k);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

ComplexMatrix matrix_exponential(const ComplexMatrix& m, double t) {
  if (t == 0.0) return ComplexMatrix::identity(m.dim());
  if (m.dim() == 2) {
    const Eigen2 eig = eig_general_2x2(m);
    if (eig.overlap() <= tol::kExpmParallelOverlap) {
      const StateVector& v0 = eig.vectors[0];
      const StateVector& v1 = eig.vectors[1];
      const Complex det = v0[0] * v1[1] - v1[0] * v0[1];
      const Complex e0 = std::exp(-kI * eig.values[0] * t);
      const Complex e1 = std::exp(-kI * eig.values[1] * t);
      // V diag(e0, e1) V^{-1} with V = [v0 v1].
      const ComplexMatrix v{{v0[0], v1[0]}, {v0[1], v1[1]}};
      const ComplexMatrix v_inv = ComplexMatrix{{v1[1], -v1[0]}, {-v0[1], v0[0]}} * (1.0 / det);
      return v * ComplexMatrix::diagonal({e0, e1}) * v_inv;
    }
  }
  return exp_taylor(m * (-kI * t));
}

}  // namespace nhq
