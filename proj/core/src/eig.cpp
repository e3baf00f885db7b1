#include "nhq/eig.hpp"

#include <algorithm>
#include <cmath>

#include "nhq/errors.hpp"

namespace nhq {

namespace {

constexpr int kMaxJacobiSweeps = 64;

// Eigenvector of the 2x2 matrix for eigenvalue lambda, taken from whichever
// row of (M - lambda) gives the better-conditioned null vector.
StateVector null_vector_2x2(const ComplexMatrix& m, Complex lambda, int fallback_index) {
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const StateVector from_row0{b, lambda - a};
  const StateVector from_row1{lambda - d, c};
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d), 1e-300});
  const StateVector& best = from_row0.norm2() >= from_row1.norm2() ? from_row0 : from_row1;
  if (best.norm() <= 1e-14 * scale) {
    // M is a multiple of the identity: every vector is an eigenvector.
    StateVector e(2);
    e[fallback_index] = 1.0;
    return e;
  }
  return fix_phase(best.normalized());
}

}  // namespace

double Eigen2::overlap() const {
  return std::min(1.0, std::abs(inner(vectors[0], vectors[1])));
}

Eigen2 eig_general_2x2(const ComplexMatrix& m) {
  if (m.dim() != 2) throw InvalidArgument("eig_general_2x2 expects a 2x2 matrix");
  const Complex half_trace = 0.5 * (m(0, 0) + m(1, 1));
  const Complex half_diff = 0.5 * (m(0, 0) - m(1, 1));
  const Complex s = std::sqrt(half_diff * half_diff + m(0, 1) * m(1, 0));
  const Complex l0 = half_trace + s;
  const Complex l1 = half_trace - s;
  return Eigen2{{l0, l1}, {null_vector_2x2(m, l0, 0), null_vector_2x2(m, l1, 1)}};
}

HermitianEigen eig_hermitian(const ComplexMatrix& input) {
  if (!input.is_hermitian(tol::kHermitianInput)) {
    throw InvalidArgument("eig_hermitian: matrix is not Hermitian");
  }
  const int n = input.dim();
  ComplexMatrix a = 0.5 * (input + input.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&] {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
  };
  const double threshold = tol::kJacobiOffDiagonal * std::max(1.0, a.frobenius_norm());

  for (int sweep = 0; sweep < kMaxJacobiSweeps && off_norm() >= threshold; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const Complex phase = a(p, q) / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;

        ComplexMatrix rot = ComplexMatrix::identity(n);
        rot(p, p) = cs;
        rot(q, q) = cs;
        rot(p, q) = sn * phase;
        rot(q, p) = -sn * std::conj(phase);

        a = rot.adjoint() * a * rot;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * rot;
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.begin() + n,
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out{n, {0.0, 0.0, 0.0}, {StateVector(n), StateVector(n), StateVector(n)}};
  for (int k = 0; k < n; ++k) {
    const int col = order[k];
    out.values[k] = a(col, col).real();
    StateVector vec(n);
    for (int i = 0; i < n; ++i) vec[i] = v(i, col);
    out.vectors[k] = fix_phase(vec);
  }
  return out;
}

}  // namespace nhq
