#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nhq/density.hpp"
#include "nhq/dynamics.hpp"
#include "nhq/eig.hpp"
#include "nhq/errors.hpp"
#include "nhq/expm.hpp"
#include "nhq/matrix.hpp"
#include "nhq/state.hpp"
#include "oracles.hpp"

namespace nhq {
namespace {

TEST(ComplexMatrix, RejectsUnsupportedDimensions) {
  EXPECT_THROW(ComplexMatrix(1), InvalidArgument);
  EXPECT_THROW(ComplexMatrix(4), InvalidArgument);
  EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), InvalidArgument);
}

TEST(ComplexMatrix, RejectsNonFiniteEntries) {
  const double nan = std::nan("");
  EXPECT_THROW((ComplexMatrix{{nan, 0.0}, {0.0, 1.0}}), InvalidArgument);
}

TEST(ComplexMatrix, ProductAndAdjoint) {
  const ComplexMatrix a{{1.0, kI}, {2.0, 3.0}};
  const ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix ab{{kI, 1.0}, {3.0, 2.0}};
  EXPECT_EQ(a * b, ab);
  EXPECT_EQ(a.adjoint()(0, 1), Complex(2.0));
  EXPECT_EQ(a.adjoint()(1, 0), -kI);
  EXPECT_EQ(a.trace(), Complex(4.0));
}

TEST(BasisKet, Ordering) {
  const StateVector e2 = basis_ket(Level::e, 2);
  EXPECT_EQ(e2[0], Complex(1.0));
  EXPECT_EQ(e2[1], Complex(0.0));
  const StateVector f3 = basis_ket(Level::f, 3);
  EXPECT_EQ(f3[0], Complex(0.0));
  EXPECT_EQ(f3[1], Complex(0.0));
  EXPECT_EQ(f3[2], Complex(1.0));
  EXPECT_THROW(basis_ket(Level::g, 2), InvalidArgument);
}

TEST(Pauli, Definitions) {
  EXPECT_EQ(pauli(Axis::z), (ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}));
  EXPECT_EQ(pauli(Axis::x), (ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}));
  EXPECT_EQ(pauli(Axis::y), (ComplexMatrix{{0.0, -kI}, {kI, 0.0}}));
  EXPECT_EQ(pauli(Axis::y) * pauli(Axis::y), ComplexMatrix::identity(2));
}

TEST(Pauli, ProductAlgebra) {
  const std::array<Axis, 3> axes{Axis::x, Axis::y, Axis::z};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      ComplexMatrix expected = a == b ? ComplexMatrix::identity(2) : ComplexMatrix(2);
      if (a != b) {
        const int c = 3 - a - b;
        const double eps = ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
        expected = kI * eps * pauli(axes[c]);
      }
      EXPECT_EQ(pauli(axes[a]) * pauli(axes[b]), expected) << a << b;
    }
  }
}

TEST(Pauli, EigenstatesMatchOperators) {
  for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
    for (int sign : {1, -1}) {
      const StateVector v = pauli_eigenstate(axis, sign);
      const StateVector pv = pauli(axis) * v;
      EXPECT_NEAR(std::abs(inner(v, pv) - Complex(sign)), 0.0, 1e-15);
    }
  }
  const StateVector py = pauli_eigenstate(Axis::y, 1);
  EXPECT_NEAR(std::abs(py[1] - kI / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(StateVector, NormalizationAndPhase) {
  const StateVector v = StateVector{Complex(0.0, 3.0), 4.0}.normalized();
  EXPECT_TRUE(v.is_normalized());
  const StateVector p = fix_phase(v);
  EXPECT_NEAR(p[0].imag(), 0.0, 1e-15);
  EXPECT_GT(p[0].real(), 0.0);
  EXPECT_THROW(StateVector(2).normalized(), NumericalError);
}

TEST(EigGeneral2x2, Diagonal) {
  const Eigen2 r = eig_general_2x2(ComplexMatrix::diagonal({2.0, -1.0}));
  EXPECT_EQ(r.values[0], Complex(2.0));
  EXPECT_EQ(r.values[1], Complex(-1.0));
  EXPECT_NEAR(std::abs(r.vectors[0][0] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.vectors[1][1] - 1.0), 0.0, 1e-15);
}

TEST(EigGeneral2x2, EffectiveHamiltonianWithDrive) {
  const SystemParams p{0.91, 0.0, 0.24, 0.0};
  const Eigen2 r = eig_general_2x2(build_effective_hamiltonian(p).matrix);
  // -i Gamma/4 +- sqrt(J^2 - Gamma^2/16)
  const double split = std::sqrt(0.24 * 0.24 - 0.91 * 0.91 / 16.0);
  EXPECT_NEAR(split, 0.07645, 1e-5);
  EXPECT_NEAR(std::abs(r.values[0] - Complex(split, -0.2275)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.values[1] - Complex(-split, -0.2275)), 0.0, 1e-14);
}

TEST(EigGeneral2x2, CoalesceAtExceptionalPoint) {
  const SystemParams p{0.91, 0.0, 0.91 / 4.0, 0.0};
  const ComplexMatrix h_pt = pt_decompose(build_effective_hamiltonian(p)).h_pt;
  const Eigen2 r = eig_general_2x2(h_pt);
  EXPECT_LT(std::abs(r.values[0]), 1e-8);
  EXPECT_LT(std::abs(r.values[1]), 1e-8);
  EXPECT_TRUE(r.defective());
  // The lone eigenvector is (|e> + i|f>)/sqrt2.
  const StateVector expected = pauli_eigenstate(Axis::y, 1);
  EXPECT_NEAR(std::abs(inner(expected, r.vectors[0])), 1.0, 1e-7);
}

TEST(EigGeneral2x2, ReconstructionOnRandomMatrices) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix m{{Complex(n(rng), n(rng)), Complex(n(rng), n(rng))},
                          {Complex(n(rng), n(rng)), Complex(n(rng), n(rng))}};
    const Eigen2 r = eig_general_2x2(m);
    if (r.defective()) continue;
    for (int k = 0; k < 2; ++k) {
      const StateVector residual = m * r.vectors[k] - r.values[k] * r.vectors[k];
      EXPECT_LT(residual.norm(), 1e-10);
      EXPECT_TRUE(r.vectors[k].is_normalized(1e-12));
    }
  }
}

TEST(EigHermitian, DiagonalDensity) {
  const ComplexMatrix rho = 0.5 * (ComplexMatrix::identity(2) + 0.6 * pauli(Axis::z));
  const HermitianEigen r = eig_hermitian(rho);
  EXPECT_NEAR(r.values[0], 0.2, 1e-15);
  EXPECT_NEAR(r.values[1], 0.8, 1e-15);
  EXPECT_NEAR(std::abs(r.vectors[0][1]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(r.vectors[1][0]), 1.0, 1e-15);
}

TEST(EigHermitian, IdentityGivesOrthonormalPair) {
  const HermitianEigen r = eig_hermitian(ComplexMatrix::identity(2));
  EXPECT_DOUBLE_EQ(r.values[0], 1.0);
  EXPECT_DOUBLE_EQ(r.values[1], 1.0);
  EXPECT_NEAR(std::abs(inner(r.vectors[0], r.vectors[1])), 0.0, 1e-15);
}

TEST(EigHermitian, RandomRoundTripAgainstEigen) {
  std::mt19937_64 rng(11);
  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix m = oracle::random_hermitian(rng, dim);
      const HermitianEigen r = eig_hermitian(m);
      ComplexMatrix rebuilt(dim);
      for (int k = 0; k < dim; ++k) rebuilt += r.values[k] * r.vectors[k].projector();
      EXPECT_LT(max_abs_diff(rebuilt, m), 1e-12);
      EXPECT_NEAR(r.values[0] + r.values[1] + (dim == 3 ? r.values[2] : 0.0), m.trace().real(),
                  1e-12);
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
          EXPECT_NEAR(std::abs(inner(r.vectors[a], r.vectors[b])), a == b ? 1.0 : 0.0, 1e-12);

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(oracle::to_eigen(m));
      for (int k = 0; k < dim; ++k) EXPECT_NEAR(r.values[k], ref.eigenvalues()(k), 1e-12);
    }
  }
}

TEST(EigHermitian, RejectsNonHermitian) {
  EXPECT_THROW(eig_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), InvalidArgument);
}

TEST(MatrixExponential, ZeroTimeIsIdentity) {
  const ComplexMatrix m{{1.0, kI}, {2.0, -3.0}};
  EXPECT_EQ(matrix_exponential(m, 0.0), ComplexMatrix::identity(2));
}

TEST(MatrixExponential, RabiHalfPeriod) {
  const double j = 0.37;
  const ComplexMatrix u = matrix_exponential(j * pauli(Axis::x), std::numbers::pi / (2.0 * j));
  EXPECT_LT(max_abs_diff(u, -kI * pauli(Axis::x)), 1e-14);
}

TEST(MatrixExponential, TaylorSeriesAtExceptionalPoint) {
  const SystemParams p{0.91, 0.0, 0.91 / 4.0, 0.0};
  const ComplexMatrix h = build_effective_hamiltonian(p).matrix;
  EXPECT_LT(max_abs_diff(matrix_exponential(h, 1.0), oracle::taylor_series(h, 1.0, 20)), 1e-10);
}

TEST(MatrixExponential, NearExceptionalPointAgreesWithEigen) {
  for (double dj : {-1e-6, -1e-9, 0.0, 1e-9, 1e-6, 1e-3}) {
    const SystemParams p{0.91, 0.0, 0.91 / 4.0 + dj, 0.0};
    const ComplexMatrix h = build_effective_hamiltonian(p).matrix;
    for (double t : {0.5, 3.0, 10.0}) {
      const ComplexMatrix ref = oracle::expm(h, t);
      EXPECT_LT(max_abs_diff(matrix_exponential(h, t), ref), 1e-12 * std::max(1.0, ref.norm_1()))
          << dj << " " << t;
    }
  }
}

TEST(MatrixExponential, RandomMatricesAgreeWithEigen) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      ComplexMatrix m(dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = Complex(n(rng), n(rng));
      const double t = 10.0 / std::max(1.0, m.norm_1()) * (trial % 5 + 1) / 5.0;
      const ComplexMatrix ref = oracle::expm(m, t);
      EXPECT_LT(max_abs_diff(matrix_exponential(m, t), ref), 1e-12 * std::max(1.0, ref.norm_1()));
    }
  }
}

TEST(MatrixExponential, HermitianGivesUnitary) {
  std::mt19937_64 rng(5);
  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexMatrix u = matrix_exponential(oracle::random_hermitian(rng, dim), 2.5);
      EXPECT_LT(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(dim)), 1e-10);
    }
  }
}

TEST(DensityMatrix, ValidatesInvariants) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}), InvalidArgument);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({1.2, -0.2})), InvalidArgument);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({0.7, 0.4})), InvalidArgument);
  EXPECT_THROW(DensityMatrix(ComplexMatrix(2)), InvalidArgument);
  EXPECT_NO_THROW(DensityMatrix(ComplexMatrix::diagonal({0.3, 0.2})));
}

TEST(Bloch, RoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector psi = oracle::random_ket(rng, 2);
    const BlochVector b = bloch_vector(DensityMatrix::pure(psi));
    EXPECT_NEAR(b.norm(), 1.0, 1e-12);
    for (Axis a : {Axis::x, Axis::y, Axis::z}) {
      const double expected = inner(psi, pauli(a) * psi).real();
      const double got = a == Axis::x ? b.x : (a == Axis::y ? b.y : b.z);
      EXPECT_NEAR(got, expected, 1e-12);
    }
    EXPECT_NEAR(density_from_bloch(b).fidelity(psi), 1.0, 1e-12);
  }
  EXPECT_THROW((BlochVector{1.0, 1.0, 0.0}.validate()), InvalidArgument);
}

}  // namespace
}  // namespace nhq
