#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nhq/dynamics.hpp"
#include "nhq/eig.hpp"
#include "nhq/errors.hpp"
#include "nhq/spectral.hpp"
#include "oracles.hpp"

namespace nhq {
namespace {

SystemParams device(double j) { return SystemParams{kDeviceGammaE, kDeviceGammaF, j, 0.0}; }

TEST(ClassifyRegime, PaperRegimes) {
  EXPECT_EQ(classify_regime(device(0.5)).regime, Regime::unbroken);
  EXPECT_EQ(classify_regime(device(0.1)).regime, Regime::broken);
  const RegimeReport ep = classify_regime(device(0.2275));
  EXPECT_EQ(ep.regime, Regime::exceptional_point);
  EXPECT_GT(ep.eigenvector_overlap, 0.999);
  EXPECT_NEAR(ep.j_ep, 0.2275, 1e-15);
}

TEST(ClassifyRegime, ImaginaryPartsPerRegime) {
  for (double j : {0.3, 0.6, 2.0}) {
    const RegimeReport r = classify_regime(device(j));
    EXPECT_NEAR(r.eigenvalues[0].imag(), -0.2275, 1e-12);
    EXPECT_NEAR(r.eigenvalues[1].imag(), -0.2275, 1e-12);
  }
  for (double j : {0.01, 0.1, 0.2}) {
    const RegimeReport r = classify_regime(device(j));
    EXPECT_NEAR(r.eigenvalues[0].real(), 0.0, 1e-12);
    EXPECT_NEAR(r.eigenvalues[1].real(), 0.0, 1e-12);
  }
}

TEST(ClassifyRegime, PassiveSpectrum) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const SystemParams p{u(rng), 0.0, u(rng), u(rng) - 1.0};
    const RegimeReport r = classify_regime(p);
    for (const Complex& l : r.eigenvalues) {
      EXPECT_LE(l.imag(), 1e-12);
      EXPECT_GE(l.imag(), -p.gamma_e / 2.0 - 1e-12);
    }
  }
}

TEST(ClassifyRegime, ScaleInvariant) {
  for (double j : {0.1, 0.2275, 0.3}) {
    for (double k : {0.5, 3.0}) {
      const SystemParams a{0.91, 0.0, j, 0.0};
      const SystemParams b{0.91 * k, 0.0, j * k, 0.0};
      EXPECT_EQ(classify_regime(a).regime, classify_regime(b).regime);
    }
  }
}

TEST(ClassifyRegime, HermitianIsUnbroken) {
  const RegimeReport r = classify_regime({0.0, 0.0, 0.4, 0.0});
  EXPECT_EQ(r.regime, Regime::unbroken);
  EXPECT_EQ(r.eigenvalues[0].imag(), 0.0);
}

TEST(EpCoupling, Values) {
  EXPECT_DOUBLE_EQ(ep_coupling(device(0.0)), 0.2275);
  EXPECT_DOUBLE_EQ(ep_coupling({0.0, 0.0, 0.0, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(ep_coupling({3 * 0.91, 0.0, 0.0, 0.0}), 3 * ep_coupling(device(0.0)));
}

TEST(FirstPassageTime, HermitianRabi) {
  for (double j : {0.1, 0.5, 1.0}) {
    const FptResult r = first_passage_time({0.0, 0.0, j, 0.0}, basis_ket(Level::e, 2), 40.0, 0.01);
    ASSERT_TRUE(r.fpt.has_value());
    EXPECT_NEAR(*r.fpt, std::numbers::pi / (2.0 * j), 1e-4);
    EXPECT_DOUBLE_EQ(r.hermitian_reference, std::numbers::pi / (2.0 * j));
  }
}

TEST(FirstPassageTime, AcceleratedAboveExceptionalPoint) {
  const FptResult r = first_passage_time(device(0.24), basis_ket(Level::e, 2), 20.0, 0.01);
  ASSERT_TRUE(r.fpt.has_value());
  EXPECT_NEAR(*r.fpt, oracle::analytic_fpt(0.91, 0.24), 1e-4);
  EXPECT_NEAR(r.hermitian_reference, 6.545, 1e-3);
}

TEST(FirstPassageTime, SingleTransferBelowExceptionalPoint) {
  // c_e(t) = cosh(kt) - (g/k) sinh(kt) still has one zero below the EP.
  const FptResult r = first_passage_time(device(0.15), basis_ket(Level::e, 2), 20.0, 0.01);
  ASSERT_TRUE(r.fpt.has_value());
  EXPECT_NEAR(*r.fpt, oracle::analytic_fpt(0.91, 0.15), 1e-4);
  EXPECT_NEAR(*r.fpt, 5.71, 0.01);
}

TEST(FirstPassageTime, AbsentWhenTransferIsBeyondHorizon) {
  EXPECT_GT(oracle::analytic_fpt(0.91, 0.003), 20.0);
  const FptResult r = first_passage_time(device(0.003), basis_ket(Level::e, 2), 20.0, 0.01);
  EXPECT_FALSE(r.fpt.has_value());
}

TEST(FirstPassageTime, ContinuousThroughExceptionalPoint) {
  const FptResult r = first_passage_time(device(0.2275), basis_ket(Level::e, 2), 20.0, 0.01);
  ASSERT_TRUE(r.fpt.has_value());
  EXPECT_NEAR(*r.fpt, 4.0 / 0.91, 1e-4);
}

TEST(FirstPassageTime, RejectsBadHorizon) {
  EXPECT_THROW(first_passage_time(device(0.3), basis_ket(Level::e, 2), 0.0, 0.01), InvalidArgument);
}

TEST(FptSweep, HermitianLimitAndMonotone) {
  std::vector<double> js;
  for (int i = 0; i <= 20; ++i) js.push_back(0.24 + 0.05 * i);
  js.push_back(5.0);
  const auto rows = fpt_sweep(device(0.0), js, basis_ket(Level::e, 2), 40.0, 0.005);
  ASSERT_EQ(rows.size(), js.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ASSERT_TRUE(rows[i].result.fpt.has_value()) << js[i];
    EXPECT_EQ(rows[i].coupling, js[i]);
    EXPECT_LT(*rows[i].result.fpt, rows[i].result.hermitian_reference);
    EXPECT_NEAR(*rows[i].result.fpt, oracle::analytic_fpt(0.91, js[i]), 1e-4);
    if (i > 0) EXPECT_LT(*rows[i].result.fpt, *rows[i - 1].result.fpt);
  }
  const double ratio = *rows.back().result.fpt / rows.back().result.hermitian_reference;
  EXPECT_GE(ratio, 0.95);
  EXPECT_LE(ratio, 1.0);
}

TEST(FptSweep, SlowsDownBelowExceptionalPoint) {
  const std::vector<double> js{0.05, 0.1, 0.15, 0.2};
  const auto rows = fpt_sweep(device(0.0), js, basis_ket(Level::e, 2), 20.0, 0.01);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ASSERT_TRUE(rows[i].result.fpt.has_value());
    EXPECT_NEAR(*rows[i].result.fpt, oracle::analytic_fpt(0.91, js[i]), 1e-4);
    if (i > 0) EXPECT_LT(*rows[i].result.fpt, *rows[i - 1].result.fpt);
  }
}

TEST(FptSweep, RejectsDescendingGrid) {
  EXPECT_THROW(fpt_sweep(device(0.0), {0.5, 0.3}, basis_ket(Level::e, 2), 20.0, 0.01), InvalidArgument);
  EXPECT_THROW(fpt_sweep(device(0.0), {}, basis_ket(Level::e, 2), 20.0, 0.01), InvalidArgument);
}

TEST(ExceptionalPoint, LoneEigenvectorIsPlusY) {
  const auto h_pt = pt_decompose(build_effective_hamiltonian(device(0.2275))).h_pt;
  const Eigen2 r = eig_general_2x2(h_pt);
  const StateVector expected{1.0 / std::sqrt(2.0), kI / std::sqrt(2.0)};
  EXPECT_NEAR(std::abs(inner(expected, r.vectors[0])), 1.0, 1e-7);
  EXPECT_NEAR(std::abs(inner(expected, r.vectors[1])), 1.0, 1e-7);
}

}  // namespace
}  // namespace nhq
