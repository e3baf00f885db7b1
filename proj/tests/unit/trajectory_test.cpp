#include <gtest/gtest.h>

#include <cmath>

#include "nhq/dynamics.hpp"
#include "nhq/errors.hpp"
#include "nhq/random.hpp"
#include "nhq/trajectory.hpp"

namespace nhq {
namespace {

TEST(SplitMix, KnownValues) {
  // Reference outputs of the SplitMix64 generator seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Rng, UniformRange) {
  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(JumpTrajectory, LosslessNeverJumps) {
  const LindbladModel m = build_three_level_model({0.0, 0.0, 0.5, 0.0});
  const TrajectoryRecord r = sample_jump_trajectory(basis_ket(Level::e, 3), m, 5.0, 0.01, 42);
  EXPECT_TRUE(r.jumps.empty());
  EXPECT_TRUE(r.postselected);
  EXPECT_EQ(r.times.size(), 501u);
  for (const auto& s : r.states) EXPECT_TRUE(s.is_normalized(1e-10));
}

TEST(JumpTrajectory, DeterministicInSeed) {
  const LindbladModel m = build_three_level_model({0.91, 0.057, 0.24, 0.0});
  const auto a = sample_jump_trajectory(basis_ket(Level::e, 3), m, 6.0, 0.05, 7);
  const auto b = sample_jump_trajectory(basis_ket(Level::e, 3), m, 6.0, 0.05, 7);
  ASSERT_EQ(a.jumps.size(), b.jumps.size());
  for (std::size_t i = 0; i < a.jumps.size(); ++i) EXPECT_EQ(a.jumps[i].time, b.jumps[i].time);
  for (std::size_t k = 0; k < a.states.size(); ++k) {
    for (int i = 0; i < 3; ++i) EXPECT_EQ(a.states[k][i], b.states[k][i]);
  }
}

TEST(JumpTrajectory, JumpsSortedWithinHorizon) {
  const LindbladModel m = build_three_level_model({0.91, 0.5, 0.3, 0.0});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = sample_jump_trajectory(basis_ket(Level::f, 3), m, 8.0, 0.1, seed);
    for (std::size_t i = 0; i < r.jumps.size(); ++i) {
      EXPECT_GE(r.jumps[i].time, 0.0);
      EXPECT_LE(r.jumps[i].time, 8.0);
      if (i > 0) EXPECT_LE(r.jumps[i - 1].time, r.jumps[i].time);
    }
    EXPECT_EQ(r.postselected, !std::isfinite(r.first_ground_jump()));
  }
}

TEST(JumpTrajectory, RecordStride) {
  const LindbladModel m = build_three_level_model({0.91, 0.057, 0.24, 0.0});
  const auto r = sample_jump_trajectory(basis_ket(Level::e, 3), m, 1.0, 0.1, 1, 3);
  const std::vector<double> expected{0.0, 0.3, 0.6, 0.9, 1.0};
  ASSERT_EQ(r.times.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(r.times[k], expected[k], 1e-12);
  EXPECT_THROW(sample_jump_trajectory(basis_ket(Level::e, 3), m, 1.0, 0.1, 1, 0), InvalidArgument);
}

TEST(JumpEnsemble, PoissonDecay) {
  const double gamma = 0.91;
  const double horizon = 1.5;
  const LindbladModel m = build_three_level_model({gamma, 0.0, 0.0, 0.0});
  const std::size_t n = 10000;
  const EnsembleStatistics s = run_jump_ensemble(basis_ket(Level::e, 3), m, horizon, 0.5, 2024, n);
  const double p = std::exp(-gamma * horizon);
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  EXPECT_NEAR(s.success_rate(), p, 3.0 * sigma);
  EXPECT_EQ(s.surviving.front(), n);
}

TEST(JumpEnsemble, MeanMatchesLindblad) {
  const SystemParams params{0.91, 0.057, 0.24, 0.0};
  const LindbladModel m = build_three_level_model(params);
  const DensityMatrix rho0 = DensityMatrix::pure(basis_ket(Level::e, 3));
  const EnsembleStatistics s = run_jump_ensemble(basis_ket(Level::e, 3), m, 6.0, 0.1, 5, 2000, 10);
  const auto exact = evolve_lindblad_on_grid(rho0, m, s.times, 1e-3);
  for (std::size_t k = 0; k < s.times.size(); ++k) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const Complex d = s.mean_density[k](a, b) - exact[k].matrix()(a, b);
        const Complex e = s.density_stderr[k](a, b);
        EXPECT_LE(std::abs(d.real()), 4.0 * e.real() + 1e-9) << k << a << b;
        EXPECT_LE(std::abs(d.imag()), 4.0 * e.imag() + 1e-9) << k << a << b;
      }
  }
}

TEST(EfBloch, Basis) {
  const BlochVector e = ef_bloch(basis_ket(Level::e, 3));
  EXPECT_DOUBLE_EQ(e.z, 1.0);
  const BlochVector py = ef_bloch(embed_ef(pauli_eigenstate(Axis::y, 1)));
  EXPECT_NEAR(py.y, 1.0, 1e-15);
  EXPECT_THROW(ef_bloch(basis_ket(Level::g, 3)), NumericalError);
}

}  // namespace
}  // namespace nhq
