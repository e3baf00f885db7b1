#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "nhq/density.hpp"
#include "nhq/dynamics.hpp"
#include "nhq/state.hpp"

namespace nhq {

struct JumpEvent {
  double time;
  std::size_t channel;  // index into LindbladModel::dissipators()
  bool to_ground;       // the jump left the (e, f) manifold
};

/// One Monte Carlo wavefunction trajectory.
struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<StateVector> states;  // normalized conditional kets at `times`
  std::vector<JumpEvent> jumps;     // sorted by time
  bool postselected = true;         // no jump into |g> within the horizon

  /// Time of the first jump into |g>, +inf if there is none.
  double first_ground_jump() const;
};

/// Samples a quantum-jump trajectory with the waiting-time method: the
/// unnormalized ket evolves under H - (i/2) sum L^dag L until its squared
/// norm falls below a uniform threshold; the crossing time is located by
/// bisection, a channel is drawn with weight ||L_j psi||^2, the ket is reset
/// to L_j psi / ||L_j psi|| and a fresh threshold is drawn.
///
/// States are recorded on the grid 0, dt, 2 dt, ..., horizon, keeping every
/// `record_stride`-th point plus the final one. Deterministic in `seed`.
TrajectoryRecord sample_jump_trajectory(const StateVector& psi0, const LindbladModel& model,
                                        double horizon, double dt, std::uint64_t seed,
                                        int record_stride = 1);

struct TrajectorySummary {
  std::size_t id;
  bool postselected;
  std::size_t jump_count;
};

/// Ensemble averages of `count` trajectories. Trajectory i uses
/// derive_seed(seed, i) and results are reduced in index order.
struct EnsembleStatistics {
  std::vector<double> times;
  std::size_t trajectories = 0;

  /// Mean of |psi><psi| and the standard error of the real and imaginary
  /// part of each element (stored as re + i im).
  std::vector<ComplexMatrix> mean_density;
  std::vector<ComplexMatrix> density_stderr;

  /// Trajectories with no jump into |g> up to each time, and the mean and
  /// standard error of their (e, f) Bloch vectors.
  std::vector<std::size_t> surviving;
  std::vector<BlochVector> conditioned_bloch;
  std::vector<std::array<double, 3>> conditioned_stderr;

  std::vector<TrajectorySummary> summaries;

  /// Fraction of trajectories postselected over the whole horizon.
  double success_rate() const;
};

EnsembleStatistics run_jump_ensemble(const StateVector& psi0, const LindbladModel& model,
                                     double horizon, double dt, std::uint64_t seed,
                                     std::size_t count, int record_stride = 1);

/// Bloch vector of a qutrit ket with no |g> amplitude, normalized on (e, f).
BlochVector ef_bloch(const StateVector& psi3);

}  // namespace nhq
