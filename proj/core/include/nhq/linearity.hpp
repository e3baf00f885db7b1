#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nhq/density.hpp"
#include "nhq/measurement.hpp"
#include "nhq/params.hpp"
#include "nhq/state.hpp"

namespace nhq {

struct PurifyResult {
  StateVector ket;
  bool degenerate = false;  // eigenvalue gap below tol::kPurifyGap; ket is |e>
};

/// Eigenvector of the larger eigenvalue of a 2x2 density matrix.
PurifyResult purify(const DensityMatrix& rho_ef);

struct Superposition {
  StateVector state;  // (alpha a + beta b) / ||alpha a + beta b||
  double a_s;         // sqrt(|alpha|^2 + |beta|^2) / ||alpha a + beta b||
};

/// Normalized superposition plus the factor A_s that normalizes
/// A_s (alpha a + beta b) / sqrt(|alpha|^2 + |beta|^2). Throws NumericalError
/// when the combination cancels below tol::kSuperposeNorm.
Superposition superpose(const StateVector& a, const StateVector& b, Complex alpha, Complex beta);

/// |<b|a>| / (||a|| ||b||): 1 for identical rays, 0 for orthogonal ones.
double ofs(const StateVector& measured, const StateVector& superposed);

enum class InitialState { plus_x, plus_y };

std::string_view to_string(InitialState s);
InitialState parse_initial_state(std::string_view label);

enum class SimulationMode { ideal, measured };

std::string_view to_string(SimulationMode m);
SimulationMode parse_simulation_mode(std::string_view label);

/// Settings of the simulated experiment used in measured mode: Lindblad
/// evolution, tomography through `beta` with `shots` per axis, IBU, then
/// reconstruction and purification.
struct MeasuredPipeline {
  ConfusionMatrix beta = paper_beta();
  std::int64_t shots = 4096;
  std::uint64_t seed = 0;
  double integrator_dt = 1e-3;
  int ibu_iterations = kDefaultIbuIterations;
};

struct PureTrajectory {
  std::vector<double> times;
  std::vector<StateVector> kets;  // dimension 2, normalized
  std::string source;
};

/// Postselected kets from a 2-level initial state. Ideal mode propagates
/// with H_eff and keeps the dynamical phase. Measured mode purifies the
/// reconstructed state and takes the global phase of the ideal ket.
PureTrajectory pure_trajectory(const SystemParams& params, const StateVector& initial,
                               std::string source, const std::vector<double>& times,
                               SimulationMode mode = SimulationMode::ideal,
                               const MeasuredPipeline& pipeline = {});

struct LinearityScanResult {
  std::vector<double> times;
  std::vector<double> ofs;
  InitialState initial;
  double coupling;
  SimulationMode mode;
};

/// OFS between the trajectory from |+x> (or |+y>) and the superposition of
/// the |e> and |f> trajectories with weights (1, 1)/sqrt2 (or (1, i)/sqrt2).
LinearityScanResult linearity_scan(const SystemParams& params, InitialState initial,
                                   const std::vector<double>& times,
                                   SimulationMode mode = SimulationMode::ideal,
                                   const MeasuredPipeline& pipeline = {});

struct RenormRatioSeries {
  std::vector<double> times;
  std::vector<double> ratio;  // r_f / r_e with r = 1 / survival
  double time_average;        // arithmetic mean over the grid
};

RenormRatioSeries renorm_ratio_series(const SystemParams& params, const std::vector<double>& times);

enum class MixtureSystem { two_level_postselected, three_level_full };

std::string_view to_string(MixtureSystem s);

struct MixtureTestResult {
  std::vector<double> times;
  std::vector<double> p_mixture;     // P(e) of the 50/50 mixture
  std::vector<double> p_superposed;  // average of the |e> and |f> curves
  std::vector<double> deviation;     // |p_mixture - p_superposed|
  MixtureSystem system;
  /// Three-level only: largest deviation over P(g), P(e), P(f).
  std::vector<double> population_deviation;

  double max_deviation() const;
};

/// Postselected P(n)(e) of rho_e, rho_f and the mixture 1/2(|+x><+x| + |-x><-x|).
MixtureTestResult mixture_test_2level(const SystemParams& params, const std::vector<double>& times,
                                      SimulationMode mode = SimulationMode::ideal,
                                      const MeasuredPipeline& pipeline = {});

/// Un-postselected populations of the same preparations.
MixtureTestResult mixture_test_3level(const SystemParams& params, const std::vector<double>& times,
                                      SimulationMode mode = SimulationMode::ideal,
                                      const MeasuredPipeline& pipeline = {});

}  // namespace nhq
