#include "nhq/linearity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nhq/dynamics.hpp"
#include "nhq/eig.hpp"
#include "nhq/errors.hpp"
#include "nhq/random.hpp"
#include "nhq/tolerances.hpp"

namespace nhq {

namespace {

void check_grid(const std::vector<double>& times) {
  if (times.empty()) throw InvalidArgument("time grid must be nonempty");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
      throw InvalidArgument("time grid must be strictly increasing and >= 0");
    }
  }
}

std::pair<Complex, Complex> superposition_weights(InitialState s) {
  const double r = 1.0 / std::sqrt(2.0);
  if (s == InitialState::plus_x) return {r, r};
  return {r, r * kI};
}

// Stream ids for the simulated preparations.
enum Preparation : std::uint64_t { kPrepE = 0, kPrepF = 1, kPrepPlusX = 2, kPrepPlusY = 3, kPrepMinusX = 4 };

std::uint64_t prep_stream(const StateVector& ket) {
  const auto close = [&](const StateVector& ref) { return std::abs(std::abs(inner(ref, ket)) - 1.0) < 1e-12; };
  if (close(basis_ket(Level::e, 2))) return kPrepE;
  if (close(basis_ket(Level::f, 2))) return kPrepF;
  if (close(pauli_eigenstate(Axis::x, 1))) return kPrepPlusX;
  if (close(pauli_eigenstate(Axis::y, 1))) return kPrepPlusY;
  if (close(pauli_eigenstate(Axis::x, -1))) return kPrepMinusX;
  return 16;
}

std::vector<DensityMatrix> evolve_preparation(const SystemParams& params, const StateVector& ket2,
                                              const std::vector<double>& times, double dt) {
  const LindbladModel model = build_three_level_model(params);
  return evolve_lindblad_on_grid(DensityMatrix::pure(embed_ef(ket2)), model, times, dt);
}

DensityMatrix unit_trace(const DensityMatrix& rho) {
  return DensityMatrix(rho.matrix() * (1.0 / rho.trace()));
}

}  // namespace

PurifyResult purify(const DensityMatrix& rho_ef) {
  if (rho_ef.dim() != 2) throw InvalidArgument("purify expects a 2x2 density matrix");
  const HermitianEigen eig = eig_hermitian(rho_ef.matrix());
  if (eig.values[1] - eig.values[0] < tol::kPurifyGap) {
    return PurifyResult{basis_ket(Level::e, 2), true};
  }
  return PurifyResult{eig.vectors[1], false};
}

Superposition superpose(const StateVector& a, const StateVector& b, Complex alpha, Complex beta) {
  const StateVector sum = alpha * a + beta * b;
  const double n = sum.norm();
  if (!(n > tol::kSuperposeNorm)) {
    throw NumericalError("superpose: the superposition cancels to zero");
  }
  const double weight = std::sqrt(std::norm(alpha) + std::norm(beta));
  return Superposition{sum * (1.0 / n), weight / n};
}

double ofs(const StateVector& measured, const StateVector& superposed) {
  const double norms = measured.norm() * superposed.norm();
  if (!(norms > 0.0)) throw InvalidArgument("ofs: states must be nonzero");
  return std::min(1.0, std::abs(inner(superposed, measured)) / norms);
}

std::string_view to_string(InitialState s) { return s == InitialState::plus_x ? "+x" : "+y"; }

InitialState parse_initial_state(std::string_view label) {
  if (label == "+x" || label == "x") return InitialState::plus_x;
  if (label == "+y" || label == "y") return InitialState::plus_y;
  throw InvalidArgument("unknown initial state '" + std::string(label) + "' (expected +x or +y)");
}

std::string_view to_string(SimulationMode m) { return m == SimulationMode::ideal ? "ideal" : "measured"; }

SimulationMode parse_simulation_mode(std::string_view label) {
  if (label == "ideal") return SimulationMode::ideal;
  if (label == "measured") return SimulationMode::measured;
  throw InvalidArgument("unknown mode '" + std::string(label) + "' (expected ideal or measured)");
}

std::string_view to_string(MixtureSystem s) {
  return s == MixtureSystem::two_level_postselected ? "2lvl" : "3lvl";
}

PureTrajectory pure_trajectory(const SystemParams& params, const StateVector& initial,
                               std::string source, const std::vector<double>& times,
                               SimulationMode mode, const MeasuredPipeline& pipeline) {
  check_grid(times);
  const EffectiveHamiltonian h = build_effective_hamiltonian(params);
  PureTrajectory out{times, {}, std::move(source)};
  out.kets.reserve(times.size());
  for (double t : times) out.kets.push_back(propagate_nonhermitian(initial, h, t).state);
  if (mode == SimulationMode::ideal) return out;

  const std::vector<DensityMatrix> states =
      evolve_preparation(params, initial, times, pipeline.integrator_dt);
  const std::uint64_t stream = derive_seed(pipeline.seed, prep_stream(initial));
  for (std::size_t k = 0; k < times.size(); ++k) {
    const TomographyResult tomo = run_tomography(unit_trace(states[k]), pipeline.beta, pipeline.shots,
                                                 derive_seed(stream, k), pipeline.ibu_iterations);
    StateVector ket = purify(tomo.rho_ef).ket;
    const Complex overlap = inner(ket, out.kets[k]);
    if (std::abs(overlap) > 0.0) ket *= overlap / std::abs(overlap);
    out.kets[k] = ket;
  }
  return out;
}

LinearityScanResult linearity_scan(const SystemParams& params, InitialState initial,
                                   const std::vector<double>& times, SimulationMode mode,
                                   const MeasuredPipeline& pipeline) {
  check_grid(times);
  const auto [alpha, beta] = superposition_weights(initial);
  const StateVector e = basis_ket(Level::e, 2);
  const StateVector f = basis_ket(Level::f, 2);
  const StateVector theta = alpha * e + beta * f;

  const PureTrajectory from_theta =
      pure_trajectory(params, theta, std::string(to_string(initial)), times, mode, pipeline);
  const PureTrajectory from_e = pure_trajectory(params, e, "e", times, mode, pipeline);
  const PureTrajectory from_f = pure_trajectory(params, f, "f", times, mode, pipeline);

  LinearityScanResult out{times, {}, initial, params.coupling, mode};
  out.ofs.reserve(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const Superposition s = superpose(from_e.kets[k], from_f.kets[k], alpha, beta);
    out.ofs.push_back(ofs(from_theta.kets[k], s.state));
  }
  return out;
}

RenormRatioSeries renorm_ratio_series(const SystemParams& params, const std::vector<double>& times) {
  check_grid(times);
  const EffectiveHamiltonian h = build_effective_hamiltonian(params);
  const StateVector e = basis_ket(Level::e, 2);
  const StateVector f = basis_ket(Level::f, 2);
  RenormRatioSeries out{times, {}, 0.0};
  out.ratio.reserve(times.size());
  for (double t : times) {
    // r_i = 1 / survival_i, so r_f / r_e = survival_e / survival_f.
    const double survival_e = propagate_nonhermitian(e, h, t).survival;
    const double survival_f = propagate_nonhermitian(f, h, t).survival;
    out.ratio.push_back(survival_e / survival_f);
  }
  out.time_average = std::accumulate(out.ratio.begin(), out.ratio.end(), 0.0) /
                     static_cast<double>(out.ratio.size());
  return out;
}

double MixtureTestResult::max_deviation() const {
  double best = 0.0;
  for (double d : deviation) best = std::max(best, d);
  for (double d : population_deviation) best = std::max(best, d);
  return best;
}

namespace {

struct MixturePreparations {
  std::vector<DensityMatrix> e, f, plus_x, minus_x;
};

MixturePreparations evolve_mixture_preparations(const SystemParams& params,
                                                const std::vector<double>& times, double dt) {
  return MixturePreparations{
      evolve_preparation(params, basis_ket(Level::e, 2), times, dt),
      evolve_preparation(params, basis_ket(Level::f, 2), times, dt),
      evolve_preparation(params, pauli_eigenstate(Axis::x, 1), times, dt),
      evolve_preparation(params, pauli_eigenstate(Axis::x, -1), times, dt),
  };
}

// IBU-corrected Z-axis populations (g, e, f) of each preparation at time k;
// the mixture pools half the shots from |+x> and half from |-x>.
struct CorrectedPopulations {
  ProbabilityVector e, f, mixture;
};

CorrectedPopulations measure_populations(const MixturePreparations& preps, std::size_t k,
                                         const MeasuredPipeline& pipeline) {
  auto seed_for = [&](std::uint64_t prep) {
    return derive_seed(derive_seed(derive_seed(pipeline.seed, prep), k), 2);
  };
  auto measure = [&](const DensityMatrix& rho, std::uint64_t prep, std::int64_t shots) {
    return simulate_tomography(unit_trace(rho), Axis::z, pipeline.beta, shots, seed_for(prep));
  };
  auto correct = [&](const CountsRecord& rec) {
    return ibu_correct(rec.frequencies(), pipeline.beta, pipeline.ibu_iterations);
  };

  const CountsRecord rec_e = measure(preps.e[k], kPrepE, pipeline.shots);
  const CountsRecord rec_f = measure(preps.f[k], kPrepF, pipeline.shots);
  const std::int64_t half = pipeline.shots / 2;
  const CountsRecord rec_p = measure(preps.plus_x[k], kPrepPlusX, half);
  const CountsRecord rec_m = measure(preps.minus_x[k], kPrepMinusX, pipeline.shots - half);

  CountsRecord pooled;
  pooled.axis = Axis::z;
  pooled.shots = pipeline.shots;
  if (pipeline.shots == 0) {
    pooled.exact = true;
    for (int i = 0; i < 3; ++i) {
      pooled.exact_probabilities[i] =
          0.5 * (rec_p.exact_probabilities[i] + rec_m.exact_probabilities[i]);
    }
  } else {
    for (int i = 0; i < 3; ++i) pooled.counts[i] = rec_p.counts[i] + rec_m.counts[i];
  }
  return CorrectedPopulations{correct(rec_e), correct(rec_f), correct(pooled)};
}

MixtureTestResult make_result(const std::vector<double>& times, MixtureSystem system) {
  MixtureTestResult r;
  r.times = times;
  r.system = system;
  return r;
}

void push_point(MixtureTestResult& r, double mixture, double superposed) {
  r.p_mixture.push_back(mixture);
  r.p_superposed.push_back(superposed);
  r.deviation.push_back(std::abs(mixture - superposed));
}

}  // namespace

MixtureTestResult mixture_test_2level(const SystemParams& params, const std::vector<double>& times,
                                      SimulationMode mode, const MeasuredPipeline& pipeline) {
  check_grid(times);
  const MixturePreparations preps = evolve_mixture_preparations(params, times, pipeline.integrator_dt);
  MixtureTestResult r = make_result(times, MixtureSystem::two_level_postselected);

  for (std::size_t k = 0; k < times.size(); ++k) {
    if (mode == SimulationMode::ideal) {
      auto p_e = [](const DensityMatrix& rho3) { return conditional_ef_state(rho3).rho_ef.population(0); };
      // 1/2 |+x><+x| + 1/2 |-x><-x| is exactly the half-identity block.
      const DensityMatrix mixture(0.5 * (preps.plus_x[k].matrix() + preps.minus_x[k].matrix()));
      push_point(r, p_e(mixture), 0.5 * (p_e(preps.e[k]) + p_e(preps.f[k])));
    } else {
      const CorrectedPopulations pops = measure_populations(preps, k, pipeline);
      auto p_e = [](const ProbabilityVector& p) { return renormalize_subensemble(p).plus; };
      push_point(r, p_e(pops.mixture), 0.5 * (p_e(pops.e) + p_e(pops.f)));
    }
  }
  return r;
}

MixtureTestResult mixture_test_3level(const SystemParams& params, const std::vector<double>& times,
                                      SimulationMode mode, const MeasuredPipeline& pipeline) {
  check_grid(times);
  const MixturePreparations preps = evolve_mixture_preparations(params, times, pipeline.integrator_dt);
  MixtureTestResult r = make_result(times, MixtureSystem::three_level_full);

  for (std::size_t k = 0; k < times.size(); ++k) {
    std::array<double, 3> mixture{}, superposed{};
    if (mode == SimulationMode::ideal) {
      for (int i = 0; i < 3; ++i) {
        mixture[i] = 0.5 * (preps.plus_x[k].population(i) + preps.minus_x[k].population(i));
        superposed[i] = 0.5 * (preps.e[k].population(i) + preps.f[k].population(i));
      }
    } else {
      const CorrectedPopulations pops = measure_populations(preps, k, pipeline);
      const DensityMatrix rho_m = reconstruct_diag3(pops.mixture);
      const DensityMatrix rho_e = reconstruct_diag3(pops.e);
      const DensityMatrix rho_f = reconstruct_diag3(pops.f);
      for (int i = 0; i < 3; ++i) {
        mixture[i] = rho_m.population(i);
        superposed[i] = 0.5 * (rho_e.population(i) + rho_f.population(i));
      }
    }
    push_point(r, mixture[1], superposed[1]);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(mixture[i] - superposed[i]));
    r.population_deviation.push_back(worst);
  }
  return r;
}

}  // namespace nhq
