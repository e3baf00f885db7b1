#include "nhq/trajectory.hpp"

#include <cmath>

#include "nhq/errors.hpp"
#include "nhq/expm.hpp"
#include "nhq/grid.hpp"
#include "nhq/random.hpp"

namespace nhq {

namespace {

constexpr int kBisectionSteps = 60;

class JumpSampler {
 public:
  JumpSampler(const LindbladModel& model, double dt, std::uint64_t seed)
      : model_(model),
        generator_(model.no_jump_generator()),
        step_propagator_(matrix_exponential(generator_, dt)),
        dt_(dt),
        rng_(seed) {
    threshold_ = draw_threshold();
  }

  // Advances phi from `start` to `end`, applying every jump on the way.
  void advance(StateVector& phi, double start, double end, std::vector<JumpEvent>& jumps) {
    double now = start;
    while (now < end) {
      const double span = end - now;
      const StateVector candidate = propagate(phi, span);
      if (candidate.norm2() > threshold_) {
        phi = candidate;
        return;
      }
      // The squared norm is non-increasing, so bisect for the crossing.
      double lo = 0.0;
      double hi = span;
      for (int i = 0; i < kBisectionSteps && hi - lo > 1e-15 * (1.0 + now); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (propagate(phi, mid).norm2() > threshold_) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      const StateVector at_jump = propagate(phi, hi);
      now += hi;
      const std::size_t channel = choose_channel(at_jump);
      const Dissipator& d = model_.dissipators()[channel];
      phi = (d.jump_operator * at_jump).normalized();
      jumps.push_back(JumpEvent{std::min(now, end), channel, d.populates_ground()});
      threshold_ = draw_threshold();
    }
  }

 private:
  StateVector propagate(const StateVector& phi, double span) const {
    // Grid spacings differ from dt by rounding only.
    if (std::abs(span - dt_) <= 1e-12 * dt_) return step_propagator_ * phi;
    return matrix_exponential(generator_, span) * phi;
  }

  std::size_t choose_channel(const StateVector& phi) {
    const auto& ds = model_.dissipators();
    std::vector<double> weights(ds.size());
    double total = 0.0;
    for (std::size_t j = 0; j < ds.size(); ++j) {
      weights[j] = (ds[j].jump_operator * phi).norm2();
      total += weights[j];
    }
    if (!(total > 0.0)) throw NumericalError("jump requested with zero total jump rate");
    double u = rng_.uniform() * total;
    for (std::size_t j = 0; j < ds.size(); ++j) {
      if (u < weights[j]) return j;
      u -= weights[j];
    }
    // Rounding left u at the top of the range: take the last nonzero channel.
    for (std::size_t j = ds.size(); j-- > 0;)
      if (weights[j] > 0.0) return j;
    return 0;
  }

  double draw_threshold() { return 1.0 - rng_.uniform(); }

  const LindbladModel& model_;
  ComplexMatrix generator_;
  ComplexMatrix step_propagator_;
  double dt_;
  Rng rng_;
  double threshold_ = 1.0;
};

}  // namespace

double TrajectoryRecord::first_ground_jump() const {
  for (const auto& j : jumps)
    if (j.to_ground) return j.time;
  return std::numeric_limits<double>::infinity();
}

TrajectoryRecord sample_jump_trajectory(const StateVector& psi0, const LindbladModel& model,
                                        double horizon, double dt, std::uint64_t seed,
                                        int record_stride) {
  if (psi0.dim() != model.dim()) throw InvalidArgument("sample_jump_trajectory: dimension mismatch");
  if (!psi0.is_normalized(1e-10)) throw InvalidArgument("sample_jump_trajectory: psi0 not normalized");
  if (record_stride < 1) throw InvalidArgument("record_stride must be >= 1");
  const std::vector<double> grid = uniform_grid(horizon, dt);

  JumpSampler sampler(model, dt, seed);
  TrajectoryRecord rec;
  StateVector phi = psi0;
  rec.times.push_back(grid[0]);
  rec.states.push_back(phi);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    sampler.advance(phi, grid[k - 1], grid[k], rec.jumps);
    if (k % static_cast<std::size_t>(record_stride) == 0 || k + 1 == grid.size()) {
      rec.times.push_back(grid[k]);
      rec.states.push_back(phi.normalized());
    }
  }
  rec.postselected = !std::isfinite(rec.first_ground_jump());
  return rec;
}

BlochVector ef_bloch(const StateVector& psi3) {
  if (psi3.dim() != 3) throw InvalidArgument("ef_bloch expects a qutrit ket");
  const Complex ce = psi3[1];
  const Complex cf = psi3[2];
  const double n = std::norm(ce) + std::norm(cf);
  if (!(n > 0.0)) throw NumericalError("ef_bloch: ket has no (e, f) component");
  const Complex cross = std::conj(ce) * cf;
  return BlochVector{2.0 * cross.real() / n, 2.0 * cross.imag() / n,
                     (std::norm(ce) - std::norm(cf)) / n};
}

double EnsembleStatistics::success_rate() const {
  if (trajectories == 0) return 0.0;
  std::size_t kept = 0;
  for (const auto& s : summaries) kept += s.postselected ? 1 : 0;
  return static_cast<double>(kept) / static_cast<double>(trajectories);
}

EnsembleStatistics run_jump_ensemble(const StateVector& psi0, const LindbladModel& model,
                                     double horizon, double dt, std::uint64_t seed,
                                     std::size_t count, int record_stride) {
  if (count == 0) throw InvalidArgument("run_jump_ensemble: count must be > 0");
  const int n = model.dim();
  EnsembleStatistics stats;
  stats.trajectories = count;

  std::vector<ComplexMatrix> sum_re_sq;
  std::vector<ComplexMatrix> sum;  // re and im accumulated together
  std::vector<std::array<double, 3>> bloch_sum;
  std::vector<std::array<double, 3>> bloch_sq;

  for (std::size_t i = 0; i < count; ++i) {
    const TrajectoryRecord rec =
        sample_jump_trajectory(psi0, model, horizon, dt, derive_seed(seed, i), record_stride);
    if (i == 0) {
      stats.times = rec.times;
      const std::size_t m = rec.times.size();
      sum.assign(m, ComplexMatrix(n));
      sum_re_sq.assign(m, ComplexMatrix(n));
      stats.surviving.assign(m, 0);
      bloch_sum.assign(m, {0.0, 0.0, 0.0});
      bloch_sq.assign(m, {0.0, 0.0, 0.0});
    }
    const double ground_jump = rec.first_ground_jump();
    for (std::size_t k = 0; k < rec.times.size(); ++k) {
      const ComplexMatrix p = rec.states[k].projector();
      sum[k] += p;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const Complex z = p(a, b);
          sum_re_sq[k](a, b) += Complex(z.real() * z.real(), z.imag() * z.imag());
        }
      if (n == 3 && ground_jump > rec.times[k]) {
        const BlochVector bv = ef_bloch(rec.states[k]);
        const std::array<double, 3> c{bv.x, bv.y, bv.z};
        ++stats.surviving[k];
        for (int a = 0; a < 3; ++a) {
          bloch_sum[k][a] += c[a];
          bloch_sq[k][a] += c[a] * c[a];
        }
      }
    }
    stats.summaries.push_back(TrajectorySummary{i, rec.postselected, rec.jumps.size()});
  }

  const double total = static_cast<double>(count);
  auto stderr_of = [](double s, double s2, double m) {
    if (m < 2.0) return 0.0;
    const double mean = s / m;
    const double var = std::max(0.0, (s2 - m * mean * mean) / (m - 1.0));
    return std::sqrt(var / m);
  };
  for (std::size_t k = 0; k < stats.times.size(); ++k) {
    ComplexMatrix mean = sum[k] * (1.0 / total);
    ComplexMatrix err(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        err(a, b) = Complex(stderr_of(sum[k](a, b).real(), sum_re_sq[k](a, b).real(), total),
                            stderr_of(sum[k](a, b).imag(), sum_re_sq[k](a, b).imag(), total));
      }
    stats.mean_density.push_back(mean);
    stats.density_stderr.push_back(err);

    const double kept = static_cast<double>(stats.surviving[k]);
    if (kept > 0.0) {
      stats.conditioned_bloch.push_back(
          BlochVector{bloch_sum[k][0] / kept, bloch_sum[k][1] / kept, bloch_sum[k][2] / kept});
    } else {
      stats.conditioned_bloch.push_back(BlochVector{});
    }
    stats.conditioned_stderr.push_back({stderr_of(bloch_sum[k][0], bloch_sq[k][0], kept),
                                        stderr_of(bloch_sum[k][1], bloch_sq[k][1], kept),
                                        stderr_of(bloch_sum[k][2], bloch_sq[k][2], kept)});
  }
  return stats;
}

}  // namespace nhq
