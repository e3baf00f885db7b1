#include "nhq/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "nhq/errors.hpp"
#include "nhq/random.hpp"

namespace nhq {

namespace {

constexpr double kNegativeSlack = 1e-12;

}  // namespace

ProbabilityVector::ProbabilityVector(const std::array<double, 3>& p) : p_(p) {
  double sum = 0.0;
  for (double& v : p_) {
    if (!std::isfinite(v) || v < -kNegativeSlack) {
      throw InvalidArgument("probability entries must be finite and nonnegative");
    }
    v = std::max(v, 0.0);
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol::kSimplex) {
    throw InvalidArgument("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

ProbabilityVector ProbabilityVector::uniform() {
  return ProbabilityVector(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
}

ProbabilityVector ProbabilityVector::normalized(const std::array<double, 3>& weights) {
  std::array<double, 3> w = weights;
  double sum = 0.0;
  for (double& v : w) {
    if (!std::isfinite(v) || v < -kNegativeSlack) throw InvalidArgument("invalid probability weight");
    v = std::max(v, 0.0);
    sum += v;
  }
  if (!(sum > 0.0)) throw InvalidArgument("probability weights sum to zero");
  for (double& v : w) v /= sum;
  return ProbabilityVector(w);
}

double l1_distance(const ProbabilityVector& a, const ProbabilityVector& b) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) sum += std::abs(a[i] - b[i]);
  return sum;
}

ConfusionMatrix ConfusionMatrix::from_rows(const Rows& rows, double row_sum_tol) {
  Rows stochastic = rows;
  for (int i = 0; i < 3; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double v = rows[i][j];
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument("confusion matrix entries must be finite and nonnegative");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > row_sum_tol) {
      throw InvalidArgument("confusion matrix row " + std::to_string(i) + " sums to " +
                            std::to_string(sum));
    }
    for (int j = 0; j < 3; ++j) stochastic[i][j] = rows[i][j] / sum;
    if (!(stochastic[i][i] > 0.5)) {
      throw InvalidArgument("confusion matrix row " + std::to_string(i) + " is not diagonal dominant");
    }
  }
  return ConfusionMatrix(rows, stochastic);
}

ConfusionMatrix ConfusionMatrix::identity() {
  return from_rows(Rows{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}});
}

ConfusionMatrix paper_beta() { return ConfusionMatrix::from_rows(kDeviceBetaRaw, tol::kPrintedRowSum); }

ProbabilityVector apply_confusion(const ProbabilityVector& p_true, const ConfusionMatrix& beta) {
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[j] += p_true[i] * beta(i, j);
  return ProbabilityVector::normalized(out);
}

std::array<std::int64_t, 3> sample_counts(const ProbabilityVector& p, std::int64_t shots,
                                          std::uint64_t seed) {
  if (shots < 0) throw InvalidArgument("shots must be >= 0");
  std::array<std::int64_t, 3> counts{0, 0, 0};
  if (shots == 0) return counts;
  Rng rng(seed);
  std::int64_t remaining = shots;
  double mass = 1.0;
  for (int i = 0; i < 2 && remaining > 0; ++i) {
    const double q = mass > 0.0 ? std::clamp(p[i] / mass, 0.0, 1.0) : 0.0;
    std::binomial_distribution<std::int64_t> draw(remaining, q);
    counts[i] = draw(rng.engine());
    remaining -= counts[i];
    mass -= p[i];
  }
  counts[2] = remaining;
  return counts;
}

ProbabilityVector ibu_correct(const ProbabilityVector& observed, const ConfusionMatrix& beta,
                              int n_iter, const std::optional<ProbabilityVector>& prior) {
  if (n_iter < 0) throw InvalidArgument("ibu_correct: n_iter must be >= 0");
  const ProbabilityVector start = prior.value_or(ProbabilityVector::uniform());
  std::array<double, 3> p = start.values();
  for (double v : p) {
    if (!(v > 0.0)) throw InvalidArgument("ibu_correct: prior must be strictly positive");
  }
  for (int it = 0; it < n_iter; ++it) {
    std::array<double, 3> predicted{0.0, 0.0, 0.0};
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) predicted[j] += p[k] * beta(k, j);
    std::array<double, 3> next{0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
      double acc = 0.0;
      for (int j = 0; j < 3; ++j) {
        if (observed[j] == 0.0) continue;
        if (!(predicted[j] > 0.0)) {
          throw NumericalError("ibu_correct: outcome " + std::to_string(j) +
                               " observed but has zero predicted probability");
        }
        acc += beta(i, j) * observed[j] / predicted[j];
      }
      next[i] = p[i] * acc;
    }
    p = next;
  }
  return ProbabilityVector::normalized(p);
}

ComplexMatrix tomography_rotation(Axis axis) {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix block = ComplexMatrix::identity(2);
  switch (axis) {
    case Axis::x:
      // cos(pi/4) I + i sin(pi/4) sigma_y
      block = ComplexMatrix{{r, r}, {-r, r}};
      break;
    case Axis::y:
      // cos(pi/4) I - i sin(pi/4) sigma_x
      block = ComplexMatrix{{r, -kI * r}, {-kI * r, r}};
      break;
    case Axis::z:
      break;
  }
  ComplexMatrix out = embed_ef(block);
  out(0, 0) = 1.0;
  return out;
}

ProbabilityVector CountsRecord::frequencies() const {
  if (exact) return ProbabilityVector::normalized(exact_probabilities);
  if (shots <= 0) throw DataError("counts record has no shots");
  std::array<double, 3> f{0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i) f[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
  return ProbabilityVector::normalized(f);
}

CountsRecord simulate_tomography(const DensityMatrix& rho3, Axis axis, const ConfusionMatrix& beta,
                                 std::int64_t shots, std::uint64_t seed) {
  if (rho3.dim() != 3) throw InvalidArgument("simulate_tomography expects a qutrit state");
  if (std::abs(rho3.trace() - 1.0) > 1e-9) throw InvalidArgument("simulate_tomography: trace must be 1");
  if (shots < 0) throw InvalidArgument("shots must be >= 0");
  const ComplexMatrix r = tomography_rotation(axis);
  const ComplexMatrix rotated = r * rho3.matrix() * r.adjoint();
  const ProbabilityVector p_true = ProbabilityVector::normalized(
      {rotated(0, 0).real(), rotated(1, 1).real(), rotated(2, 2).real()});
  const ProbabilityVector observed = apply_confusion(p_true, beta);

  CountsRecord rec;
  rec.axis = axis;
  rec.shots = shots;
  if (shots == 0) {
    rec.exact = true;
    rec.exact_probabilities = observed.values();
  } else {
    rec.counts = sample_counts(observed, shots, seed);
  }
  return rec;
}

RenormalizedPair renormalize_subensemble(const ProbabilityVector& p) {
  const double success = p[1] + p[2];
  if (success < tol::kEmptyEnsemble) {
    throw NumericalError("renormalize_subensemble: postselected sub-ensemble is empty");
  }
  return RenormalizedPair{p[1] / success, p[2] / success, success};
}

BlochVector reconstruct_bloch(const RenormalizedPair& x, const RenormalizedPair& y,
                              const RenormalizedPair& z) {
  BlochVector b{2.0 * x.plus - 1.0, 2.0 * y.plus - 1.0, 2.0 * z.plus - 1.0};
  const double n = b.norm();
  if (n > 1.0) b = BlochVector{b.x / n, b.y / n, b.z / n};
  return b;
}

DensityMatrix reconstruct_density(const RenormalizedPair& x, const RenormalizedPair& y,
                                  const RenormalizedPair& z) {
  return density_from_bloch(reconstruct_bloch(x, y, z));
}

DensityMatrix reconstruct_diag3(const ProbabilityVector& p) {
  return DensityMatrix(ComplexMatrix::diagonal({p[0], p[1], p[2]}));
}

double renormalization_factor(double p_g) {
  if (!(p_g >= 0.0) || !(p_g < 1.0)) {
    throw InvalidArgument("renormalization_factor: P(g) must lie in [0, 1)");
  }
  return 1.0 / (1.0 - p_g);
}

TomographyResult reconstruct_from_counts(const std::array<CountsRecord, 3>& records,
                                         const ConfusionMatrix& beta, int n_iter) {
  const std::array<ProbabilityVector, 3> corrected{
      ibu_correct(records[0].frequencies(), beta, n_iter),
      ibu_correct(records[1].frequencies(), beta, n_iter),
      ibu_correct(records[2].frequencies(), beta, n_iter)};
  const std::array<RenormalizedPair, 3> pairs{renormalize_subensemble(corrected[0]),
                                              renormalize_subensemble(corrected[1]),
                                              renormalize_subensemble(corrected[2])};
  const BlochVector bloch = reconstruct_bloch(pairs[0], pairs[1], pairs[2]);
  return TomographyResult{records, corrected, pairs, bloch, density_from_bloch(bloch)};
}

TomographyResult run_tomography(const DensityMatrix& rho3, const ConfusionMatrix& beta,
                                std::int64_t shots, std::uint64_t seed, int n_iter) {
  const std::array<Axis, 3> axes{Axis::x, Axis::y, Axis::z};
  std::array<CountsRecord, 3> records;
  for (int a = 0; a < 3; ++a) {
    records[a] = simulate_tomography(rho3, axes[a], beta, shots, derive_seed(seed, a));
  }
  return reconstruct_from_counts(records, beta, n_iter);
}

}  // namespace nhq
