#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "nhq/density.hpp"
#include "nhq/matrix.hpp"
#include "nhq/state.hpp"
#include "nhq/tolerances.hpp"

namespace nhq {

/// Outcome probabilities of a three-outcome readout, ordered
/// (g, +a, -a) -- for the Z axis that is (g, e, f).
class ProbabilityVector {
 public:
  /// Entries must be >= -1e-12 (tiny negatives are clamped to zero) and sum
  /// to one within tol::kSimplex. Throws InvalidArgument otherwise.
  explicit ProbabilityVector(const std::array<double, 3>& p);
  ProbabilityVector(double g, double plus, double minus)
      : ProbabilityVector(std::array<double, 3>{g, plus, minus}) {}

  static ProbabilityVector uniform();
  /// Divides by the sum; throws InvalidArgument if the sum is not positive.
  static ProbabilityVector normalized(const std::array<double, 3>& weights);

  double operator[](int i) const { return p_[i]; }
  const std::array<double, 3>& values() const noexcept { return p_; }

 private:
  std::array<double, 3> p_;
};

double l1_distance(const ProbabilityVector& a, const ProbabilityVector& b);

/// Readout confusion matrix: entry (i, j) is the probability of assigning
/// outcome j after preparing state i.
class ConfusionMatrix {
 public:
  using Rows = std::array<std::array<double, 3>, 3>;

  /// Rows must be nonnegative, sum to one within `row_sum_tol`, and have a
  /// dominant diagonal (> 1/2). Rows are then rescaled to sum exactly to one;
  /// the rows as given stay available through raw().
  static ConfusionMatrix from_rows(const Rows& rows, double row_sum_tol = tol::kRowSum);
  static ConfusionMatrix identity();

  double operator()(int prepared, int assigned) const { return stochastic_[prepared][assigned]; }
  const Rows& stochastic() const noexcept { return stochastic_; }
  const Rows& raw() const noexcept { return raw_; }

 private:
  ConfusionMatrix(const Rows& raw, const Rows& stochastic) : raw_(raw), stochastic_(stochastic) {}
  Rows raw_;
  Rows stochastic_;
};

/// Calibrated three-state assignment matrix of the device, as printed.
/// Row sums are 1.001, 1.000 and 0.999.
inline constexpr ConfusionMatrix::Rows kDeviceBetaRaw{{
    {0.993, 0.003, 0.005},
    {0.123, 0.871, 0.006},
    {0.056, 0.018, 0.925},
}};

/// kDeviceBetaRaw accepted under tol::kPrintedRowSum and row-renormalized.
ConfusionMatrix paper_beta();

/// observed_j = sum_i p_i beta_ij
ProbabilityVector apply_confusion(const ProbabilityVector& p_true, const ConfusionMatrix& beta);

/// Multinomial draw of `shots` outcomes, deterministic in `seed`.
std::array<std::int64_t, 3> sample_counts(const ProbabilityVector& p, std::int64_t shots,
                                          std::uint64_t seed);

inline constexpr int kDefaultIbuIterations = 50;

/// Iterative Bayesian unfolding, exactly n_iter iterations of
///   p_i <- p_i sum_j beta_ij observed_j / (sum_k p_k beta_kj)
/// starting from `prior` (uniform when empty). Throws NumericalError when an
/// observed outcome has zero predicted probability.
ProbabilityVector ibu_correct(const ProbabilityVector& observed, const ConfusionMatrix& beta,
                              int n_iter = kDefaultIbuIterations,
                              const std::optional<ProbabilityVector>& prior = std::nullopt);

/// Pre-readout rotation for tomography along `axis`: identity on |g>; on
/// (e, f) exp(+i pi sigma_y / 4) for X (|+x> -> |e>), exp(-i pi sigma_x / 4)
/// for Y (|+y> -> |e>), identity for Z.
ComplexMatrix tomography_rotation(Axis axis);

/// Outcome counts (g, +a, -a) of one tomography setting. With shots == 0 the
/// record is exact: counts are zero and `exact_probabilities` holds the
/// observed distribution.
struct CountsRecord {
  Axis axis = Axis::z;
  std::int64_t shots = 0;
  std::array<std::int64_t, 3> counts{0, 0, 0};
  bool exact = false;
  std::array<double, 3> exact_probabilities{0.0, 0.0, 0.0};

  /// Observed outcome frequencies.
  ProbabilityVector frequencies() const;
};

/// Rotate, read out through beta, sample. rho3 must have unit trace.
CountsRecord simulate_tomography(const DensityMatrix& rho3, Axis axis, const ConfusionMatrix& beta,
                                 std::int64_t shots, std::uint64_t seed);

/// Probabilities of the (e, f) sub-ensemble, P(n)(+a) = P(+a)/(P(+a)+P(-a)).
struct RenormalizedPair {
  double plus;
  double minus;
  double success;  // P(+a) + P(-a) = 1 - P(g)
};

/// Throws NumericalError when success < tol::kEmptyEnsemble.
RenormalizedPair renormalize_subensemble(const ProbabilityVector& p_corrected);

/// Sign convention of the reconstruction: a = 2 P(n)(+a) - 1, so that |e>
/// maps to z = +1 under sigma_z = |e><e| - |f><f|.
inline constexpr std::string_view kBlochConvention = "a=2Pn(+a)-1";

/// Bloch vector from the three renormalized pairs, radially projected onto
/// the unit ball when shot noise pushes it outside.
BlochVector reconstruct_bloch(const RenormalizedPair& x, const RenormalizedPair& y,
                              const RenormalizedPair& z);

/// 1/2 (I + x sigma_x + y sigma_y + z sigma_z) from reconstruct_bloch().
DensityMatrix reconstruct_density(const RenormalizedPair& x, const RenormalizedPair& y,
                                  const RenormalizedPair& z);

/// diag(P(g), P(e), P(f)).
DensityMatrix reconstruct_diag3(const ProbabilityVector& p);

/// 1 / (1 - P(g)); throws InvalidArgument unless 0 <= p_g < 1.
double renormalization_factor(double p_g);

/// All three axes of one tomography point, corrected and reconstructed.
struct TomographyResult {
  std::array<CountsRecord, 3> records;  // x, y, z
  std::array<ProbabilityVector, 3> corrected;
  std::array<RenormalizedPair, 3> pairs;
  BlochVector bloch;
  DensityMatrix rho_ef;
};

/// IBU-correct three count records (ordered x, y, z) and reconstruct.
TomographyResult reconstruct_from_counts(const std::array<CountsRecord, 3>& records,
                                         const ConfusionMatrix& beta,
                                         int n_iter = kDefaultIbuIterations);

/// Simulated full tomography of a qutrit state; axis a uses
/// derive_seed(seed, a).
TomographyResult run_tomography(const DensityMatrix& rho3, const ConfusionMatrix& beta,
                                std::int64_t shots, std::uint64_t seed,
                                int n_iter = kDefaultIbuIterations);

}  // namespace nhq
