#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nhq/dynamics.hpp"
#include "nhq/params.hpp"
#include "nhq/state.hpp"
#include "nhq/tolerances.hpp"

namespace nhq {

enum class Regime { unbroken, broken, exceptional_point };

std::string_view to_string(Regime regime);

struct RegimeReport {
  Regime regime;
  std::array<Complex, 2> eigenvalues;  // rad/us
  double eigenvector_overlap;          // |<v0|v1>|
  double j_ep;                         // Gamma_e / 4
  Complex discriminant;                // ((H00 - H11)/2)^2 + J^2
};

/// PT-regime of H_eff. The discriminant is J^2 - (Gamma_e/4)^2 at zero
/// detuning; with detuning it is complex and the regime follows the sign of
/// its real part, an EP requiring |D| <= tol^2.
RegimeReport classify_regime(const SystemParams& params, double tol = tol::kExceptionalPoint);

/// Coupling of the exceptional point at zero detuning, Gamma_e / 4.
double ep_coupling(const SystemParams& params);

struct FptResult {
  std::optional<double> fpt;   // us; empty when P(f) has no local maximum
  double hermitian_reference;  // pi / (2 J)
  std::string method = "first-local-max+parabolic";
};

/// Time of the first strict local maximum of the postselected P(f), sampled
/// on a grid of spacing dt and refined by a parabola through the three
/// samples around the discrete maximum.
FptResult first_passage_time(const SystemParams& params, const StateVector& psi0, double horizon,
                             double dt);

struct FptSweepRow {
  double coupling;
  FptResult result;
};

/// first_passage_time for each J of an ascending, nonempty grid.
std::vector<FptSweepRow> fpt_sweep(const SystemParams& base, const std::vector<double>& couplings,
                                   const StateVector& psi0, double horizon, double dt);

}  // namespace nhq
