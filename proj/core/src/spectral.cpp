#include "nhq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nhq/eig.hpp"
#include "nhq/errors.hpp"
#include "nhq/grid.hpp"

namespace nhq {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::unbroken:
      return "unbroken";
    case Regime::broken:
      return "broken";
    case Regime::exceptional_point:
      return "exceptional_point";
  }
  return "?";
}

double ep_coupling(const SystemParams& params) { return 0.25 * params.gamma_e; }

RegimeReport classify_regime(const SystemParams& params, double tol) {
  const EffectiveHamiltonian h = build_effective_hamiltonian(params);
  const Complex half_diff = 0.5 * (h.matrix(0, 0) - h.matrix(1, 1));
  const Complex disc = params.detuning == 0.0
                           ? Complex(params.coupling * params.coupling -
                                         0.0625 * params.gamma_e * params.gamma_e,
                                     0.0)
                           : half_diff * half_diff + params.coupling * params.coupling;
  const double tol2 = tol * tol;

  Regime regime;
  if (std::abs(disc) <= tol2) {
    regime = Regime::exceptional_point;
  } else if (disc.real() > 0.0) {
    regime = Regime::unbroken;
  } else {
    regime = Regime::broken;
  }

  const Eigen2 eig = eig_general_2x2(h.matrix);
  return RegimeReport{regime, eig.values, eig.overlap(), ep_coupling(params), disc};
}

FptResult first_passage_time(const SystemParams& params, const StateVector& psi0, double horizon,
                             double dt) {
  if (!(horizon > 0.0)) throw InvalidArgument("first_passage_time: horizon must be > 0");
  if (!(dt > 0.0)) throw InvalidArgument("first_passage_time: dt must be > 0");

  FptResult result;
  result.hermitian_reference = params.coupling > 0.0
                                   ? std::numbers::pi / (2.0 * params.coupling)
                                   : std::numeric_limits<double>::infinity();

  const EffectiveHamiltonian h = build_effective_hamiltonian(params);
  const std::vector<double> times = uniform_grid(horizon, dt);
  std::vector<double> p_f;
  p_f.reserve(times.size());
  for (double t : times) {
    const Propagation prop = propagate_nonhermitian(psi0, h, t);
    p_f.push_back(std::norm(prop.state[1]));
    const std::size_t k = p_f.size() - 2;
    if (p_f.size() >= 3 && p_f[k] > p_f[k - 1] && p_f[k] > p_f[k + 1]) {
      // Vertex of the parabola through the three samples.
      const double x0 = times[k - 1], x1 = times[k], x2 = times[k + 1];
      const double y0 = p_f[k - 1], y1 = p_f[k], y2 = p_f[k + 1];
      const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
      const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
      double vertex = x1;
      if (den != 0.0) vertex = std::clamp(x1 - 0.5 * num / den, x0, x2);
      result.fpt = vertex;
      return result;
    }
  }
  return result;
}

std::vector<FptSweepRow> fpt_sweep(const SystemParams& base, const std::vector<double>& couplings,
                                   const StateVector& psi0, double horizon, double dt) {
  if (couplings.empty()) throw InvalidArgument("fpt_sweep: empty J grid");
  for (std::size_t i = 1; i < couplings.size(); ++i) {
    if (!(couplings[i] > couplings[i - 1])) throw InvalidArgument("fpt_sweep: J grid must ascend");
  }
  std::vector<FptSweepRow> rows;
  rows.reserve(couplings.size());
  for (double j : couplings) {
    rows.push_back(FptSweepRow{j, first_passage_time(base.with_coupling(j), psi0, horizon, dt)});
  }
  return rows;
}

}  // namespace nhq
