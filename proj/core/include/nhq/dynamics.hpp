#pragma once

#include <string>
#include <vector>

#include "nhq/density.hpp"
#include "nhq/matrix.hpp"
#include "nhq/params.hpp"
#include "nhq/state.hpp"

namespace nhq {

/// Jump operator with its rate folded in, e.g. L_e = sqrt(Gamma_e) |g><e|.
struct Dissipator {
  ComplexMatrix jump_operator;
  std::string label;

  /// True when the jump lands in |g> (row 0 of a qutrit operator is nonzero),
  /// i.e. a jump that postselection discards.
  bool populates_ground() const;
};

/// Hamiltonian plus dissipators of a Lindblad master equation.
class LindbladModel {
 public:
  /// Throws InvalidArgument if dimensions differ.
  LindbladModel(ComplexMatrix hamiltonian, std::vector<Dissipator> dissipators);

  int dim() const noexcept { return hamiltonian_.dim(); }
  const ComplexMatrix& hamiltonian() const noexcept { return hamiltonian_; }
  const std::vector<Dissipator>& dissipators() const noexcept { return dissipators_; }

  /// H - (i/2) sum_j L_j^dag L_j, the no-jump generator.
  ComplexMatrix no_jump_generator() const;

 private:
  ComplexMatrix hamiltonian_;
  std::vector<Dissipator> dissipators_;
};

/// Two-level generator of the postselected (e, f) dynamics.
struct EffectiveHamiltonian {
  ComplexMatrix matrix;
  SystemParams params;
};

/// [[Delta - i Gamma_e/2, J], [J, 0]] in (e, f) ordering.
EffectiveHamiltonian build_effective_hamiltonian(const SystemParams& params);

/// H_eff = shift * I + H_PT with shift = -i Gamma_e/4.
struct PtDecomposition {
  Complex shift;
  ComplexMatrix h_pt;
};

PtDecomposition pt_decompose(const EffectiveHamiltonian& h_eff);

/// Anti-Hermitian part Gamma = i (H - H^dag)/2 of a generator, so that
/// H = Re-part - i Gamma.
ComplexMatrix anti_hermitian_part(const ComplexMatrix& h);

/// Qutrit model: H = Delta|e><e| + J(|e><f| + |f><e|), L_e = sqrt(Gamma_e)|g><e|,
/// L_f = sqrt(Gamma_f)|e><f|.
LindbladModel build_three_level_model(const SystemParams& params);

/// -i[H, rho] + sum_j (L_j rho L_j^dag - 1/2 {L_j^dag L_j, rho}). Accepts any
/// matrix, so intermediate Runge-Kutta stages can be passed in.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const LindbladModel& model);
ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const LindbladModel& model);

/// Fixed-step RK4 from 0 to t; the last step is shortened to land on t and the
/// result is Hermitized once. dt > t means a single step of size t.
DensityMatrix evolve_lindblad(const DensityMatrix& rho0, const LindbladModel& model, double t,
                              double dt);

/// Same integrator sampled at every time of an ascending grid (times >= 0).
std::vector<DensityMatrix> evolve_lindblad_on_grid(const DensityMatrix& rho0,
                                                   const LindbladModel& model,
                                                   const std::vector<double>& times, double dt);

struct Propagation {
  StateVector state;  // normalized conditional state
  double survival;    // ||exp(-i H_eff t) psi0||^2
};

/// Exact solution of the normalized non-Hermitian Schrodinger equation.
/// Throws NumericalError when the survival underflows below
/// tol::kSurvivalUnderflow.
Propagation propagate_nonhermitian(const StateVector& psi0, const EffectiveHamiltonian& h_eff,
                                   double t);

/// RK4 on i d|psi>/dt = (H_eff + i<psi|Gamma|psi>)|psi> without any
/// renormalization; the returned norm drift is the integrator error.
StateVector integrate_nonlinear_schrodinger(const StateVector& psi0,
                                            const EffectiveHamiltonian& h_eff, double t,
                                            double dt);

/// Postselected (e, f) state of a qutrit density matrix.
struct ConditionalState {
  DensityMatrix rho_ef;
  double success;  // 1 - <g|rho|g>
};

/// Throws NumericalError when success < tol::kEmptyEnsemble.
ConditionalState conditional_ef_state(const DensityMatrix& rho3);

}  // namespace nhq
