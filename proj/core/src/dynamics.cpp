#include "nhq/dynamics.hpp"

#include <cmath>
#include <utility>

#include "nhq/errors.hpp"
#include "nhq/expm.hpp"
#include "nhq/grid.hpp"
#include "nhq/tolerances.hpp"

namespace nhq {

void SystemParams::validate() const {
  for (double v : {gamma_e, gamma_f, coupling, detuning}) {
    if (!std::isfinite(v)) throw InvalidArgument("system parameters must be finite");
  }
  if (gamma_e < 0.0) throw InvalidArgument("gamma_e must be >= 0");
  if (gamma_f < 0.0) throw InvalidArgument("gamma_f must be >= 0");
  if (coupling < 0.0) throw InvalidArgument("J must be >= 0");
}

std::vector<double> uniform_grid(double horizon, double step) {
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) throw InvalidArgument("horizon must be >= 0");
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidArgument("grid step must be > 0");
  std::vector<double> times;
  const double ratio = horizon / step;
  const auto whole = static_cast<long long>(std::floor(ratio + 1e-9));
  times.reserve(static_cast<std::size_t>(whole) + 2);
  for (long long k = 0; k <= whole; ++k) times.push_back(std::min(horizon, k * step));
  if (horizon - times.back() > 1e-9 * step) times.push_back(horizon);
  return times;
}

bool Dissipator::populates_ground() const {
  if (jump_operator.dim() != 3) return false;
  for (int j = 0; j < 3; ++j)
    if (jump_operator(0, j) != Complex{}) return true;
  return false;
}

LindbladModel::LindbladModel(ComplexMatrix hamiltonian, std::vector<Dissipator> dissipators)
    : hamiltonian_(std::move(hamiltonian)), dissipators_(std::move(dissipators)) {
  for (const auto& d : dissipators_) {
    if (d.jump_operator.dim() != hamiltonian_.dim()) {
      throw InvalidArgument("dissipator '" + d.label + "' dimension does not match the Hamiltonian");
    }
  }
}

ComplexMatrix LindbladModel::no_jump_generator() const {
  ComplexMatrix h = hamiltonian_;
  for (const auto& d : dissipators_) {
    h -= (0.5 * kI) * (d.jump_operator.adjoint() * d.jump_operator);
  }
  return h;
}

EffectiveHamiltonian build_effective_hamiltonian(const SystemParams& params) {
  params.validate();
  const ComplexMatrix m{{Complex(params.detuning, -0.5 * params.gamma_e), params.coupling},
                        {params.coupling, 0.0}};
  return EffectiveHamiltonian{m, params};
}

PtDecomposition pt_decompose(const EffectiveHamiltonian& h_eff) {
  const Complex shift{0.0, -0.25 * h_eff.params.gamma_e};
  return PtDecomposition{shift, h_eff.matrix - shift * ComplexMatrix::identity(2)};
}

ComplexMatrix anti_hermitian_part(const ComplexMatrix& h) {
  return (0.5 * kI) * (h - h.adjoint());
}

LindbladModel build_three_level_model(const SystemParams& params) {
  params.validate();
  ComplexMatrix h(3);
  h(1, 1) = params.detuning;
  h(1, 2) = params.coupling;
  h(2, 1) = params.coupling;

  ComplexMatrix l_e(3);
  l_e(0, 1) = std::sqrt(params.gamma_e);
  ComplexMatrix l_f(3);
  l_f(1, 2) = std::sqrt(params.gamma_f);

  return LindbladModel(h, {Dissipator{l_e, "e"}, Dissipator{l_f, "f"}});
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const LindbladModel& model) {
  if (rho.dim() != model.dim()) throw InvalidArgument("lindblad_rhs: dimension mismatch");
  ComplexMatrix out = (-kI) * commutator(model.hamiltonian(), rho);
  for (const auto& d : model.dissipators()) {
    const ComplexMatrix& l = d.jump_operator;
    const ComplexMatrix l_dag = l.adjoint();
    out += l * rho * l_dag;
    out -= 0.5 * anticommutator(l_dag * l, rho);
  }
  return out;
}

ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const LindbladModel& model) {
  return lindblad_rhs(rho.matrix(), model);
}

namespace {

void check_step(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("time step must be > 0");
}

ComplexMatrix rk4_step(const ComplexMatrix& rho, const LindbladModel& model, double h) {
  const ComplexMatrix k1 = lindblad_rhs(rho, model);
  const ComplexMatrix k2 = lindblad_rhs(rho + (0.5 * h) * k1, model);
  const ComplexMatrix k3 = lindblad_rhs(rho + (0.5 * h) * k2, model);
  const ComplexMatrix k4 = lindblad_rhs(rho + h * k3, model);
  return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Advances rho by `span` in steps of dt, shortening the final step.
ComplexMatrix integrate_span(ComplexMatrix rho, const LindbladModel& model, double span,
                             double dt) {
  if (span <= 0.0) return rho;
  const auto full_steps = static_cast<long long>(std::floor(span / dt * (1.0 + 1e-12)));
  for (long long k = 0; k < full_steps; ++k) rho = rk4_step(rho, model, dt);
  const double rest = span - static_cast<double>(full_steps) * dt;
  if (rest > 1e-12 * dt) rho = rk4_step(rho, model, rest);
  return rho;
}

DensityMatrix hermitized(const ComplexMatrix& m) { return DensityMatrix(0.5 * (m + m.adjoint())); }

}  // namespace

DensityMatrix evolve_lindblad(const DensityMatrix& rho0, const LindbladModel& model, double t,
                              double dt) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("evolve_lindblad: t must be >= 0");
  check_step(dt);
  if (rho0.dim() != model.dim()) throw InvalidArgument("evolve_lindblad: dimension mismatch");
  if (t == 0.0) return rho0;
  return hermitized(integrate_span(rho0.matrix(), model, t, std::min(dt, t)));
}

std::vector<DensityMatrix> evolve_lindblad_on_grid(const DensityMatrix& rho0,
                                                   const LindbladModel& model,
                                                   const std::vector<double>& times, double dt) {
  check_step(dt);
  if (rho0.dim() != model.dim()) throw InvalidArgument("evolve_lindblad: dimension mismatch");
  std::vector<DensityMatrix> out;
  out.reserve(times.size());
  ComplexMatrix rho = rho0.matrix();
  double now = 0.0;
  for (double t : times) {
    if (!(t >= now) || !std::isfinite(t)) {
      throw InvalidArgument("evolve_lindblad_on_grid: times must be ascending and >= 0");
    }
    rho = integrate_span(rho, model, t - now, dt);
    now = t;
    out.push_back(t == 0.0 ? rho0 : hermitized(rho));
  }
  return out;
}

Propagation propagate_nonhermitian(const StateVector& psi0, const EffectiveHamiltonian& h_eff,
                                   double t) {
  if (psi0.dim() != 2) throw InvalidArgument("propagate_nonhermitian expects a 2-level state");
  if (!psi0.is_normalized(1e-10)) throw InvalidArgument("propagate_nonhermitian: psi0 not normalized");
  const StateVector phi = matrix_exponential(h_eff.matrix, t) * psi0;
  const double survival = phi.norm2();
  if (!(survival >= tol::kSurvivalUnderflow)) {
    throw NumericalError("postselection failed: survival probability underflow at t = " +
                         std::to_string(t));
  }
  return Propagation{phi * (1.0 / std::sqrt(survival)), survival};
}

StateVector integrate_nonlinear_schrodinger(const StateVector& psi0,
                                            const EffectiveHamiltonian& h_eff, double t,
                                            double dt) {
  if (psi0.dim() != 2) throw InvalidArgument("integrate_nonlinear_schrodinger expects dim 2");
  if (!psi0.is_normalized(1e-10)) throw InvalidArgument("integrate_nonlinear_schrodinger: psi0 not normalized");
  if (!(t >= 0.0)) throw InvalidArgument("integrate_nonlinear_schrodinger: t must be >= 0");
  check_step(dt);

  const ComplexMatrix& h = h_eff.matrix;
  const ComplexMatrix gamma = anti_hermitian_part(h);
  // d|psi>/dt = -i H_eff |psi> + <psi|Gamma|psi> |psi>
  auto rhs = [&](const StateVector& psi) {
    const double expectation = inner(psi, gamma * psi).real();
    return (-kI) * (h * psi) + psi * expectation;
  };
  auto step = [&](const StateVector& psi, double s) {
    const StateVector k1 = rhs(psi);
    const StateVector k2 = rhs(psi + (0.5 * s) * k1);
    const StateVector k3 = rhs(psi + (0.5 * s) * k2);
    const StateVector k4 = rhs(psi + s * k3);
    return psi + (s / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  StateVector psi = psi0;
  const auto full_steps = static_cast<long long>(std::floor(t / dt * (1.0 + 1e-12)));
  for (long long k = 0; k < full_steps; ++k) psi = step(psi, dt);
  const double rest = t - static_cast<double>(full_steps) * dt;
  if (rest > 1e-12 * dt) psi = step(psi, rest);
  return psi;
}

ConditionalState conditional_ef_state(const DensityMatrix& rho3) {
  if (rho3.dim() != 3) throw InvalidArgument("conditional_ef_state expects a qutrit state");
  const double success = 1.0 - rho3.population(0);
  if (success < tol::kEmptyEnsemble) {
    throw NumericalError("postselected ensemble is empty (success probability " +
                         std::to_string(success) + ")");
  }
  ComplexMatrix block(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) block(i, j) = rho3.matrix()(i + 1, j + 1) / success;
  return ConditionalState{DensityMatrix(block), success};
}

}  // namespace nhq
