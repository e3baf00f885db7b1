#pragma once

namespace nhq {

/// Physical parameters of the driven, dissipative qutrit.
/// Rates in 1/us, coupling and detuning in rad/us.
struct SystemParams {
  double gamma_e = 0.0;   // decay |e> -> |g>
  double gamma_f = 0.0;   // decay |f> -> |e>
  double coupling = 0.0;  // drive amplitude J on the e-f transition
  double detuning = 0.0;  // drive detuning Delta

  /// Throws InvalidArgument for negative rates or coupling, or non-finite values.
  void validate() const;

  SystemParams with_coupling(double j) const {
    SystemParams p = *this;
    p.coupling = j;
    return p;
  }
};

/// Measured device rates: Gamma_e = 0.91 /us, Gamma_f = 0.057 /us.
inline constexpr double kDeviceGammaE = 0.91;
inline constexpr double kDeviceGammaF = 0.057;

}  // namespace nhq
