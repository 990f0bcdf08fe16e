#pragma once

#include <complex>

namespace donorthz::dynamics {

// Rotating-wave density matrix of the driven two-level system plus the
// population accumulated in the continuum through ionization.
struct BlochState {
  double rho11 = 1.0;
  double rho22 = 0.0;
  std::complex<double> sigma12{0.0, 0.0};
  double ionized = 0.0;
};

struct DampingRates {
  double gamma1 = 0.0;  // recombination 2p -> 1s, s^-1
  double gamma2 = 0.0;  // dephasing, s^-1
  double gamma3 = 0.0;  // ionization 2p -> continuum, s^-1

  void validate() const;
};

struct Drive {
  double rabi_rad_per_s = 0.0;
  double detuning_rad_per_s = 0.0;  // omega - omega0
};

// Rectangular THz pulse with optional linear rise and fall ramps.
struct PulseSpec {
  double width_ps = 0.0;
  double field_v_per_m = 0.0;
  double rise_time_ps = 0.0;  // 0 = ideal rectangle; must be < width/2

  void validate() const;
};

// Omega_R = e E x12 / hbar, in rad/s (E in V/m, x12 in nm).
double rabi_frequency(double field_v_per_m, double x12_nm);

// Time derivative of the state:
//   rho11'   = -Omega Im(sigma12) + Gamma1 rho22
//   rho22'   = +Omega Im(sigma12) - (Gamma1 + gamma3) rho22
//   sigma12' = -i Delta sigma12 + (i/2) Omega (rho11 - rho22) - gamma2 sigma12
//   ionized' = gamma3 rho22
// The rho11 + rho22 + ionized sum is conserved identically.
BlochState bloch_rhs(const BlochState& s, const Drive& d,
                     const DampingRates& r);

// Advances the constant-coefficient system by fixed-step RK4, doubling the
// step count until halving changes no component by more than 1e-9.
BlochState propagate_constant(const BlochState& s, const Drive& d,
                              const DampingRates& r, double duration_ps);

// Resonance-frame pulse at a given Rabi frequency: linear rise, flat top,
// linear fall, integrated piecewise with propagate_constant. Starts from
// the ground state.
BlochState simulate_flat_pulse(double rabi_rad_per_s,
                               double detuning_rad_per_s,
                               const DampingRates& r, double width_ps,
                               double rise_time_ps = 0.0);

// Same, with the Rabi frequency derived from the pulse field and x12.
BlochState simulate_pulse(const PulseSpec& p, double x12_nm,
                          double detuning_rad_per_s, const DampingRates& r);

// The photoconductivity observable 1 - rho11, in [0, 1].
double photoconductivity(const BlochState& s);

}  // namespace donorthz::dynamics
