#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "donorthz/dynamics.hpp"
#include "donorthz/polarization.hpp"
#include "donorthz/spectrum.hpp"

namespace donorthz::experiment {

// Photocurrent versus mirror-polarizer spacing at fixed field direction.
struct PolarizerScan {
  std::vector<double> spacings_mm;
  std::vector<double> photocurrent;  // arbitrary units
  polarization::FieldDirection field = polarization::FieldDirection::PlusZ;
  double wavelength_mm = 0.0;
  spectrum::StateLabel transition = spectrum::StateLabel::P2Plus;

  void validate() const;
};

// Photocurrent versus pulse width for one polarization state.
struct RabiTrace {
  std::vector<double> pulse_widths_ps;
  std::vector<double> photocurrent;  // arbitrary units
  std::string polarization;
  double frequency_thz = 0.0;
  double field_tesla = 0.0;

  void validate() const;
};

// y(d) = amplitude * sin(4 pi d / lambda + phase) + offset
struct SinusoidFit {
  double amplitude = 0.0;
  double phase_rad = 0.0;  // in [0, 2 pi)
  double offset = 0.0;
  double residual_norm = 0.0;
};

struct SaturationCurve {
  std::vector<double> intensities;  // relative units
  std::vector<double> signal;
  double s_max = 0.0;
  double i_sat = 0.0;
};

// Lumped optical distortion between the stage and the sample.
struct Distortion {
  double retardance_rad = 0.0;
  double diattenuation = 0.0;
  double axis_rad = 0.0;

  bool is_identity() const {
    return retardance_rad == 0.0 && diattenuation == 0.0;
  }
};

// Linear-response photocurrent C * I * coupled_fraction + offset per
// spacing. The stage template supplies wavelength and phase calibration;
// its spacing is swept.
PolarizerScan simulate_polarizer_scan(
    const std::vector<double>& spacings_mm,
    const polarization::MirrorPolarizerStage& stage_template,
    spectrum::StateLabel transition, polarization::FieldDirection field,
    double intensity, const Distortion& distortion, double offset);

// Linear least squares on {sin(4 pi d/lambda), cos(4 pi d/lambda), 1}.
SinusoidFit fit_sinusoid(const PolarizerScan& scan);

// Phase difference of two scans, wrapped to [0, 2 pi).
double scan_phase_difference(const PolarizerScan& a, const PolarizerScan& b);

// Stroboscopic trace: per width, the effective drive amplitude is
// E_peak * sqrt(coupled_fraction) (power fractions couple through the
// field amplitude), and the signal is 1 - rho11 at pulse end. Resonant
// drive, ideal rectangle envelope.
RabiTrace simulate_rabi_trace(const std::vector<double>& pulse_widths_ps,
                              const polarization::JonesVector& pol,
                              spectrum::StateLabel transition,
                              polarization::FieldDirection field,
                              double e_peak_v_per_m, double x12_nm,
                              const dynamics::DampingRates& rates);

// Phenomenological long-pulse saturation s_max * (1 - exp(-I/i_sat)).
SaturationCurve simulate_saturation(const std::vector<double>& intensities,
                                    double s_max, double i_sat);

// Polarization label ("sigma+" / "sigma-") that maximizes the signal for
// the given transition and field direction.
std::string handedness_table(spectrum::StateLabel transition,
                             polarization::FieldDirection field);

// Seeded additive Gaussian noise for fit-robustness studies; the same
// seed always reproduces the same perturbation.
void add_gaussian_noise(std::vector<double>& signal, double sigma,
                        std::uint64_t seed);

}  // namespace donorthz::experiment
