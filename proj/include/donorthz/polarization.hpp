#pragma once

#include <complex>

#include "donorthz/constants.hpp"
#include "donorthz/spectrum.hpp"

namespace donorthz::polarization {

// Transverse field amplitudes in the lab frame, beam along +z.
// A global phase is physically irrelevant.
struct JonesVector {
  std::complex<double> ex{0.0, 0.0};
  std::complex<double> ey{0.0, 0.0};
};

struct StokesVector {
  double s0 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
};

// Wire-grid polarizer at 45 degrees to the incident linear polarization,
// backed by a movable mirror. The round-trip path difference 2d sets the
// phase delay between the two reflected components; delta0 absorbs the
// unknown absolute calibration of the micrometer.
struct MirrorPolarizerStage {
  double spacing_mm = 0.0;
  double wavelength_mm = 0.1185;
  double phase_offset_rad = 0.0;
  double grid_angle_rad = 0.25 * constants::pi;

  void validate() const;
};

enum class FieldDirection { PlusZ, MinusZ };

FieldDirection field_from_string(const std::string& name);
std::string to_string(FieldDirection f);

// Amplitudes in the helicity basis e+- = (x +- iy)/sqrt(2) and the
// corresponding power fractions (f_plus + f_minus = 1).
struct CircularDecomposition {
  std::complex<double> a_plus;
  std::complex<double> a_minus;
  double f_plus = 0.0;
  double f_minus = 0.0;
};

// delta = 4 pi d / lambda + delta0; the photocurrent period in d is lambda/2.
double stage_phase(const MirrorPolarizerStage& stage);

// Beam after the stage: (u + e^{i delta} v)/sqrt(2) in the grid basis,
// rotated back to the lab frame.
JonesVector stage_output(const MirrorPolarizerStage& stage);

StokesVector stokes_from_jones(const JonesVector& j);

// S3/S0 in [-1, +1]; +1 for sigma+, -1 for sigma-. Equals sin(delta) for
// the stage output.
double s3_ratio(const JonesVector& j);

CircularDecomposition circular_decomposition(const JonesVector& j);

// Power fraction of the beam that drives the given transition. With the
// field along +z, sigma+ drives 1s->2p+ and sigma- drives 1s->2p-;
// reversing the field swaps the assignment.
double coupled_fraction(const JonesVector& j, spectrum::StateLabel transition,
                        FieldDirection field);

// One lumped elliptical retarder/diattenuator (unit determinant) standing
// in for the focusing optics and cryostat windows. diattenuation in [0, 1).
JonesVector apply_distortion(const JonesVector& j, double retardance_rad,
                             double diattenuation, double axis_rad);

// Named polarization states used by the CLI and the trace generators.
JonesVector jones_sigma_plus();
JonesVector jones_sigma_minus();
JonesVector jones_pi_x();
JonesVector jones_pi_y();
JonesVector jones_from_label(const std::string& label);

}  // namespace donorthz::polarization
