#pragma once

namespace donorthz::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// CODATA-style values, in the units used throughout this project.
inline constexpr double hydrogen_rydberg_mev = 13605.7;       // meV
inline constexpr double hydrogen_bohr_radius_nm = 0.0529177;  // nm
inline constexpr double elementary_charge_c = 1.602176634e-19;
inline constexpr double hbar_js = 1.054571817e-34;

// hbar*e/m_e expressed as cyclotron energy per tesla; divide by m*/m_e.
inline constexpr double cyclotron_mev_per_tesla = 1.15767e-1;

// Photon energy of a 1 THz quantum (h * 1 THz in meV).
inline constexpr double mev_per_thz = 4.135667696;

// Vacuum light speed as mm of wavelength per THz of frequency.
inline constexpr double wavelength_mm_thz = 0.299792458;

}  // namespace donorthz::constants
