#pragma once

#include <Eigen/Dense>
#include <string>

namespace donorthz::spectrum {

// Material constants of the shallow donor, defining the effective
// atomic units. Defaults are for a sulfur donor in GaAs.
struct DonorParameters {
  double effective_mass_ratio = 0.0665;        // m*/m_e
  double dielectric_constant = 12.56;
  double central_cell_correction_mev = 0.110;  // deepens 1s only

  void validate() const;
};

struct EffectiveUnits {
  double rydberg_mev;      // Ry* = Ry_H * (m*/m_e) / eps^2
  double bohr_radius_nm;   // a*  = a_H * eps / (m*/m_e)
  double gamma_per_tesla;  // gamma/B = hbar*omega_c / (2 Ry*) per tesla
};

EffectiveUnits effective_units(const DonorParameters& p);

// gamma = hbar*omega_c(B) / (2 Ry*), the cyclotron-to-Coulomb energy ratio.
double dimensionless_gamma(double b_tesla, const EffectiveUnits& u);

enum class StateLabel { S1, P2Minus, P2Zero, P2Plus };

struct HydrogenicState {
  StateLabel label = StateLabel::S1;

  int magnetic_quantum_number() const;  // 0, -1, 0, +1
  bool odd_z_parity() const;            // true only for 2p0
};

std::string to_string(StateLabel s);
StateLabel state_from_string(const std::string& name);

// Even-tempered Gaussian product basis rho^|m| z^p exp(-a rho^2 - b z^2),
// exponents in units of 1/a*^2. One basis function per (alpha, beta) pair.
struct VariationalBasisSpec {
  int n_rho = 11;
  int n_z = 8;
  double alpha_min = 0.01;
  double alpha_max = 50.0;
  double beta_min = 0.01;
  double beta_max = 50.0;
  int quadrature_points = 64;  // Gauss-Legendre order for Coulomb elements

  void validate() const;
  bool operator==(const VariationalBasisSpec&) const = default;
};

struct LevelSolution {
  HydrogenicState state;
  double gamma = 0.0;
  double energy_ry = 0.0;  // Ry* units, conduction-band bottom = 0
  Eigen::VectorXd coefficients;
  VariationalBasisSpec basis;
};

// Rayleigh-Ritz minimum of H = -lap - 2/r + gamma*m + gamma^2 rho^2/4
// (Rydberg units) in the (m, z-parity) sector of the given state.
LevelSolution solve_level(const HydrogenicState& state, double gamma,
                          const VariationalBasisSpec& basis);

// Assembles the gamma-independent sector matrices once; solving at many
// gamma values then costs one dense eigensolve each. The linear Zeeman
// term gamma*m is proportional to the overlap, so it shifts every
// eigenvalue rigidly and is added analytically after the solve.
class SectorSolver {
 public:
  SectorSolver(int abs_m, bool odd_z_parity, const VariationalBasisSpec& basis);

  // Lowest eigenpair at this gamma, Zeeman term excluded. The coefficient
  // vector is normalized so that c^T S c = 1.
  std::pair<double, Eigen::VectorXd> solve_spatial(double gamma) const;

  int abs_m() const { return abs_m_; }
  bool odd_z_parity() const { return odd_z_; }
  const VariationalBasisSpec& basis() const { return basis_; }

 private:
  int abs_m_;
  bool odd_z_;
  VariationalBasisSpec basis_;
  Eigen::MatrixXd overlap_;        // S
  Eigen::MatrixXd kinetic_coul_;   // -lap - 2/r
  Eigen::MatrixXd rho_squared_;    // <rho^2>, diamagnetic prefactor gamma^2/4
};

// E(to) - E(1s) in meV at field B, central-cell correction included.
// `from` must be the 1s state.
double transition_energy_mev(StateLabel from, StateLabel to, double b_tesla,
                             const DonorParameters& p,
                             const VariationalBasisSpec& basis);

// Field at which the transition energy equals h*frequency, by bisection
// to 1e-4 T. The bracket [b_lo, b_hi] must contain a sign change; for the
// non-monotone 1s->2p- transition the caller's bracket selects the root.
double resonance_field(double frequency_thz, StateLabel from, StateLabel to,
                       const DonorParameters& p,
                       const VariationalBasisSpec& basis, double b_lo,
                       double b_hi);

// Free-electron Landau level (n + 1/2) hbar*omega_c in meV.
double landau_energy_mev(int n, double b_tesla, const EffectiveUnits& u);

// |<2p+-| (x +- iy)/sqrt(2) |1s>| in nm. Only 1s->2p+- carry dipole
// strength in this geometry; 2p0 is rejected.
double dipole_matrix_element_nm(StateLabel from, StateLabel to, double b_tesla,
                                const DonorParameters& p,
                                const VariationalBasisSpec& basis);

}  // namespace donorthz::spectrum
