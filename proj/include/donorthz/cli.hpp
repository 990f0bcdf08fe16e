#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "donorthz/dynamics.hpp"
#include "donorthz/experiment.hpp"
#include "donorthz/fitting.hpp"
#include "donorthz/spectrum.hpp"

namespace donorthz::cli {

// Structured run configuration; a JSON file may set any field and command
// line flags override it. The effective configuration is echoed into the
// output directory for provenance.
struct RunConfig {
  spectrum::DonorParameters donor;
  spectrum::VariationalBasisSpec basis;
  double stage_phase_offset_rad = 0.0;
  dynamics::DampingRates rates{0.0, 1.98e11, 1.22e11};
  double pulse_rise_ps = 0.0;
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 1;

  void validate() const;
};

RunConfig load_config(const std::filesystem::path& json_path);
void echo_config(const RunConfig& cfg);  // writes <out_dir>/config.json

struct SpectrumArgs {
  double b_min = 0.0;
  double b_max = 4.0;
  int steps = 81;
};

struct ResonanceArgs {
  double frequency_thz = 0.0;
  spectrum::StateLabel transition = spectrum::StateLabel::P2Plus;
  double b_lo = 0.0;
  double b_hi = 5.0;
};

struct PolscanArgs {
  spectrum::StateLabel transition = spectrum::StateLabel::P2Plus;
  std::string field = "both";  // "+z", "-z" or "both"
  double wavelength_mm = 0.1185;
  double d_min_mm = 0.0;
  double d_max_mm = 0.1185;  // >= one period (lambda/2) by default
  int steps = 49;
  experiment::Distortion distortion;
  double intensity = 1.0;
  double offset = 0.0;
  double noise_sigma = 0.0;
};

struct RabiArgs {
  std::vector<std::string> polarizations = {"sigma+", "pi_x", "pi_y",
                                            "sigma-"};
  spectrum::StateLabel transition = spectrum::StateLabel::P2Plus;
  std::string field = "+z";
  double e_peak_v_per_m = 3.7059e4;
  double x12_nm = 0.0;  // 0: derive from the level solver at b_tesla
  double frequency_thz = 2.54;
  double b_tesla = 3.62;
  double w_min_ps = 0.0;
  double w_max_ps = 40.0;
  int steps = 81;
  double noise_sigma = 0.0;
};

struct FitArgs {
  std::filesystem::path trace_csv;
  std::vector<std::string> free_parameters = {"omega_r", "gamma2", "gamma3",
                                              "scale"};
  std::map<std::string, double> fixed;    // e.g. {"offset", 0.0}
  std::map<std::string, double> guesses;  // overrides the heuristics
  std::string parametrization = "log";
  int restarts = 3;
};

// Each command writes its outputs under cfg.out_dir and throws InputError
// or NumericalError on failure; the binary maps these to exit codes 1 / 2.
void cmd_spectrum(const RunConfig& cfg, const SpectrumArgs& args);
void cmd_resonance(const RunConfig& cfg, const ResonanceArgs& args);
void cmd_polscan(const RunConfig& cfg, const PolscanArgs& args);
void cmd_rabi(const RunConfig& cfg, const RabiArgs& args);
void cmd_fit(const RunConfig& cfg, const FitArgs& args);

// Deterministic end-to-end battery: level diagram, stage characterization,
// polarizer scans and their sinusoid fits, Rabi traces, and a seeded noisy
// fit round trip. Identical config + seed gives byte-identical outputs.
void cmd_selftest(const RunConfig& cfg);

}  // namespace donorthz::cli
