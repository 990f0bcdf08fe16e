#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "donorthz/experiment.hpp"

namespace donorthz::fitting {

enum class Parameter { OmegaR, Gamma2, Gamma3, Scale, Offset };

std::string to_string(Parameter p);
Parameter parameter_from_string(const std::string& name);

// Full parameter vector of the stroboscopic forward model.
struct ModelParams {
  double omega_r = 0.0;  // rad/s
  double gamma2 = 0.0;   // s^-1
  double gamma3 = 0.0;   // s^-1
  double scale = 1.0;    // a.u.
  double offset = 0.0;   // a.u.

  double get(Parameter p) const;
  void set(Parameter p, double v);
};

// scale * (1 - rho11(t_p)) + offset per width, on resonance, Gamma1 = 0.
std::vector<double> forward_model(const ModelParams& params,
                                  const std::vector<double>& widths_ps);

enum class Parametrization { Log, Linear };

struct FitProblem {
  experiment::RabiTrace trace;
  std::vector<Parameter> free_parameters = {
      Parameter::OmegaR, Parameter::Gamma2, Parameter::Gamma3,
      Parameter::Scale};
  ModelParams initial_guess;  // also carries the fixed values
  // Positive bounds per free parameter; defaults span wide decades.
  std::map<Parameter, std::pair<double, double>> bounds;
  Parametrization parametrization = Parametrization::Log;
  int restarts = 3;
  std::uint64_t restart_seed = 1;
  long max_iterations = 100000;
  // Optional per-accepted-iteration observer of the best SSE.
  std::function<void(double)> sse_observer;
};

struct FitResult {
  ModelParams parameters;
  double sse = 0.0;
  long iterations = 0;
  bool converged = false;
};

// Nelder-Mead simplex minimization of the residual sum of squares, in
// log-parameter space by default (positivity by construction). Converged
// when the relative simplex spread falls below 1e-8; otherwise the best
// vertex so far is returned with converged = false.
FitResult fit(const FitProblem& problem);

// (1/gamma2, 1/gamma3) in ps.
std::pair<double, double> timescales_ps(const FitResult& result);

}  // namespace donorthz::fitting
