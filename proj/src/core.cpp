#include "spinres/core.hpp"

#include <algorithm>
#include <cmath>

namespace spinres {

double gamma_from_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 0.5)) {
    throw std::domain_error(
        "gamma_from_alpha: alpha must lie strictly in (0, 0.5)");
  }
  return std::log((1.0 - alpha) / alpha);
}

double alpha_from_gamma(double gamma) {
  if (!(gamma > 0.0)) {
    throw std::domain_error("alpha_from_gamma: gamma must be positive");
  }
  return 1.0 / (std::exp(gamma) + 1.0);
}

double equilibrium_up_prob(double gamma, int m) {
  if (!(gamma > 0.0)) {
    throw std::domain_error("equilibrium_up_prob: gamma must be positive");
  }
  if (m < 0) {
    throw std::domain_error("equilibrium_up_prob: m must be non-negative");
  }
  const double w = std::exp(-(static_cast<double>(m) + 1.0) * gamma);
  return w / (1.0 + w);
}

double critical_alpha(int C) {
  if (C < 0) {
    throw std::domain_error("critical_alpha: C must be non-negative");
  }
  return 1.0 / (std::exp(1.0 / (static_cast<double>(C) + 1.0)) + 1.0);
}

double reservoir_weight_ratio(double gamma, long long delta_n) {
  if (!(gamma > 0.0)) {
    throw std::domain_error("reservoir_weight_ratio: gamma must be positive");
  }
  return std::exp(-gamma * static_cast<double>(delta_n));
}

ReservoirParams ReservoirParams::from_alpha(double alpha) {
  return ReservoirParams{alpha, gamma_from_alpha(alpha)};
}

ReservoirParams ReservoirParams::from_gamma(double gamma) {
  return ReservoirParams{alpha_from_gamma(gamma), gamma};
}

void ProtocolConfig::validate() const {
  if (C < 0) {
    throw std::domain_error("ProtocolConfig: C must be non-negative");
  }
  if (!(p_up >= 0.0 && p_up <= 1.0)) {
    throw std::domain_error("ProtocolConfig: p_up must lie in [0, 1]");
  }
  if (max_cycles != 0 && max_cycles < C + 1) {
    throw std::domain_error("ProtocolConfig: max_cycles must be at least C + 1");
  }
  if (!(tail_tol > 0.0)) {
    throw std::domain_error("ProtocolConfig: tail_tol must be positive");
  }
}

int resolved_max_cycles(const ProtocolConfig& config, double gamma) {
  config.validate();
  if (config.max_cycles > 0) return config.max_cycles;
  if (!(gamma > 0.0)) {
    throw std::domain_error("resolved_max_cycles: gamma must be positive");
  }
  const double target = std::min(config.tail_tol, 1e-12);
  // smallest M with e^{-(M+1) gamma} < target, plus a little slack
  const double need = -std::log(target) / gamma;
  long long M = config.C + static_cast<long long>(std::ceil(need)) + 2;
  M = std::max<long long>(M, config.C + 1);
  if (M > 5'000'000) {
    throw ConvergenceError(
        "resolved_max_cycles: the protocol tail needs more than 5e6 cycles "
        "at this gamma; set max_cycles explicitly or use a larger gamma");
  }
  return static_cast<int>(M);
}

}  // namespace spinres
