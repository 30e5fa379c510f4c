#include "spinres/bounds.hpp"

#include <cmath>

#include "spinres/distribution.hpp"
#include "spinres/fluctuation.hpp"

namespace spinres {

namespace {

void require_gamma(double gamma, const char* who) {
  if (!(gamma > 0.0)) {
    throw std::domain_error(std::string(who) + ": gamma must be positive");
  }
}

}  // namespace

double spinlabor_bound_integral(int C, double p_up, double gamma) {
  require_gamma(gamma, "spinlabor_bound_integral");
  return C * p_up + std::log1p(std::exp(-(C + 1.0) * gamma)) / gamma;
}

double spinlabor_bound_jensen(int C, double gamma) {
  require_gamma(gamma, "spinlabor_bound_jensen");
  return std::log(2.0 / jarzynski_A(C, gamma)) / gamma;
}

double spinlabor_bound_jensen_asym(int C, double p_up, double gamma) {
  require_gamma(gamma, "spinlabor_bound_jensen_asym");
  return -std::log(jarzynski_A_prime(C, p_up, gamma)) / gamma;
}

double spinlabor_bound_universal(double gamma) {
  require_gamma(gamma, "spinlabor_bound_universal");
  return std::log(2.0) / gamma - 0.5;
}

double spintherm_total(int C, double p_up, double gamma) {
  require_gamma(gamma, "spintherm_total");
  ProtocolConfig config;
  config.C = C;
  config.p_up = p_up;
  return mean_spinlabor(config, ReservoirParams::from_gamma(gamma)) + p_up;
}

double spintherm_bound(int C, double p_up, double gamma) {
  require_gamma(gamma, "spintherm_bound");
  return (C + 1.0) * p_up + std::log1p(std::exp(-(C + 1.0) * gamma)) / gamma;
}

double spintherm_bound_universal(double gamma) {
  require_gamma(gamma, "spintherm_bound_universal");
  return std::log(2.0) / gamma;
}

double R_diagnostic(int C, double alpha, double p_up) {
  const ReservoirParams reservoir = ReservoirParams::from_alpha(alpha);
  ProtocolConfig config;
  config.C = C;
  config.p_up = p_up;
  return mean_spinlabor(config, reservoir) - std::log(2.0) / reservoir.gamma;
}

double delta_B(int C, double gamma) {
  require_gamma(gamma, "delta_B");
  return 0.5 * C - std::log(2.0 / (1.0 + std::exp(-C * gamma))) / gamma;
}

BoundsReport make_bounds_report(int C, double alpha, double p_up) {
  const ReservoirParams reservoir = ReservoirParams::from_alpha(alpha);
  const double gamma = reservoir.gamma;
  ProtocolConfig config;
  config.C = C;
  config.p_up = p_up;

  BoundsReport report;
  report.C = C;
  report.alpha = alpha;
  report.p_up = p_up;
  report.mean_L = mean_spinlabor(config, reservoir);
  report.bound_integral = spinlabor_bound_integral(C, p_up, gamma);
  report.bound_jensen = spinlabor_bound_jensen_asym(C, p_up, gamma);
  report.bound_universal_L = spinlabor_bound_universal(gamma);
  report.spintherm_mean = report.mean_L + p_up;
  report.bound_spintherm = spintherm_bound(C, p_up, gamma);
  report.bound_universal_Q = spintherm_bound_universal(gamma);
  report.R = report.mean_L - std::log(2.0) / gamma;
  report.delta_B = delta_B(C, gamma);
  return report;
}

}  // namespace spinres
