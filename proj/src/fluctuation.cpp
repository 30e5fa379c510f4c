#include "spinres/fluctuation.hpp"

#include <cmath>

namespace spinres {

namespace {

void require_limit(const SpinlaborDistribution& dist, const char* who) {
  if (!dist.is_limit()) {
    throw std::domain_error(std::string(who) +
                            ": requires a completed-erasure (limit) distribution");
  }
}

void require_mixed_memory(double p_up, const char* who) {
  if (!(p_up > 0.0 && p_up < 1.0)) {
    throw std::domain_error(std::string(who) +
                            ": degenerate memory, p_up must lie strictly in (0, 1)");
  }
}

}  // namespace

std::vector<JointOutcome> joint_limit_distribution(
    const ProtocolConfig& config, const ReservoirParams& reservoir) {
  const SpinlaborDistribution base =
      post_equilibration_distribution(config, reservoir);
  std::vector<JointOutcome> joint;
  joint.reserve(2 * base.probs.size());
  for (long long n = 0; n <= base.n_max(); ++n) {
    if (config.p_down() > 0.0) {
      joint.push_back({false, n, config.p_down() * base.prob(n)});
    }
  }
  for (long long n = 0; n <= base.n_max(); ++n) {
    if (config.p_up > 0.0) {
      joint.push_back({true, n + config.C, config.p_up * base.prob(n)});
    }
  }
  return joint;
}

double jarzynski_lhs(const SpinlaborDistribution& dist, double gamma) {
  require_limit(dist, "jarzynski_lhs");
  double acc = 0.0;
  for (long long n = dist.n_max(); n >= 0; --n) {
    acc += std::exp(-gamma * static_cast<double>(n)) * dist.prob(n);
  }
  return acc;
}

double jarzynski_A(int C, double gamma) {
  if (C < 0) throw std::domain_error("jarzynski_A: C must be non-negative");
  return (1.0 + std::exp(-C * gamma)) / (1.0 + std::exp(-(C + 1.0) * gamma));
}

double jarzynski_A_prime(int C, double p_up, double gamma) {
  if (C < 0) throw std::domain_error("jarzynski_A_prime: C must be non-negative");
  return (1.0 - p_up + p_up * std::exp(-C * gamma)) /
         (1.0 + std::exp(-(C + 1.0) * gamma));
}

double exponential_average(const SpinlaborDistribution& dist, double gamma) {
  const double lhs = jarzynski_lhs(dist, gamma);
  if (!(lhs > 0.0)) {
    throw std::domain_error("exponential_average: <e^{-gamma L}> must be positive");
  }
  return -std::log(lhs) / gamma;
}

FreeSpinChange delta_free_spin(int C, double p_up, double gamma, int n_bar) {
  if (C < 0) throw std::domain_error("delta_free_spin: C must be non-negative");
  if (n_bar < 1) throw std::domain_error("delta_free_spin: n_bar must be positive");
  require_mixed_memory(p_up, "delta_free_spin");
  const double p_down = 1.0 - p_up;
  const double log_ratio = std::log(p_down / p_up);
  FreeSpinChange out;
  out.n_bar = n_bar;
  out.gamma_M_initial = log_ratio;  // one correlated spin before any CNOT
  out.log_Z_initial = 0.5 * (n_bar + 1.0) * log_ratio - std::log(p_down);
  out.log_Z_final = 0.5 * (n_bar + 1.0) * gamma;
  out.delta_F = -(out.log_Z_final - out.log_Z_initial) / gamma;
  return out;
}

double stochastic_entropy_production(bool initial_up, long long spinlabor,
                                     double p_up, double gamma, int n_bar) {
  require_mixed_memory(p_up, "stochastic_entropy_production");
  if (n_bar < 1) {
    throw std::domain_error("stochastic_entropy_production: n_bar must be positive");
  }
  const double log_ratio = std::log((1.0 - p_up) / p_up);
  const double dF = -(0.5 * (n_bar + 1.0) * (gamma - log_ratio) +
                      std::log(1.0 - p_up)) /
                    gamma;
  const double n_i = initial_up ? 1.0 : 0.0;
  return gamma * (static_cast<double>(spinlabor) - dF) -
         (log_ratio - gamma) * (n_i - 0.5 * (n_bar + 1.0));
}

double violation_baseline(int C, double p_up, double gamma) {
  return -std::log(jarzynski_A_prime(C, p_up, gamma)) / gamma;
}

ViolationPoint violation_probability(const SpinlaborDistribution& dist,
                                     double gamma, double baseline,
                                     double epsilon) {
  require_limit(dist, "violation_probability");
  if (epsilon < 0.0) {
    throw std::domain_error("violation_probability: epsilon must be non-negative");
  }
  const double threshold = baseline - epsilon;
  double acc = 0.0;
  for (long long n = 0; n <= dist.n_max(); ++n) {
    if (static_cast<double>(n) <= threshold) acc += dist.prob(n);
  }
  return {acc, std::exp(-gamma * epsilon)};
}

ViolationPoint violation_probability(const SpinlaborDistribution& dist,
                                     double gamma, double epsilon) {
  const double baseline = violation_baseline(dist.C, dist.p_up, gamma);
  ViolationPoint point = violation_probability(dist, gamma, baseline, epsilon);
  if (point.pr_v > point.bound * (1.0 + 1e-9) + 1e-15) {
    throw std::logic_error(
        "violation_probability: cumulative probability exceeded its "
        "exponential bound");
  }
  return point;
}

double ift_expectation(const std::vector<JointOutcome>& joint,
                       const ProtocolConfig& config,
                       const ReservoirParams& reservoir, int n_bar) {
  require_mixed_memory(config.p_up, "ift_expectation");
  if (n_bar == 0) n_bar = resolved_max_cycles(config, reservoir.gamma);
  double acc = 0.0;
  for (const JointOutcome& outcome : joint) {
    const double sigma = stochastic_entropy_production(
        outcome.initial_up, outcome.spinlabor, config.p_up, reservoir.gamma,
        n_bar);
    acc += outcome.probability * std::exp(-sigma);
  }
  return acc;
}

EntropyReport mean_entropy_production(const std::vector<JointOutcome>& joint,
                                      const ProtocolConfig& config,
                                      const ReservoirParams& reservoir,
                                      int n_bar) {
  require_mixed_memory(config.p_up, "mean_entropy_production");
  if (n_bar == 0) n_bar = resolved_max_cycles(config, reservoir.gamma);
  const double gamma = reservoir.gamma;

  EntropyReport report;
  report.sigma_total = 0.0;
  for (const JointOutcome& outcome : joint) {
    report.sigma_total +=
        outcome.probability *
        stochastic_entropy_production(outcome.initial_up, outcome.spinlabor,
                                      config.p_up, gamma, n_bar);
  }

  // Memory-ancilla part of the ensemble average.  The residual term
  // gamma (n_bar+1) Q_up(n_bar) is exponentially small for the resolved
  // truncation and the rest is n_bar-independent.
  const double log_ratio = std::log(config.p_down() / config.p_up);
  report.sigma_memory =
      gamma * (n_bar + 1.0) * equilibrium_up_prob(gamma, n_bar) +
      std::log(config.p_down()) - config.p_up * log_ratio;

  report.gamma_spintherm =
      gamma * (mean_spinlabor(config, reservoir) + config.p_up);
  return report;
}

}  // namespace spinres
