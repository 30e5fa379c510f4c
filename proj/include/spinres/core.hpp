#pragma once

#include <stdexcept>

// Reservoir and protocol parameterization for information erasure against a
// spin angular-momentum bath.  Everything downstream works in units hbar = 1:
// spinlabor and spintherm are dimensionless counts of hbar, gamma is the
// inverse spin temperature in 1/hbar.

namespace spinres {

// Raised when an iterative limit fails to settle within the configured
// number of protocol cycles.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// gamma = ln((1 - alpha)/alpha).  Valid for alpha strictly inside (0, 0.5);
// the endpoints are excluded because gamma diverges at 0 and vanishes at 0.5.
double gamma_from_alpha(double alpha);

// Inverse of gamma_from_alpha: alpha = 1/(e^gamma + 1), gamma > 0.
double alpha_from_gamma(double gamma);

// Q_up(m): probability that the memory-ancilla block is spin-up right after
// an equilibration step that follows m completed CNOT steps.  The block then
// exchanges angular momentum with the reservoir in multiples of (m+1)hbar,
// so Q_up(m) = e^{-(m+1)gamma} / (1 + e^{-(m+1)gamma}).
double equilibrium_up_prob(double gamma, int m);

// Polarization at which the reservoir weight ratio sampled by the first
// equilibration equals e^{-1}: alpha = (e^{1/(C+1)} + 1)^{-1}.  Marks the
// crossover between a "cold" (strongly discrete) and "hot" (Gaussian-like)
// reservoir for protocol variation C.
double critical_alpha(int C);

// P_up(n + delta_n) / P_up(n) = e^{-gamma * delta_n}, independent of n.
double reservoir_weight_ratio(double gamma, long long delta_n);

struct ReservoirParams {
  double alpha;  // spin polarization, in (0, 0.5)
  double gamma;  // inverse spin temperature, 1/hbar

  static ReservoirParams from_alpha(double alpha);
  static ReservoirParams from_gamma(double gamma);
};

struct ProtocolConfig {
  int C = 1;                // CNOT steps applied before the first equilibration
  double p_up = 0.5;        // initial probability the memory is spin-up
  int max_cycles = 0;       // total CNOT steps to run; 0 = derive from gamma
  double tail_tol = 1e-14;  // convergence tolerance for m -> infinity limits

  double p_down() const { return 1.0 - p_up; }
  void validate() const;  // throws std::domain_error on a bad field
};

// Effective protocol truncation M.  An explicit max_cycles wins; otherwise M
// is chosen so the residual up-probability Q_up(M) is below both tail_tol and
// 1e-12, making the truncated protocol indistinguishable from the infinite
// one at double precision.
int resolved_max_cycles(const ProtocolConfig& config, double gamma);

}  // namespace spinres
