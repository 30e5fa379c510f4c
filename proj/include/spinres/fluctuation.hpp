#pragma once

#include <vector>

#include "spinres/core.hpp"
#include "spinres/distribution.hpp"

// Jarzynski-like equality, free spin angular momentum, probability of
// violation, and the integral fluctuation theorem, all evaluated exactly
// from limit distributions.

namespace spinres {

// One point of the exact joint distribution over (initial memory state,
// total spinlabor).  Conditioned on the initial state the spinlabor is the
// pre-equilibration cost C * [initial_up] plus an independent draw from the
// post-equilibration distribution.
struct JointOutcome {
  bool initial_up;
  long long spinlabor;  // units hbar
  double probability;
};

std::vector<JointOutcome> joint_limit_distribution(
    const ProtocolConfig& config, const ReservoirParams& reservoir);

// <e^{-gamma L}> over a limit distribution.
double jarzynski_lhs(const SpinlaborDistribution& dist, double gamma);

// Closed-form identity values: for maximal stored information (p_up = 1/2)
// the exponential average equals A/2 with
//   A = (1 + e^{-C gamma}) / (1 + e^{-(C+1) gamma}),
// and for general memory bias it equals
//   A' = (p_down + p_up e^{-C gamma}) / (1 + e^{-(C+1) gamma}).
double jarzynski_A(int C, double gamma);
double jarzynski_A_prime(int C, double p_up, double gamma);

// -gamma^{-1} ln <e^{-gamma L}>.
double exponential_average(const SpinlaborDistribution& dist, double gamma);

struct FreeSpinChange {
  double delta_F;          // change in free spin angular momentum, units hbar
  int n_bar;               // ancilla count entering the endpoint partition sums
  double gamma_M_initial;  // initial inverse spin temperature of the memory
  double log_Z_initial;
  double log_Z_final;
};

// Free-spin change for the whole procedure,
//   dF = -gamma^{-1} [ (n_bar+1)(gamma - ln(p_down/p_up))/2 + ln p_down ].
// Throws for the degenerate memory p_up in {0, 1}.
FreeSpinChange delta_free_spin(int C, double p_up, double gamma, int n_bar);

// Stochastic entropy production of one completed erasure trajectory,
//   sigma = gamma (L - dF) - (ln(p_down/p_up) - gamma)(n_i - (n_bar+1)/2),
// with n_i = 1 if the memory started spin-up and 0 otherwise.  The n_bar
// dependence cancels between the two terms.
double stochastic_entropy_production(bool initial_up, long long spinlabor,
                                     double p_up, double gamma, int n_bar);

// Reference bound entering the probability of violation, -ln(A')/gamma.
// Reduces to gamma^{-1} ln(2/A) for p_up = 1/2.
double violation_baseline(int C, double p_up, double gamma);

struct ViolationPoint {
  double pr_v;   // Pr(L <= baseline - epsilon)
  double bound;  // e^{-gamma epsilon}
};

// Violation probability against the Jensen baseline above; the bound
// e^{-gamma epsilon} is guaranteed and checked.
ViolationPoint violation_probability(const SpinlaborDistribution& dist,
                                     double gamma, double epsilon);
// Same cumulative sum against an arbitrary baseline; e^{-gamma epsilon} is
// reported for reference but not asserted.
ViolationPoint violation_probability(const SpinlaborDistribution& dist,
                                     double gamma, double baseline,
                                     double epsilon);

// <e^{-sigma}> over the exact joint distribution; equals 1 for any n_bar.
double ift_expectation(const std::vector<JointOutcome>& joint,
                       const ProtocolConfig& config,
                       const ReservoirParams& reservoir, int n_bar);

struct EntropyReport {
  double sigma_total;      // <sigma> of the combined system, >= 0
  double sigma_memory;     // memory-ancilla part alone
  double gamma_spintherm;  // gamma times the mean spintherm absorbed by the
                           // reservoir; >= -sigma_memory
};

// n_bar = 0 picks the resolved protocol truncation.
EntropyReport mean_entropy_production(const std::vector<JointOutcome>& joint,
                                      const ProtocolConfig& config,
                                      const ReservoirParams& reservoir,
                                      int n_bar = 0);

}  // namespace spinres
