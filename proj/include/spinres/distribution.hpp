#pragma once

#include <vector>

#include "spinres/core.hpp"

namespace spinres {

// Probability mass over the accumulated spinlabor n (units hbar) after m
// CNOT steps, or at the completed-erasure limit.  Support is dense over
// 0..n_max; entries beyond n_max are exactly zero.
struct SpinlaborDistribution {
  static constexpr int kLimit = -1;  // m marker for the m -> infinity limit

  int m = 0;  // completed CNOT steps, or kLimit
  int C = 0;
  double gamma = 0.0;
  double p_up = 0.5;
  std::vector<double> probs;  // index n = 0..n_max

  bool is_limit() const { return m == kLimit; }
  long long n_max() const { return static_cast<long long>(probs.size()) - 1; }
  double prob(long long n) const;
  double total() const;
  double mean() const;
  double variance() const;
};

// State after the pre-equilibration phase (m = C): the cost is C hbar with
// probability p_up and zero otherwise.
SpinlaborDistribution initial_distribution(const ProtocolConfig& config);
// Same, frozen part-way through the phase at 0 <= m <= C.
SpinlaborDistribution initial_distribution(const ProtocolConfig& config, int m);

// One CNOT step of the recurrence
//   P_{m+1}(n) = P_m(n) Q_down(m) + P_m(n-1) Q_up(m),
// valid once the first equilibration has happened (dist.m >= C).
SpinlaborDistribution step_distribution(const SpinlaborDistribution& dist,
                                        double gamma);

// Iterates the recurrence until the per-step total-variation change drops
// below config.tail_tol, then marks the result as the limit.  Throws
// ConvergenceError if max_cycles is exhausted first.
SpinlaborDistribution limit_distribution(const ProtocolConfig& config,
                                         const ReservoirParams& reservoir);

// Cost distribution of the cycles that follow the first equilibration alone
// (a point mass at zero evolved from m = C).  The full limit distribution is
// the mixture p_down * D + p_up * shift_C(D) of this distribution D.
SpinlaborDistribution post_equilibration_distribution(
    const ProtocolConfig& config, const ReservoirParams& reservoir);

// Closed-form Pr(L = n hbar) for the completed erasure.  Matches
// limit_distribution entrywise to ~1e-12.
double closed_form_pr(long long n, const ProtocolConfig& config,
                      const ReservoirParams& reservoir);

// Closed-form P_{C+j}(n) after finitely many steps; requires j > n.
double finite_step_closed_form(long long n, long long j,
                               const ProtocolConfig& config,
                               const ReservoirParams& reservoir);

// <L> = C p_up + sum_{m >= C} Q_up(m), tail summed to config.tail_tol.
double mean_spinlabor(const ProtocolConfig& config,
                      const ReservoirParams& reservoir);

// Var(L) = C^2 p_up (1 - p_up)
//          + 2 sum_{n >= C} sum_{C <= k < n} Q_up(k) Q_up(n)
//          + sum_{n >= C} Q_up(n) - (sum_{n >= C} Q_up(n))^2.
double variance_spinlabor(const ProtocolConfig& config,
                          const ReservoirParams& reservoir);

// Total-variation distance between two spinlabor distributions.
double tv_distance(const SpinlaborDistribution& a,
                   const SpinlaborDistribution& b);

// Total-variation distance between dist and a Gaussian of mean mu and
// standard deviation sigma discretized on the integer lattice.
double tv_distance_to_gaussian(const SpinlaborDistribution& dist, double mu,
                               double sigma);

// Same, with the Gaussian moments matched to the distribution.
double gaussian_distance(const SpinlaborDistribution& dist);

}  // namespace spinres
