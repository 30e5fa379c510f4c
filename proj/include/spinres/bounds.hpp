#pragma once

#include "spinres/core.hpp"

// Closed-form lower bounds on the spinlabor and spintherm costs of erasure,
// plus the diagnostics comparing them.  Spintherm is reservoir-positive
// throughout: a positive value is angular momentum absorbed by the bath.

namespace spinres {

// C p_up + gamma^{-1} ln(1 + e^{-(C+1) gamma}); integral lower bound of the
// mean spinlabor sum.
double spinlabor_bound_integral(int C, double p_up, double gamma);

// gamma^{-1} ln(2/A), the Jensen bound for maximal stored information.
double spinlabor_bound_jensen(int C, double gamma);

// -gamma^{-1} ln A', the Jensen bound at arbitrary memory bias; equals the
// symmetric form at p_up = 1/2.
double spinlabor_bound_jensen_asym(int C, double p_up, double gamma);

// gamma^{-1} ln 2 - 1/2, protocol-independent.
double spinlabor_bound_universal(double gamma);

// Mean spintherm absorbed by the reservoir over a full erasure:
// mean spinlabor + p_up.
double spintherm_total(int C, double p_up, double gamma);

// (C+1) p_up + gamma^{-1} ln(1 + e^{-(C+1) gamma}).
double spintherm_bound(int C, double p_up, double gamma);

// gamma^{-1} ln 2, protocol-independent.
double spintherm_bound_universal(double gamma);

// Mean spinlabor minus the original erasure bound gamma^{-1} ln 2.  Negative
// where the average spinlabor undercuts that bound.
double R_diagnostic(int C, double alpha, double p_up);

// Gap between the integral and Jensen bounds at p_up = 1/2:
// C/2 - gamma^{-1} ln(2/(1 + e^{-C gamma})).  Zero exactly at C = 0.
double delta_B(int C, double gamma);

// Everything above for one (C, alpha, p_up) point, in one row.
struct BoundsReport {
  int C;
  double alpha;
  double p_up;
  double mean_L;
  double bound_integral;
  double bound_jensen;
  double bound_universal_L;
  double spintherm_mean;
  double bound_spintherm;
  double bound_universal_Q;
  double R;
  double delta_B;
};

BoundsReport make_bounds_report(int C, double alpha, double p_up);

}  // namespace spinres
