#include "spinres/qseries.hpp"

#include <cmath>

namespace spinres {

double q_pochhammer(double a, double q, long long n) {
  if (n < 0) {
    throw std::domain_error("q_pochhammer: n must be non-negative");
  }
  double acc = 1.0;
  double aqk = a;  // a q^k
  for (long long k = 0; k < n; ++k) {
    acc *= 1.0 - aqk;
    aqk *= q;
  }
  return acc;
}

double q_pochhammer_inf(double a, double q) {
  if (!(std::fabs(q) < 1.0)) {
    throw std::domain_error(
        "q_pochhammer_inf: infinite product requires |q| < 1");
  }
  if (a == 0.0) return 1.0;
  double acc = 1.0;
  double aqk = a;
  while (std::fabs(aqk) >= 1e-16) {
    acc *= 1.0 - aqk;
    aqk *= q;
  }
  return acc;
}

double log_q_pochhammer_inf(double a, double q) {
  if (!(std::fabs(q) < 1.0)) {
    throw std::domain_error(
        "log_q_pochhammer_inf: infinite product requires |q| < 1");
  }
  double acc = 0.0;
  double aqk = a;
  while (std::fabs(aqk) >= 1e-18) {
    if (aqk >= 1.0) {
      throw std::domain_error(
          "log_q_pochhammer_inf: encountered a non-positive factor");
    }
    acc += std::log1p(-aqk);
    aqk *= q;
  }
  return acc;
}

}  // namespace spinres
