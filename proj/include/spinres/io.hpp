#pragma once

#include <string>
#include <vector>

#include "spinres/bounds.hpp"
#include "spinres/distribution.hpp"
#include "spinres/montecarlo.hpp"

// CSV / JSON emitters.  All formatting is fixed so that identical inputs
// always serialize to identical bytes.

namespace spinres {

// Shortest representation that round-trips a double.
std::string format_double(double v);

// header "n,probability"
std::string distribution_csv(const SpinlaborDistribution& dist);

// {"C":..., "gamma":..., "p_up":..., "mean":..., "bound":..., "probs":[...]}
std::string distribution_json(const SpinlaborDistribution& dist, double mean,
                              double bound);

// header "n,count"
std::string batch_csv(const EmpiricalDistribution& batch);

// {"mean":..., "variance":..., "spintherm_mean":..., "jarzynski_lhs":...,
//  "ift_lhs":..., "seed":..., "shots":...}
std::string batch_summary_json(const BatchSummary& summary);

std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport& report);

struct ViolationRow {
  double epsilon;
  double pr_violation;
  double exp_bound;
};

// header "epsilon,pr_violation,exp_bound"
std::string violation_csv(const std::vector<ViolationRow>& rows);

}  // namespace spinres
