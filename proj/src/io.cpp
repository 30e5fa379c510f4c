#include "spinres/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace spinres {

std::string format_double(double v) {
  // try increasing precision until the text round-trips
  char buf[40];
  for (int prec = 12; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string distribution_csv(const SpinlaborDistribution& dist) {
  std::ostringstream out;
  out << "n,probability\n";
  for (long long n = 0; n <= dist.n_max(); ++n) {
    out << n << ',' << format_double(dist.prob(n)) << '\n';
  }
  return out.str();
}

std::string distribution_json(const SpinlaborDistribution& dist, double mean,
                              double bound) {
  nlohmann::ordered_json j;
  j["C"] = dist.C;
  j["gamma"] = dist.gamma;
  j["p_up"] = dist.p_up;
  j["mean"] = mean;
  j["bound"] = bound;
  j["probs"] = dist.probs;
  return j.dump(2) + "\n";
}

std::string batch_csv(const EmpiricalDistribution& batch) {
  std::ostringstream out;
  out << "n,count\n";
  for (size_t n = 0; n < batch.counts.size(); ++n) {
    out << n << ',' << batch.counts[n] << '\n';
  }
  return out.str();
}

std::string batch_summary_json(const BatchSummary& summary) {
  nlohmann::ordered_json j;
  j["mean"] = summary.mean;
  j["variance"] = summary.variance;
  j["spintherm_mean"] = summary.spintherm_mean;
  j["jarzynski_lhs"] = summary.jarzynski_lhs;
  j["ift_lhs"] = summary.ift_lhs;
  j["seed"] = summary.seed;
  j["shots"] = summary.shots;
  return j.dump(2) + "\n";
}

std::string bounds_csv_header() {
  return "C,alpha,p_up,mean_L,bound_integral,bound_jensen,bound_universal_L,"
         "spintherm_mean,bound_spintherm,bound_universal_Q,R,delta_B";
}

std::string bounds_csv_row(const BoundsReport& r) {
  std::ostringstream out;
  out << r.C << ',' << format_double(r.alpha) << ',' << format_double(r.p_up)
      << ',' << format_double(r.mean_L) << ',' << format_double(r.bound_integral)
      << ',' << format_double(r.bound_jensen) << ','
      << format_double(r.bound_universal_L) << ','
      << format_double(r.spintherm_mean) << ','
      << format_double(r.bound_spintherm) << ','
      << format_double(r.bound_universal_Q) << ',' << format_double(r.R) << ','
      << format_double(r.delta_B);
  return out.str();
}

std::string violation_csv(const std::vector<ViolationRow>& rows) {
  std::ostringstream out;
  out << "epsilon,pr_violation,exp_bound\n";
  for (const ViolationRow& row : rows) {
    out << format_double(row.epsilon) << ',' << format_double(row.pr_violation)
        << ',' << format_double(row.exp_bound) << '\n';
  }
  return out.str();
}

}  // namespace spinres
