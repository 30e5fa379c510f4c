#include "spinres/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spinres/qseries.hpp"

namespace spinres {

namespace {

// Mass below this is dropped when extending the support; the loss over a
// whole protocol stays orders of magnitude under the 1e-10 normalization
// budget.
constexpr double kSupportCutoff = 1e-18;

void trim_trailing(std::vector<double>& probs) {
  while (probs.size() > 1 && probs.back() < kSupportCutoff) probs.pop_back();
}

}  // namespace

double SpinlaborDistribution::prob(long long n) const {
  if (n < 0 || n >= static_cast<long long>(probs.size())) return 0.0;
  return probs[static_cast<size_t>(n)];
}

double SpinlaborDistribution::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

double SpinlaborDistribution::mean() const {
  double acc = 0.0;
  for (size_t n = 0; n < probs.size(); ++n) acc += static_cast<double>(n) * probs[n];
  return acc;
}

double SpinlaborDistribution::variance() const {
  const double mu = mean();
  double acc = 0.0;
  for (size_t n = 0; n < probs.size(); ++n) {
    const double d = static_cast<double>(n) - mu;
    acc += d * d * probs[n];
  }
  return acc;
}

SpinlaborDistribution initial_distribution(const ProtocolConfig& config) {
  return initial_distribution(config, config.C);
}

SpinlaborDistribution initial_distribution(const ProtocolConfig& config, int m) {
  config.validate();
  if (m < 0 || m > config.C) {
    throw std::domain_error(
        "initial_distribution: m must lie in the pre-equilibration phase "
        "0 <= m <= C");
  }
  SpinlaborDistribution dist;
  dist.m = m;
  dist.C = config.C;
  dist.gamma = 0.0;  // not yet coupled to a reservoir
  dist.p_up = config.p_up;
  if (m == 0) {
    dist.probs = {1.0};  // no CNOT yet, cost is identically zero
  } else {
    dist.probs.assign(static_cast<size_t>(m) + 1, 0.0);
    dist.probs.front() = config.p_down();
    dist.probs.back() = config.p_up;
  }
  trim_trailing(dist.probs);
  return dist;
}

SpinlaborDistribution step_distribution(const SpinlaborDistribution& dist,
                                        double gamma) {
  if (dist.is_limit()) {
    throw std::domain_error("step_distribution: distribution is already a limit");
  }
  if (dist.m < dist.C) {
    throw std::domain_error(
        "step_distribution: recurrence applies only after the first "
        "equilibration (m >= C)");
  }
  const double q_up = equilibrium_up_prob(gamma, dist.m);
  const double q_down = 1.0 - q_up;

  SpinlaborDistribution next;
  next.m = dist.m + 1;
  next.C = dist.C;
  next.gamma = gamma;
  next.p_up = dist.p_up;

  const size_t size = dist.probs.size();
  next.probs.assign(size + 1, 0.0);
  for (size_t n = 0; n < size; ++n) {
    next.probs[n] += dist.probs[n] * q_down;
    next.probs[n + 1] += dist.probs[n] * q_up;
  }
  trim_trailing(next.probs);
  return next;
}

SpinlaborDistribution limit_distribution(const ProtocolConfig& config,
                                         const ReservoirParams& reservoir) {
  const int M = resolved_max_cycles(config, reservoir.gamma);
  SpinlaborDistribution dist = initial_distribution(config);
  dist.gamma = reservoir.gamma;
  for (int m = config.C; m < M; ++m) {
    SpinlaborDistribution next = step_distribution(dist, reservoir.gamma);
    double tv = tv_distance(next, dist);
    dist = std::move(next);
    if (tv < config.tail_tol) {
      dist.m = SpinlaborDistribution::kLimit;
      return dist;
    }
  }
  throw ConvergenceError(
      "limit_distribution: total-variation change still above tail_tol at "
      "max_cycles");
}

SpinlaborDistribution post_equilibration_distribution(
    const ProtocolConfig& config, const ReservoirParams& reservoir) {
  ProtocolConfig zeroed = config;
  zeroed.p_up = 0.0;  // suppress the pre-equilibration cost, keep the schedule
  SpinlaborDistribution dist = limit_distribution(zeroed, reservoir);
  dist.p_up = config.p_up;
  return dist;
}

double closed_form_pr(long long n, const ProtocolConfig& config,
                      const ReservoirParams& reservoir) {
  config.validate();
  if (n < 0) {
    throw std::domain_error("closed_form_pr: n must be non-negative");
  }
  const double g = reservoir.gamma;
  const double q = std::exp(-g);
  const int C = config.C;

  // log of prod_{m >= C+1} (1 + q^m): the limiting product of equilibration
  // survival factors, which starts at C+1 because the first equilibration
  // exchanges (C+1) hbar quanta.
  const double log_den = log_q_pochhammer_inf(-std::pow(q, C + 1), q);

  // log of q^{k(C + (k+1)/2)} / (q; q)_k
  auto log_branch = [&](long long k) {
    double log_num = -g * (static_cast<double>(k) * C +
                           static_cast<double>(k) * (k + 1) / 2.0);
    double log_qq = 0.0;
    double qi = q;
    for (long long i = 1; i <= k; ++i) {
      log_qq += std::log1p(-qi);
      qi *= q;
    }
    return log_num - log_qq;
  };

  double pr = 0.0;
  if (config.p_down() > 0.0) {
    pr += config.p_down() * std::exp(log_branch(n) - log_den);
  }
  if (n >= C && config.p_up > 0.0) {
    pr += config.p_up * std::exp(log_branch(n - C) - log_den);
  }
  return pr;
}

double finite_step_closed_form(long long n, long long j,
                               const ProtocolConfig& config,
                               const ReservoirParams& reservoir) {
  config.validate();
  if (n < 0) {
    throw std::domain_error("finite_step_closed_form: n must be non-negative");
  }
  if (j <= n) {
    throw std::domain_error(
        "finite_step_closed_form: the A(j, n) closed form requires j > n");
  }
  const double g = reservoir.gamma;
  const double q = std::exp(-g);
  const int C = config.C;

  // prod_{m=C+1}^{C+j} 1/(1 + q^m), accumulated in log space
  double log_sprod = 0.0;
  for (long long mm = C + 1; mm <= C + j; ++mm) {
    log_sprod -= std::log1p(std::pow(q, static_cast<double>(mm)));
  }

  // A(j, k) r^{k (C+j)} regrouped per factor into
  //   q^{kC} q^{k(k+1)/2} prod_{i=0}^{k-1} (1 - q^{j-i}) / (1 - q^{i+1}),
  // which keeps every factor in (0, 1] regardless of j.
  auto log_a_shifted = [&](long long k) {
    double acc = -g * (static_cast<double>(k) * C +
                       static_cast<double>(k) * (k + 1) / 2.0);
    for (long long i = 0; i < k; ++i) {
      acc += std::log1p(-std::pow(q, static_cast<double>(j - i)));
      acc -= std::log1p(-std::pow(q, static_cast<double>(i + 1)));
    }
    return acc;
  };

  double pr = 0.0;
  if (config.p_down() > 0.0) {
    pr += config.p_down() * std::exp(log_a_shifted(n) + log_sprod);
  }
  if (n >= C && config.p_up > 0.0) {
    pr += config.p_up * std::exp(log_a_shifted(n - C) + log_sprod);
  }
  return pr;
}

double mean_spinlabor(const ProtocolConfig& config,
                      const ReservoirParams& reservoir) {
  config.validate();
  double acc = config.C * config.p_up;
  const long long cap = 100'000'000;
  for (long long m = config.C; m < cap; ++m) {
    const double w = std::exp(-(static_cast<double>(m) + 1.0) * reservoir.gamma);
    const double inc = w / (1.0 + w);
    acc += inc;
    if (inc < config.tail_tol) return acc;
  }
  throw ConvergenceError("mean_spinlabor: tail did not converge");
}

double variance_spinlabor(const ProtocolConfig& config,
                          const ReservoirParams& reservoir) {
  config.validate();
  const double c = config.C;
  double var = c * c * (config.p_up - config.p_up * config.p_up);
  double sum_q = 0.0;     // sum_{k} Q_up(k) so far
  double nested = 0.0;    // sum_{n} Q_up(n) * sum_{k < n} Q_up(k)
  const long long cap = 100'000'000;
  for (long long m = config.C; m < cap; ++m) {
    const double w = std::exp(-(static_cast<double>(m) + 1.0) * reservoir.gamma);
    const double q_up = w / (1.0 + w);
    nested += q_up * sum_q;
    sum_q += q_up;
    if (q_up < config.tail_tol) {
      return var + 2.0 * nested + sum_q - sum_q * sum_q;
    }
  }
  throw ConvergenceError("variance_spinlabor: tail did not converge");
}

double tv_distance(const SpinlaborDistribution& a,
                   const SpinlaborDistribution& b) {
  const size_t size = std::max(a.probs.size(), b.probs.size());
  double acc = 0.0;
  for (size_t n = 0; n < size; ++n) {
    acc += std::fabs(a.prob(static_cast<long long>(n)) -
                     b.prob(static_cast<long long>(n)));
  }
  return 0.5 * acc;
}

double tv_distance_to_gaussian(const SpinlaborDistribution& dist, double mu,
                               double sigma) {
  if (!(sigma > 0.0)) {
    throw std::domain_error("tv_distance_to_gaussian: sigma must be positive");
  }
  // window wide enough that the neglected Gaussian mass is ~1e-19
  const long long lo = std::min<long long>(
      0, static_cast<long long>(std::floor(mu - 10.0 * sigma)));
  const long long hi = std::max<long long>(
      dist.n_max(), static_cast<long long>(std::ceil(mu + 10.0 * sigma)));

  std::vector<double> weight(static_cast<size_t>(hi - lo + 1));
  double norm = 0.0;
  for (long long n = lo; n <= hi; ++n) {
    const double d = (static_cast<double>(n) - mu) / sigma;
    const double w = std::exp(-0.5 * d * d);
    weight[static_cast<size_t>(n - lo)] = w;
    norm += w;
  }
  double acc = 0.0;
  for (long long n = lo; n <= hi; ++n) {
    acc += std::fabs(dist.prob(n) - weight[static_cast<size_t>(n - lo)] / norm);
  }
  return 0.5 * acc;
}

double gaussian_distance(const SpinlaborDistribution& dist) {
  const double mu = dist.mean();
  const double var = dist.variance();
  if (var < 1e-12) {
    // degenerate distribution: compare against a point mass at the mean
    const long long at = std::llround(mu);
    double acc = 0.0;
    for (long long n = 0; n <= dist.n_max(); ++n) {
      acc += std::fabs(dist.prob(n) - (n == at ? 1.0 : 0.0));
    }
    if (at < 0 || at > dist.n_max()) acc += 1.0;
    return 0.5 * acc;
  }
  return tv_distance_to_gaussian(dist, mu, std::sqrt(var));
}

}  // namespace spinres
