#include "spinres/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "spinres/fluctuation.hpp"

namespace spinres {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

ShotRng::ShotRng(std::uint64_t seed, std::uint64_t shot)
    : state_(mix64(seed ^ mix64(shot + kGolden))) {}

double ShotRng::uniform() {
  state_ += kGolden;
  return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
}

TrajectoryRecord simulate_shot(ShotRng& rng, const ProtocolConfig& config,
                               const ReservoirParams& reservoir,
                               bool record_steps) {
  const int M = resolved_max_cycles(config, reservoir.gamma);
  TrajectoryRecord traj;
  traj.total_cnots = M;
  if (record_steps) traj.steps.reserve(2 * (M - config.C) + config.C + 1);

  bool up = rng.uniform() < config.p_up;
  traj.initial_up = up;

  // pre-equilibration CNOT phase: each step costs hbar while the memory is up
  for (int i = 0; i < config.C; ++i) {
    const long long cost = up ? 1 : 0;
    traj.spinlabor += cost;
    if (record_steps) traj.steps.push_back({StepKind::kCnot, up, cost});
  }

  // alternating equilibration / CNOT cycles, ending on an equilibration
  for (int m = config.C; m <= M; ++m) {
    const bool up_next = rng.uniform() < equilibrium_up_prob(reservoir.gamma, m);
    const long long dq =
        (static_cast<long long>(m) + 1) *
        ((up ? 1LL : 0LL) - (up_next ? 1LL : 0LL));
    traj.spintherm_to_reservoir += dq;
    up = up_next;
    if (record_steps) traj.steps.push_back({StepKind::kEquilibrate, up, dq});
    if (m < M) {
      const long long cost = up ? 1 : 0;
      traj.spinlabor += cost;
      if (record_steps) traj.steps.push_back({StepKind::kCnot, up, cost});
    }
  }
  traj.final_up = up;
  return traj;
}

TrajectoryRecord simulate_shot(std::uint64_t seed, std::uint64_t shot,
                               const ProtocolConfig& config,
                               const ReservoirParams& reservoir,
                               bool record_steps) {
  ShotRng rng(seed, shot);
  return simulate_shot(rng, config, reservoir, record_steps);
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
  shots += other.shots;
  if (counts.size() < other.counts.size()) counts.resize(other.counts.size(), 0);
  if (counts_up.size() < other.counts_up.size())
    counts_up.resize(other.counts_up.size(), 0);
  for (size_t n = 0; n < other.counts.size(); ++n) counts[n] += other.counts[n];
  for (size_t n = 0; n < other.counts_up.size(); ++n)
    counts_up[n] += other.counts_up[n];
  spintherm_sum += other.spintherm_sum;
  spintherm_sq_sum += other.spintherm_sq_sum;
  final_up_count += other.final_up_count;
}

double EmpiricalDistribution::mean() const {
  if (shots == 0) return 0.0;
  long long weighted = 0;
  for (size_t n = 0; n < counts.size(); ++n) {
    weighted += static_cast<long long>(n) * static_cast<long long>(counts[n]);
  }
  return static_cast<double>(weighted) / static_cast<double>(shots);
}

double EmpiricalDistribution::variance() const {
  if (shots == 0) return 0.0;
  long long sq = 0;
  for (size_t n = 0; n < counts.size(); ++n) {
    sq += static_cast<long long>(n) * static_cast<long long>(n) *
          static_cast<long long>(counts[n]);
  }
  const double mu = mean();
  return static_cast<double>(sq) / static_cast<double>(shots) - mu * mu;
}

double EmpiricalDistribution::tv_distance_to(
    const SpinlaborDistribution& exact) const {
  const size_t size =
      std::max(counts.size(), static_cast<size_t>(exact.n_max() + 1));
  double acc = 0.0;
  for (size_t n = 0; n < size; ++n) {
    const double empirical =
        n < counts.size()
            ? static_cast<double>(counts[n]) / static_cast<double>(shots)
            : 0.0;
    acc += std::fabs(empirical - exact.prob(static_cast<long long>(n)));
  }
  return 0.5 * acc;
}

EmpiricalDistribution simulate_batch(std::uint64_t seed, std::uint64_t shots,
                                     const ProtocolConfig& config,
                                     const ReservoirParams& reservoir,
                                     unsigned workers) {
  config.validate();
  if (shots < 1) {
    throw std::domain_error("simulate_batch: shots must be at least 1");
  }
  const int M = resolved_max_cycles(config, reservoir.gamma);
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, shots)));

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi,
                       EmpiricalDistribution& out) {
    out.seed = seed;
    out.counts.assign(static_cast<size_t>(M) + 1, 0);
    out.counts_up.assign(static_cast<size_t>(M) + 1, 0);
    for (std::uint64_t shot = lo; shot < hi; ++shot) {
      ShotRng rng(seed, shot);
      const TrajectoryRecord traj =
          simulate_shot(rng, config, reservoir, /*record_steps=*/false);
      out.shots += 1;
      out.counts[static_cast<size_t>(traj.spinlabor)] += 1;
      if (traj.initial_up)
        out.counts_up[static_cast<size_t>(traj.spinlabor)] += 1;
      out.spintherm_sum += traj.spintherm_to_reservoir;
      out.spintherm_sq_sum +=
          traj.spintherm_to_reservoir * traj.spintherm_to_reservoir;
      if (traj.final_up) out.final_up_count += 1;
    }
  };

  std::vector<EmpiricalDistribution> shards(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (shots + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = std::min<std::uint64_t>(shots, w * chunk);
    const std::uint64_t hi = std::min<std::uint64_t>(shots, lo + chunk);
    pool.emplace_back(run_range, lo, hi, std::ref(shards[w]));
  }
  for (auto& t : pool) t.join();

  EmpiricalDistribution merged = std::move(shards.front());
  for (unsigned w = 1; w < workers; ++w) merged.merge(shards[w]);
  return merged;
}

BatchSummary summarize(const EmpiricalDistribution& batch,
                       const ProtocolConfig& config,
                       const ReservoirParams& reservoir) {
  BatchSummary summary;
  summary.seed = batch.seed;
  summary.shots = batch.shots;
  summary.mean = batch.mean();
  summary.variance = batch.variance();
  summary.spintherm_mean = static_cast<double>(batch.spintherm_sum) /
                           static_cast<double>(batch.shots);

  const double gamma = reservoir.gamma;
  double jarz = 0.0;
  for (size_t n = 0; n < batch.counts.size(); ++n) {
    if (batch.counts[n] == 0) continue;
    jarz += static_cast<double>(batch.counts[n]) *
            std::exp(-gamma * static_cast<double>(n));
  }
  summary.jarzynski_lhs = jarz / static_cast<double>(batch.shots);

  if (config.p_up > 0.0 && config.p_up < 1.0) {
    const int n_bar = resolved_max_cycles(config, gamma);
    double ift = 0.0;
    for (size_t n = 0; n < batch.counts.size(); ++n) {
      const std::uint64_t up = n < batch.counts_up.size() ? batch.counts_up[n] : 0;
      const std::uint64_t down = batch.counts[n] - up;
      if (up > 0) {
        ift += static_cast<double>(up) *
               std::exp(-stochastic_entropy_production(
                   true, static_cast<long long>(n), config.p_up, gamma, n_bar));
      }
      if (down > 0) {
        ift += static_cast<double>(down) *
               std::exp(-stochastic_entropy_production(
                   false, static_cast<long long>(n), config.p_up, gamma, n_bar));
      }
    }
    summary.ift_lhs = ift / static_cast<double>(batch.shots);
  } else {
    summary.ift_lhs = std::numeric_limits<double>::quiet_NaN();
  }
  return summary;
}

double entropy_production(const TrajectoryRecord& traj,
                          const ProtocolConfig& config,
                          const ReservoirParams& reservoir, int n_bar) {
  if (n_bar == 0) n_bar = resolved_max_cycles(config, reservoir.gamma);
  return stochastic_entropy_production(traj.initial_up, traj.spinlabor,
                                       config.p_up, reservoir.gamma, n_bar);
}

}  // namespace spinres
