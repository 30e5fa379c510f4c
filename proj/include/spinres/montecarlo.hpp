#pragma once

#include <cstdint>
#include <vector>

#include "spinres/core.hpp"
#include "spinres/distribution.hpp"

// Stochastic trajectory simulation of the erasure protocol with a per-shot
// ledger of spinlabor, spintherm and the memory-ancilla angular momentum.

namespace spinres {

// Counter-based per-shot random stream: every draw is a pure function of
// (seed, shot index, draw counter), so splitting a batch across workers can
// never change a result.
class ShotRng {
 public:
  ShotRng(std::uint64_t seed, std::uint64_t shot);
  double uniform();  // [0, 1)

 private:
  std::uint64_t state_;
};

enum class StepKind { kCnot, kEquilibrate };

struct TrajectoryStep {
  StepKind kind;
  bool memory_up_after;
  // spinlabor cost of a CNOT step (0 or 1), or spintherm passed to the
  // reservoir by an equilibration step ((m+1) times the occupation drop)
  long long increment;
};

struct TrajectoryRecord {
  bool initial_up = false;
  bool final_up = false;
  int total_cnots = 0;                   // protocol truncation M
  long long spinlabor = 0;               // units hbar
  long long spintherm_to_reservoir = 0;  // units hbar, positive = absorbed
  std::vector<TrajectoryStep> steps;     // empty unless recording was requested

  // Net change of the memory-ancilla J_z over the trajectory, units hbar.
  // The first law per shot reads spinlabor - spintherm_to_reservoir = this,
  // exactly, in integer arithmetic.
  long long delta_jz_memory_ancilla() const {
    return (final_up ? total_cnots + 1LL : 0LL) - (initial_up ? 1LL : 0LL);
  }
};

TrajectoryRecord simulate_shot(ShotRng& rng, const ProtocolConfig& config,
                               const ReservoirParams& reservoir,
                               bool record_steps = true);
TrajectoryRecord simulate_shot(std::uint64_t seed, std::uint64_t shot,
                               const ProtocolConfig& config,
                               const ReservoirParams& reservoir,
                               bool record_steps = true);

// Shot-count histogram of the spinlabor, split by the initial memory state.
// Merging is associative and commutative, and all fields are integers, so
// the merged batch is identical no matter how shots were sharded.
struct EmpiricalDistribution {
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::vector<std::uint64_t> counts;     // by spinlabor n, both branches
  std::vector<std::uint64_t> counts_up;  // subset that started spin-up
  long long spintherm_sum = 0;
  long long spintherm_sq_sum = 0;
  std::uint64_t final_up_count = 0;

  void merge(const EmpiricalDistribution& other);
  double mean() const;
  double variance() const;
  double tv_distance_to(const SpinlaborDistribution& exact) const;
};

struct BatchSummary {
  double mean = 0.0;
  double variance = 0.0;
  double spintherm_mean = 0.0;
  double jarzynski_lhs = 0.0;  // <e^{-gamma L}>
  double ift_lhs = 0.0;        // <e^{-sigma}>
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
};

// workers = 0 uses the hardware concurrency.  Deterministic in
// (seed, shots, config, reservoir) regardless of the worker count.
EmpiricalDistribution simulate_batch(std::uint64_t seed, std::uint64_t shots,
                                     const ProtocolConfig& config,
                                     const ReservoirParams& reservoir,
                                     unsigned workers = 0);

// Summary statistics evaluated exactly from the merged histogram.
BatchSummary summarize(const EmpiricalDistribution& batch,
                       const ProtocolConfig& config,
                       const ReservoirParams& reservoir);

// Stochastic entropy production of a completed trajectory; n_bar = 0 picks
// the resolved protocol truncation.  Requires p_up strictly inside (0, 1).
double entropy_production(const TrajectoryRecord& traj,
                          const ProtocolConfig& config,
                          const ReservoirParams& reservoir, int n_bar = 0);

}  // namespace spinres
