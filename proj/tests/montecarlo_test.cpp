#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "spinres/distribution.hpp"
#include "spinres/fluctuation.hpp"
#include "spinres/montecarlo.hpp"

using namespace spinres;

namespace {

ProtocolConfig cfg(int C, double p_up = 0.5) {
  ProtocolConfig config;
  config.C = C;
  config.p_up = p_up;
  return config;
}

}  // namespace

TEST_CASE("shot rng is a pure function of (seed, shot)") {
  ShotRng a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  double first_a = a.uniform();
  CHECK(first_a == b.uniform());
  CHECK(first_a != c.uniform());
  CHECK(first_a != d.uniform());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("trivial trajectories") {
  SUBCASE("nothing to erase: spin-down memory and a cold reservoir") {
    const ProtocolConfig config = cfg(2, 0.0);
    const ReservoirParams res = ReservoirParams::from_gamma(500.0);
    for (std::uint64_t shot = 0; shot < 50; ++shot) {
      const TrajectoryRecord traj = simulate_shot(9, shot, config, res);
      CHECK(traj.spinlabor == 0);
      CHECK(traj.spintherm_to_reservoir == 0);
      CHECK_FALSE(traj.initial_up);
    }
  }
  SUBCASE("memory up with C = 3 pays for every pre-equilibration CNOT") {
    const ProtocolConfig config = cfg(3, 1.0);
    const ReservoirParams res = ReservoirParams::from_alpha(0.3);
    for (std::uint64_t shot = 0; shot < 200; ++shot) {
      const TrajectoryRecord traj = simulate_shot(11, shot, config, res);
      CHECK(traj.initial_up);
      CHECK(traj.spinlabor >= 3);
    }
  }
}

TEST_CASE("per-shot ledger") {
  const ProtocolConfig config = cfg(1);
  const ReservoirParams res = ReservoirParams::from_alpha(0.2);
  const TrajectoryRecord traj = simulate_shot(123, 0, config, res);

  SUBCASE("steps recombine into the totals") {
    long long labor = 0, therm = 0;
    int cnots = 0;
    for (const TrajectoryStep& step : traj.steps) {
      if (step.kind == StepKind::kCnot) {
        labor += step.increment;
        CHECK((step.increment == 0 || step.increment == 1));
        ++cnots;
      } else {
        therm += step.increment;
      }
    }
    CHECK(labor == traj.spinlabor);
    CHECK(therm == traj.spintherm_to_reservoir);
    CHECK(cnots == traj.total_cnots);
  }
  SUBCASE("first law holds exactly, shot by shot") {
    for (std::uint64_t shot = 0; shot < 20000; ++shot) {
      const TrajectoryRecord t = simulate_shot(7, shot, config, res,
                                               /*record_steps=*/false);
      CHECK(t.spinlabor - t.spintherm_to_reservoir == t.delta_jz_memory_ancilla());
    }
  }
}

TEST_CASE("erasure leaves the memory down at the protocol truncation") {
  // the residual up-probability is Q_up(M) < 1e-12, so a batch of this size
  // should never end spin-up
  const EmpiricalDistribution batch = simulate_batch(
      13, 200000, cfg(1), ReservoirParams::from_alpha(0.4));
  CHECK(batch.final_up_count == 0);
}

TEST_CASE("batches are deterministic and shard-independent") {
  const ProtocolConfig config = cfg(1);
  const ReservoirParams res = ReservoirParams::from_alpha(0.2);
  const EmpiricalDistribution one = simulate_batch(2024, 20000, config, res, 1);
  const EmpiricalDistribution two = simulate_batch(2024, 20000, config, res, 2);
  const EmpiricalDistribution five = simulate_batch(2024, 20000, config, res, 5);

  CHECK(one.counts == two.counts);
  CHECK(one.counts == five.counts);
  CHECK(one.counts_up == five.counts_up);
  CHECK(one.spintherm_sum == five.spintherm_sum);
  CHECK(one.spintherm_sq_sum == five.spintherm_sq_sum);
  CHECK(one.final_up_count == five.final_up_count);

  std::uint64_t total = 0;
  for (std::uint64_t c : one.counts) total += c;
  CHECK(total == one.shots);

  CHECK_THROWS_AS(simulate_batch(1, 0, config, res), std::domain_error);
}

TEST_CASE("a single-shot batch equals that trajectory") {
  const ProtocolConfig config = cfg(2, 0.3);
  const ReservoirParams res = ReservoirParams::from_alpha(0.35);
  const EmpiricalDistribution batch = simulate_batch(5, 1, config, res, 1);
  const TrajectoryRecord traj = simulate_shot(5, 0, config, res);
  const BatchSummary summary = summarize(batch, config, res);

  CHECK(summary.shots == 1);
  CHECK(summary.mean == static_cast<double>(traj.spinlabor));
  CHECK(summary.variance == doctest::Approx(0.0).scale(1e-12));
  CHECK(summary.spintherm_mean ==
        static_cast<double>(traj.spintherm_to_reservoir));
}

TEST_CASE("empirical moments converge to the exact ones") {
  const std::uint64_t shots = 200000;
  const std::vector<std::pair<int, double>> points = {{0, 0.2}, {1, 0.2}, {10, 0.4}};
  for (const auto& [C, alpha] : points) {
    const ProtocolConfig config = cfg(C);
    const ReservoirParams res = ReservoirParams::from_alpha(alpha);
    const EmpiricalDistribution batch = simulate_batch(77, shots, config, res);
    const double exact_mean = mean_spinlabor(config, res);
    const double exact_var = variance_spinlabor(config, res);
    const double se = std::sqrt(exact_var / static_cast<double>(shots));
    CHECK(std::fabs(batch.mean() - exact_mean) < 4.0 * se);

    const SpinlaborDistribution exact = limit_distribution(config, res);
    CHECK(batch.tv_distance_to(exact) < 0.01);
  }
}

TEST_CASE("batch summary closes the fluctuation identities statistically") {
  const ProtocolConfig config = cfg(1);
  const ReservoirParams res = ReservoirParams::from_alpha(0.2);
  const std::uint64_t shots = 200000;
  const EmpiricalDistribution batch = simulate_batch(31337, shots, config, res);
  const BatchSummary summary = summarize(batch, config, res);

  SUBCASE("<e^{-gamma L}> near A/2") {
    const double expected = 0.5 * jarzynski_A(1, res.gamma);
    // per-shot variance of e^{-gamma L} is below 1, so 4 sigma is generous
    CHECK(std::fabs(summary.jarzynski_lhs - expected) <
          4.0 / std::sqrt(static_cast<double>(shots)));
  }
  SUBCASE("<e^{-sigma}> near 1, with the spread estimated from the batch") {
    const int n_bar = resolved_max_cycles(config, res.gamma);
    double sq = 0.0;
    for (size_t n = 0; n < batch.counts.size(); ++n) {
      const std::uint64_t up = batch.counts_up[n];
      const std::uint64_t down = batch.counts[n] - up;
      const double eu = std::exp(-stochastic_entropy_production(
          true, static_cast<long long>(n), config.p_up, res.gamma, n_bar));
      const double ed = std::exp(-stochastic_entropy_production(
          false, static_cast<long long>(n), config.p_up, res.gamma, n_bar));
      sq += static_cast<double>(up) * eu * eu + static_cast<double>(down) * ed * ed;
    }
    const double second = sq / static_cast<double>(shots);
    const double se = std::sqrt(
        std::max(0.0, second - summary.ift_lhs * summary.ift_lhs) /
        static_cast<double>(shots));
    CHECK(std::fabs(summary.ift_lhs - 1.0) < 3.0 * se + 1e-12);
  }
  SUBCASE("mean spintherm near mean spinlabor + p_up") {
    const double expected = mean_spinlabor(config, res) + config.p_up;
    const double var_est =
        static_cast<double>(batch.spintherm_sq_sum) / static_cast<double>(shots) -
        summary.spintherm_mean * summary.spintherm_mean;
    const double se = std::sqrt(var_est / static_cast<double>(shots));
    CHECK(std::fabs(summary.spintherm_mean - expected) < 4.0 * se);
  }
}

TEST_CASE("biased-memory batch still satisfies the exponential identity") {
  const ProtocolConfig config = cfg(4, 0.2);
  const ReservoirParams res = ReservoirParams::from_alpha(0.3);
  const std::uint64_t shots = 200000;
  const BatchSummary summary =
      summarize(simulate_batch(5150, shots, config, res), config, res);
  const double expected = jarzynski_A_prime(4, 0.2, res.gamma);
  CHECK(std::fabs(summary.jarzynski_lhs - expected) <
        4.0 / std::sqrt(static_cast<double>(shots)));
  CHECK(std::fabs(summary.ift_lhs - 1.0) < 0.05);
}

TEST_CASE("two-peak histogram for a biased memory and large C") {
  const ProtocolConfig config = cfg(10, 0.1);
  const ReservoirParams res = ReservoirParams::from_alpha(0.4);
  const EmpiricalDistribution batch = simulate_batch(404, 400000, config, res);
  // peaks sit at n = 0 and n = C; their height ratio tracks p_down / p_up
  const double ratio = static_cast<double>(batch.counts[0]) /
                       static_cast<double>(batch.counts[10]);
  CHECK(ratio == doctest::Approx(9.0).epsilon(0.05));
}

TEST_CASE("entropy production of a trajectory is n_bar-invariant") {
  const ProtocolConfig config = cfg(1, 0.3);
  const ReservoirParams res = ReservoirParams::from_alpha(0.25);
  const int n_bar = resolved_max_cycles(config, res.gamma);
  for (std::uint64_t shot = 0; shot < 100; ++shot) {
    const TrajectoryRecord traj = simulate_shot(1, shot, config, res, false);
    CHECK(entropy_production(traj, config, res, n_bar) ==
          doctest::Approx(entropy_production(traj, config, res, 2 * n_bar))
              .epsilon(1e-10));
  }
}
