// spinres: exact and Monte Carlo analysis of information erasure against a
// spin angular-momentum reservoir.
//
// Subcommands
//   dist       exact limit spinlabor distribution (CSV + JSON sidecar)
//   simulate   seeded Monte Carlo batch (histogram CSV + summary JSON)
//   bounds     one bounds-comparison row for a (C, alpha, p_up) point
//   sweep      bounds rows over a C-range x alpha-range grid
//   violation  probability-of-violation curve over an epsilon grid
//   jarzynski  exponential average, identity value and free-spin change
//   table1     the four reference R values at C in {0,1}, alpha in {0.2,0.4}
//
// Exit codes: 0 success, 2 parameter error, 3 convergence failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinres/bounds.hpp"
#include "spinres/core.hpp"
#include "spinres/distribution.hpp"
#include "spinres/fluctuation.hpp"
#include "spinres/io.hpp"
#include "spinres/montecarlo.hpp"

namespace {

using namespace spinres;

struct CommonOpts {
  int C = 1;
  double alpha = 0.2;
  double p_up = 0.5;
  double tail_tol = 1e-14;
  int max_cycles = 0;
  std::string format = "csv";
  std::string out;
  std::string gnuplot;
};

void add_common(CLI::App* cmd, CommonOpts& opt, bool with_range = false) {
  if (!with_range) {
    cmd->add_option("--C", opt.C, "CNOT steps before the first equilibration")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--alpha", opt.alpha, "reservoir spin polarization, in (0, 0.5)");
  }
  cmd->add_option("--p-up", opt.p_up, "initial probability the memory is spin-up")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--tail-tol", opt.tail_tol, "limit convergence tolerance");
  cmd->add_option("--max-cycles", opt.max_cycles,
                  "protocol truncation (0 = derive from gamma)");
  cmd->add_option("--format", opt.format, "stdout format when --out is absent")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.out, "output file (sidecar JSON written next to it)");
  cmd->add_option("--gnuplot-script", opt.gnuplot,
                  "also write a gnuplot script for the emitted data");
}

ProtocolConfig make_config(const CommonOpts& opt) {
  ProtocolConfig config;
  config.C = opt.C;
  config.p_up = opt.p_up;
  config.max_cycles = opt.max_cycles;
  config.tail_tol = opt.tail_tol;
  config.validate();
  return config;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

std::string sidecar_path(const std::string& path) {
  const size_t dot = path.find_last_of('.');
  const size_t sep = path.find_last_of('/');
  if (dot == std::string::npos || (sep != std::string::npos && dot < sep)) {
    return path + ".json";
  }
  return path.substr(0, dot) + ".json";
}

// "0.1:0.4:0.05", "0:10" (unit step) or a comma list "0.2,0.4"
std::vector<double> parse_range(const std::string& text) {
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 1;
    const int got = std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step);
    if (got < 2 || step <= 0) {
      throw std::domain_error("bad range syntax: " + text);
    }
    for (double v = lo; v <= hi + 1e-12; v += step) values.push_back(v);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) values.push_back(std::stod(item));
    }
  }
  if (values.empty()) throw std::domain_error("empty range: " + text);
  return values;
}

void emit_gnuplot(const std::string& script_path, const std::string& data_path,
                  const std::string& ylabel, double mean_line, double bound_line) {
  std::ostringstream out;
  out << "set datafile separator ','\n"
      << "set xlabel 'spinlabor n (hbar)'\n"
      << "set ylabel '" << ylabel << "'\n"
      << "set arrow 1 from " << format_double(mean_line)
      << ", graph 0 to " << format_double(mean_line)
      << ", graph 1 nohead lc rgb 'black'\n"
      << "set arrow 2 from " << format_double(bound_line)
      << ", graph 0 to " << format_double(bound_line)
      << ", graph 1 nohead lc rgb 'pink'\n"
      << "plot '" << data_path << "' every ::1 using 1:2 with boxes notitle\n"
      << "pause -1\n";
  write_file(script_path, out.str());
}

double baseline_from_flag(const std::string& flag, int C, double p_up,
                          double gamma) {
  if (flag == "jensen") return violation_baseline(C, p_up, gamma);
  if (flag == "original") return std::log(2.0) / gamma;
  if (flag == "figure") return std::log(2.0 / jarzynski_A(C, gamma)) / gamma;
  try {
    return std::stod(flag);
  } catch (const std::exception&) {
    throw std::domain_error("bad --baseline value: " + flag);
  }
}

int cmd_dist(const CommonOpts& opt, const std::string& baseline_flag) {
  const ProtocolConfig config = make_config(opt);
  const ReservoirParams reservoir = ReservoirParams::from_alpha(opt.alpha);
  const SpinlaborDistribution dist = limit_distribution(config, reservoir);
  const double mean = dist.mean();
  const double bound =
      baseline_from_flag(baseline_flag, opt.C, opt.p_up, reservoir.gamma);

  const std::string csv = distribution_csv(dist);
  const std::string json = distribution_json(dist, mean, bound);
  if (!opt.out.empty()) {
    write_file(opt.out, csv);
    write_file(sidecar_path(opt.out), json);
  } else {
    std::cout << (opt.format == "json" ? json : csv);
  }
  if (!opt.gnuplot.empty()) {
    emit_gnuplot(opt.gnuplot, opt.out.empty() ? "dist.csv" : opt.out,
                 "probability", mean, bound);
  }
  return 0;
}

int cmd_simulate(const CommonOpts& opt, std::uint64_t shots, std::uint64_t seed,
                 unsigned workers) {
  if (shots < 1) throw std::domain_error("--shots must be at least 1");
  const ProtocolConfig config = make_config(opt);
  const ReservoirParams reservoir = ReservoirParams::from_alpha(opt.alpha);
  const EmpiricalDistribution batch =
      simulate_batch(seed, shots, config, reservoir, workers);
  const BatchSummary summary = summarize(batch, config, reservoir);

  const std::string csv = batch_csv(batch);
  const std::string json = batch_summary_json(summary);
  if (!opt.out.empty()) {
    write_file(opt.out, csv);
    write_file(sidecar_path(opt.out), json);
  } else {
    std::cout << (opt.format == "json" ? json : csv);
  }
  return 0;
}

int cmd_bounds(const CommonOpts& opt) {
  const BoundsReport report = make_bounds_report(opt.C, opt.alpha, opt.p_up);
  std::ostringstream out;
  out << bounds_csv_header() << '\n' << bounds_csv_row(report) << '\n';
  if (!opt.out.empty()) {
    write_file(opt.out, out.str());
  } else {
    std::cout << out.str();
  }
  return 0;
}

int cmd_sweep(const CommonOpts& opt, const std::string& c_range,
              const std::string& alpha_range) {
  std::ostringstream out;
  out << bounds_csv_header() << '\n';
  for (double c_val : parse_range(c_range)) {
    const int C = static_cast<int>(std::llround(c_val));
    if (C < 0) throw std::domain_error("sweep: C must be non-negative");
    for (double alpha : parse_range(alpha_range)) {
      out << bounds_csv_row(make_bounds_report(C, alpha, opt.p_up)) << '\n';
    }
  }
  if (!opt.out.empty()) {
    write_file(opt.out, out.str());
  } else {
    std::cout << out.str();
  }
  return 0;
}

int cmd_violation(const CommonOpts& opt, const std::string& baseline_flag,
                  double eps_max, double eps_step) {
  if (eps_step <= 0 || eps_max < 0) {
    throw std::domain_error("violation: need eps_step > 0 and eps_max >= 0");
  }
  const ProtocolConfig config = make_config(opt);
  const ReservoirParams reservoir = ReservoirParams::from_alpha(opt.alpha);
  const SpinlaborDistribution dist = limit_distribution(config, reservoir);
  const double baseline =
      baseline_from_flag(baseline_flag, opt.C, opt.p_up, reservoir.gamma);

  std::vector<ViolationRow> rows;
  for (double eps = 0.0; eps <= eps_max + 1e-12; eps += eps_step) {
    const ViolationPoint point =
        violation_probability(dist, reservoir.gamma, baseline, eps);
    rows.push_back({eps, point.pr_v, point.bound});
  }
  const std::string csv = violation_csv(rows);
  if (!opt.out.empty()) {
    write_file(opt.out, csv);
  } else {
    std::cout << csv;
  }
  return 0;
}

int cmd_jarzynski(const CommonOpts& opt, int n_bar) {
  const ProtocolConfig config = make_config(opt);
  const ReservoirParams reservoir = ReservoirParams::from_alpha(opt.alpha);
  const SpinlaborDistribution dist = limit_distribution(config, reservoir);
  if (n_bar == 0) n_bar = resolved_max_cycles(config, reservoir.gamma);

  nlohmann::ordered_json j;
  j["C"] = opt.C;
  j["alpha"] = opt.alpha;
  j["p_up"] = opt.p_up;
  j["gamma"] = reservoir.gamma;
  j["lhs"] = jarzynski_lhs(dist, reservoir.gamma);
  j["identity_value"] = jarzynski_A_prime(opt.C, opt.p_up, reservoir.gamma);
  j["exponential_average"] = exponential_average(dist, reservoir.gamma);
  j["delta_F_s"] =
      delta_free_spin(opt.C, opt.p_up, reservoir.gamma, n_bar).delta_F;
  j["n_bar"] = n_bar;
  const std::string text = j.dump(2) + "\n";
  if (!opt.out.empty()) {
    write_file(opt.out, text);
  } else {
    std::cout << text;
  }
  return 0;
}

int cmd_table1() {
  struct Row {
    char panel;
    int C;
    double alpha;
  };
  const Row rows[] = {{'a', 0, 0.2}, {'b', 1, 0.2}, {'c', 0, 0.4}, {'d', 1, 0.4}};
  std::cout << "panel,C,alpha,R\n";
  for (const Row& row : rows) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.2f", R_diagnostic(row.C, row.alpha, 0.5));
    std::cout << row.panel << ',' << row.C << ',' << format_double(row.alpha)
              << ',' << buf << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"erasure against a spin reservoir: exact distributions, Monte "
               "Carlo, fluctuation relations and cost bounds"};
  app.require_subcommand(1);

  CommonOpts dist_opt;
  std::string dist_baseline = "jensen";
  CLI::App* dist = app.add_subcommand("dist", "exact limit spinlabor distribution");
  add_common(dist, dist_opt);
  dist->add_option("--baseline", dist_baseline,
                   "bound reported in the sidecar: jensen, original, figure or a number");

  CommonOpts sim_opt;
  std::uint64_t shots = 0, seed = 0;
  unsigned workers = 0;
  CLI::App* sim = app.add_subcommand("simulate", "seeded Monte Carlo batch");
  add_common(sim, sim_opt);
  sim->add_option("--shots", shots, "number of trajectories")->required();
  sim->add_option("--seed", seed, "RNG seed (no wall-clock seeding)")->required();
  sim->add_option("--workers", workers, "worker threads (0 = hardware)");

  CommonOpts bounds_opt;
  CLI::App* bounds = app.add_subcommand("bounds", "bounds comparison row");
  add_common(bounds, bounds_opt);

  CommonOpts sweep_opt;
  std::string c_range = "0:10", alpha_range = "0.05:0.45:0.05";
  CLI::App* sweep = app.add_subcommand("sweep", "bounds rows over a grid");
  add_common(sweep, sweep_opt, /*with_range=*/true);
  sweep->add_option("--C", c_range, "C range, e.g. 0:10 or 0,1,4,10");
  sweep->add_option("--alpha", alpha_range, "alpha range, e.g. 0.05:0.45:0.05");

  CommonOpts vio_opt;
  std::string vio_baseline = "jensen";
  double eps_max = 3.0, eps_step = 0.1;
  CLI::App* violation = app.add_subcommand("violation", "probability-of-violation curve");
  add_common(violation, vio_opt);
  violation->add_option("--baseline", vio_baseline,
                        "jensen, original, figure or an explicit number");
  violation->add_option("--epsilon-max", eps_max, "last epsilon in the curve");
  violation->add_option("--epsilon-step", eps_step, "epsilon grid step");

  CommonOpts jar_opt;
  int n_bar = 0;
  CLI::App* jarzynski = app.add_subcommand("jarzynski", "exponential-average report");
  add_common(jarzynski, jar_opt);
  jarzynski->add_option("--n-bar", n_bar, "ancilla count (0 = protocol truncation)");

  CLI::App* table1 = app.add_subcommand("table1", "reference R values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (dist->parsed()) return cmd_dist(dist_opt, dist_baseline);
    if (sim->parsed()) return cmd_simulate(sim_opt, shots, seed, workers);
    if (bounds->parsed()) return cmd_bounds(bounds_opt);
    if (sweep->parsed()) return cmd_sweep(sweep_opt, c_range, alpha_range);
    if (violation->parsed())
      return cmd_violation(vio_opt, vio_baseline, eps_max, eps_step);
    if (jarzynski->parsed()) return cmd_jarzynski(jar_opt, n_bar);
    if (table1->parsed()) return cmd_table1();
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
