#pragma once

#include "diffmom/estimate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace diffmom {

/// Seeds of Monte Carlo run r: common seed r, IP-draw seed r + 1, and one
/// derived stream per village.
SeedPlan seed_plan(std::uint64_t run_index, int n_villages);

/// Random geometric villages: agents placed uniformly in the unit square and
/// linked within the radius that yields the requested mean degree; IPs drawn
/// uniformly. Stands in for real village data in simulation studies.
struct SyntheticSpec {
  int n_villages = 12;
  int n_agents = 60;
  double mean_degree = 6.0;
  int n_ips = 8;
  std::uint64_t seed = 20240901;
};

std::vector<VillageNetwork> make_synthetic_villages(const SyntheticSpec& spec);

struct McConfig {
  std::vector<VillageNetwork> networks;
  int runs = 96;
  ParamPoint theta0{0.5, 0.5};
  double ip_fraction = 0.5;
  int horizon = 4;
  GridSpec grid;
  std::vector<Method> methods{Method::NonAggregated, Method::TwoMoment};
  bool refine = false;
  bool exclude_corner_runs = false;  // default: include, but tally
};

struct McRunEstimate {
  int run = 0;
  Method method = Method::NonAggregated;
  ParamPoint theta_hat;
  CornerFlags corner;
  bool failed = false;
  std::string error;

  bool cornered() const {
    return corner.q_at_lower || corner.q_at_upper || corner.p_out_of_unit;
  }
};

struct McStat {
  Method method = Method::NonAggregated;
  char param = 'p';
  double mean = 0.0;
  double pct_bias = 0.0;  // 100 * (mean - truth) / truth
  double std_dev = 0.0;   // sample standard deviation
  int n_runs = 0;         // runs entering the statistics
};

struct McTable {
  std::vector<McRunEstimate> estimates;  // run-major, then method order
  std::vector<McStat> stats;
  int completed = 0;
  int failed = 0;
  int corner_runs = 0;
};

/// The simulation study: for run r = 1..runs, simulate every village under
/// seed_plan(r) with the configured IP fraction, estimate with every method,
/// and tabulate mean / percent bias / standard deviation per parameter.
/// Fully deterministic; runs may execute in parallel.
McTable run_study(const McConfig& config);

}  // namespace diffmom
