#pragma once

#include "diffmom/network.hpp"
#include "diffmom/reach.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace diffmom {

/// Simulated participation decisions, one row per agent, column t-1 for
/// period t = 1..T. At most one 1 per row (participation is a one-time
/// opportunity of the newly informed).
struct OutcomePanel {
  int village_id = 0;
  MatrixXi y;
};

/// Latent information statuses after each exchange, column t-1 for
/// t = 1..T-1, plus the t = 0 injection indicator. Rows are monotone.
struct InfoPanel {
  VectorXi s0;
  MatrixXi s;
};

/// Seeds of one simulation run. village_seeds[v] is a pure function of
/// (common_seed, v); the IP redraw stream of village v is derived from
/// (ip_seed, v) the same way.
struct SeedPlan {
  std::uint64_t common_seed = 0;
  std::uint64_t ip_seed = 0;
  std::vector<std::uint64_t> village_seeds;
};

/// One village of an estimation sample: the (possibly IP-redrawn) network,
/// its reach, and the observed outcomes. Information statuses are retained
/// for debug export only; estimation never reads them.
struct VillageData {
  VillageNetwork net;
  ReachProfile reach;
  OutcomePanel outcomes;
  InfoPanel info;
};

struct Sample {
  int horizon = 0;
  std::vector<VillageData> villages;
};

/// Diffusion simulation for one village. Period t = 1..T: newly informed
/// agents draw participation Bernoulli(p) once; then (t <= T-1) every
/// informed agent draws an independent Bernoulli(q) per incident edge and any
/// receiving neighbour becomes informed. Deterministic given
/// (seed, net, p, q, T): draws are consumed agents ascending, then each
/// sender's edges ascending.
std::pair<OutcomePanel, InfoPanel> simulate_village(const VillageNetwork& net,
                                                    double p, double q,
                                                    int horizon,
                                                    std::uint64_t seed);

/// Uniform subset of ceil(fraction * |ips|) injection points, without
/// replacement, deterministic given the seed.
std::vector<int> draw_ips(const VillageNetwork& net, double fraction,
                          std::uint64_t seed);

/// Simulate every village of a sample under one seed plan: redraw IP subsets
/// with the plan's IP streams, recompute reach for the drawn subsets, then
/// simulate with the per-village seeds. The result does not depend on the
/// order in which villages are evaluated.
Sample simulate_sample(std::span<const VillageNetwork> nets, double p,
                       double q, int horizon, const SeedPlan& plan,
                       double ip_fraction);

}  // namespace diffmom
