#pragma once

#include "diffmom/types.hpp"

#include <span>
#include <utility>
#include <vector>

namespace diffmom {

/// One village: a symmetric binary friendship matrix plus the set of agents
/// informed at t = 0 (the injection points, IPs). Immutable after
/// construction; safe to share across threads.
struct VillageNetwork {
  int village_id = 0;
  int n_agents = 0;
  MatrixXi adjacency;                       // g_ij in {0,1}, g_ii = 0, symmetric
  std::vector<int> ips;                     // sorted, unique, non-empty
  std::vector<std::vector<int>> neighbors;  // ascending adjacency lists

  bool is_ip(int agent) const;
};

using Edge = std::pair<int, int>;

/// Build and validate a village network. Edges are undirected; duplicates and
/// mirrored listings are idempotent. Rejects self-loops, out-of-range
/// endpoints, out-of-range IP indices and an empty IP set.
VillageNetwork build_network(std::span<const Edge> edges, int n_agents,
                             std::span<const int> ips, int village_id = 0);

/// Same network with a different injection-point set (used when IP subsets
/// are redrawn per simulation run).
VillageNetwork with_ips(const VillageNetwork& net, std::span<const int> ips);

}  // namespace diffmom
