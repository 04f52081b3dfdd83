#pragma once

#include "diffmom/network.hpp"
#include "diffmom/types.hpp"

#include <span>
#include <vector>

namespace diffmom {

// Notation used throughout the estimation code:
//   d_i   geodesic distance (hops) from agent i to the nearest IP
//   tm    decision period of agent i, tm = d_i + 1: the first period in which
//         she can possibly be newly informed and hence faces the choice
//   N~    the selection indicator matrix: N~(i, t) = 1 iff t == d_i + 1 and
//         the agent is inside the information radius
//   w_i   number of direct upstream contacts feeding the agent's
//         first-opportunity reception formula

/// Per-agent reach of the information within a horizon of T periods.
struct ReachProfile {
  int horizon = 0;                  // T
  VectorXi distances;               // d_i, kUnreachable when no path exists
  MatrixXi indicator;               // n x T; column t-1 holds period t
  std::vector<bool> in_radius;      // d_i <= min(T-1, kMaxExchange)
  std::vector<RateCase> rate_case;  // meaningful for in-radius agents
  VectorXi degree_to_info;          // w_i

  // Exclusion tallies over all agents of the village.
  int n_in_radius = 0;
  int n_unreachable = 0;        // d_i = infinity
  int n_beyond_horizon = 0;     // finite d_i > T-1
  int n_beyond_exchangeate = 0; // finite d_i in (kMaxExchange, T-1]
  int n_unsupported = 0;        // distance three, no exact formula

  int decision_period(int agent) const { return distances[agent] + 1; }
};

/// Canonical description of the link portfolio that pins down an agent's
/// first-opportunity reception rate. Two agents with equal portfolios have
/// identical rate functions q -> rbar(q), and the rate evaluator consumes the
/// canonical (sorted) parameters so equal portfolios evaluate bit-identically.
///
/// params by case:
///   Ip            {}
///   Dist1         {{w}}                w = number of IP neighbours
///   Dist2         {{w_k...}}           one sorted list of the upstream
///                                      contacts' IP-link counts
///   Dist3Tree     {{w_k...} per l}     one sorted list per distance-2
///                                      neighbour l, outer list sorted
///   Dist3Adapted  {{w_k, J_k}...}      per relevant IP-neighbour k: its
///                                      IP-link count and its number of
///                                      two-hop paths to the agent
struct RatePortfolio {
  RateCase rate_case = RateCase::Unsupported;
  std::vector<std::vector<int>> params;

  bool operator==(const RatePortfolio&) const = default;
  bool operator<(const RatePortfolio& other) const;
};

/// Multi-source BFS from the IP set plus rate-case classification.
/// Agents beyond min(T-1, kMaxExchange) hops are out of radius and carry an
/// all-zero indicator row. T >= 2 required.
ReachProfile compute_reach(const VillageNetwork& net, int horizon);

/// Link portfolio of an in-radius agent (classification + canonical rate
/// parameters). Pure function of the network and its IP set.
RatePortfolio rate_portfolio(const VillageNetwork& net,
                             const ReachProfile& reach, int agent);

/// Classification only. Throws if the agent is out of radius.
RateCase classify_rate_case(const VillageNetwork& net,
                            const ReachProfile& reach, int agent);

/// Agents segregated into types by link portfolio: equal type <=> identical
/// reception-rate function. Type 1 is reserved for IPs; types are numbered
/// deterministically by sorted portfolio. Unsupported and out-of-radius
/// agents receive type 0 and are excluded from the counts.
struct TypePartition {
  std::vector<std::vector<int>> type_of_agent;  // [village][agent], 1-based, 0 = excluded
  int n_types = 0;                              // M
  std::vector<int> counts;                      // N_m, index m-1
  std::vector<int> decision_period;             // tm, index m-1
  std::vector<RatePortfolio> portfolios;        // canonical key, index m-1
};

TypePartition partition_types(std::span<const VillageNetwork> nets,
                              std::span<const ReachProfile> reaches);

}  // namespace diffmom
