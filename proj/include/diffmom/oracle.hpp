#pragma once

#include "diffmom/network.hpp"

namespace diffmom {

/// Exact probability that `agent` is informed for the first time by the
/// information exchange number `t_exchange`, i.e.
/// P(S_{agent,t} = 1 and S_{agent,t-1} = 0), computed by integrating over
/// every realization of the per-period, per-directed-edge transmission
/// indicators among the agents that can causally matter. Independent of the
/// closed-form rate formulas; used to validate them.
///
/// For t_exchange equal to the agent's IP distance this is the
/// first-opportunity reception rate; other exchanges are supported as well
/// (first reception after one or more missed opportunities).
///
/// Throws when more than `max_relevant` agents are within reach of the event
/// (enumeration bound), reporting the required size.
double oracle_rate(const VillageNetwork& net, int agent, int t_exchange,
                   double q, int max_relevant = 20);

}  // namespace diffmom
