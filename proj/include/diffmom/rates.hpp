#pragma once

#include "diffmom/reach.hpp"

#include <utility>
#include <vector>

namespace diffmom {

/// A reception rate together with its first two q-derivatives, produced by
/// differentiating the exact closed form analytically (product rule through
/// the nested rate terms).
struct RateDerivs {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// First-opportunity reception probability rbar(q) and derivatives for a
/// canonical link portfolio. IPs evaluate to exactly one; throws for
/// Unsupported portfolios.
RateDerivs rate_derivs(const RatePortfolio& portfolio, double q);

/// rbar(q) for one agent. Requires the agent in radius with a supported case.
double closed_form_rate(const VillageNetwork& net, const ReachProfile& reach,
                        int agent, double q);

/// (d rbar / d q, d^2 rbar / d q^2) for one agent.
std::pair<double, double> rate_gradient(const VillageNetwork& net,
                                        const ReachProfile& reach, int agent,
                                        double q);

/// Homogeneous two-hop configuration: the receiver has omega_i upstream
/// contacts, each holding omega_bar links to IPs. Equals the general closed
/// form on the corresponding graph:
///   1 - (1 - q (1 - (1-q)^omega_bar))^omega_i
double star_formula(int omega_i, int omega_bar, double q);

/// Rates for every agent of a village at one q. Out-of-radius and
/// unsupported agents carry NaN entries.
struct RateTable {
  VectorXd rbar;
  VectorXd drbar_dq;
  VectorXd d2rbar_dq2;
  std::vector<RateCase> rate_case;
};

RateTable rate_table(const VillageNetwork& net, const ReachProfile& reach,
                     double q);

}  // namespace diffmom
