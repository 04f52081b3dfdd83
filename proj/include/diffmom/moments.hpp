#pragma once

#include "diffmom/simulate.hpp"

#include <vector>

namespace diffmom {

/// Individual moment condition values g_i(p, q) for every included agent:
/// g_i = Y at the decision period minus p * rbar at that period. IPs have
/// rbar = 1. Out-of-radius and unsupported agents are excluded and tallied.
struct MomentVector {
  std::vector<double> g;         // residual, alias eps_i
  std::vector<bool> is_ip;
  std::vector<int> village_id;
  std::vector<int> agent;
  int n = 0;                     // N = n1 + n2
  int n1 = 0;                    // IPs
  int n2 = 0;                    // non-IPs in radius with a supported case
  int n_excluded_out_of_radius = 0;
  int n_excluded_unsupported = 0;
};

/// Per-village reception rates and q-derivatives at a fixed q, for reuse
/// across many p evaluations (the rates do not depend on p). Entries follow
/// village order; excluded agents carry NaN.
struct SampleRates {
  double q = 0.0;
  std::vector<VectorXd> rbar;
  std::vector<VectorXd> d1;
  std::vector<VectorXd> d2;
};

SampleRates compute_sample_rates(const Sample& sample, double q);

MomentVector individual_moments(const Sample& sample, ParamPoint theta);
MomentVector individual_moments(const Sample& sample, double p,
                                const SampleRates& rates);

/// Non-aggregated objective: N^-1 sum_i g_i^2, accumulated per village in
/// fixed order (villages ascending, agents ascending) with compensated
/// summation, then combined ascending, so parallel and serial evaluation
/// agree bitwise.
double objective_na(const Sample& sample, ParamPoint theta);
double objective_na(const Sample& sample, double p, const SampleRates& rates);

struct Weights {
  double w1 = 1.0;
  double w2 = 1.0;
};

/// Proportional alternative weights (N1/N, N2/N).
Weights proportional_weights(const Sample& sample);

/// Two-moment objective: w1 * g1hat^2 + w2 * g2hat^2 with g1hat the IP mean
/// and g2hat the non-IP mean of the individual moments.
double objective_2m(const Sample& sample, ParamPoint theta,
                    Weights weights = {});
double objective_2m(const Sample& sample, double p, const SampleRates& rates,
                    Weights weights = {});

/// Analytic gradient (dQ/dp, dQ/dq) of the selected objective.
Vector2d score(const Sample& sample, ParamPoint theta, Method method,
               Weights weights = {});

/// Analytic Hessian of the non-aggregated objective with the convexity
/// diagnostics: determinant, the necessary condition d2Q/dq2 > 0, and a
/// degenerate-q flag for samples whose objective does not depend on q.
struct HessianReport {
  Matrix2d hessian = Matrix2d::Zero();
  double determinant = 0.0;
  bool q_degenerate = false;   // no q curvature at all (e.g. IPs only)
  bool q_condition = false;    // d2Q/dq2 > 0, necessary for convexity
  bool positive_semidefinite = false;
};

HessianReport hessian_convexity(const Sample& sample, ParamPoint theta);

/// The four terms of the unit-weight two-moment objective split into squared
/// and cross parts per group; their sum reproduces objective_2m exactly.
struct TwoMomentDecomposition {
  double ip_sq_sum = 0.0;
  double ip_cross = 0.0;
  double nonip_sq_sum = 0.0;
  double nonip_cross = 0.0;

  double total() const { return ip_sq_sum + ip_cross + nonip_sq_sum + nonip_cross; }
};

TwoMomentDecomposition decompose_2m(const Sample& sample, ParamPoint theta);

}  // namespace diffmom
