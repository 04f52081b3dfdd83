#pragma once

#include "diffmom/moments.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diffmom {

/// Inclusive search range a..b in fixed steps, bounds inside (0, 1).
struct Range {
  double lo = 0.01;
  double hi = 0.99;
  double step = 0.01;

  std::vector<double> points() const;
  void validate(const char* name) const;
};

struct GridSpec {
  Range p;
  Range q;
};

/// Sample-level identification diagnostics (corner conditions).
struct CornerDiagnostics {
  bool no_ip = false;
  bool no_nonip = false;
  bool all_nonip_zero = false;
  bool all_nonip_one = false;
  int n_ip = 0;
  int n_ip_participants = 0;
  int n_nonip = 0;
  int n_nonip_participants = 0;
};

CornerDiagnostics detect_corner(const Sample& sample);

/// Closed-form solution of the p first-order condition given q:
///   p = (sum of participants' rates + #IP participants)
///       / (sum of non-IP squared rates + #IP),
/// clipped to [p_min, p_max]. *exceeded_unit reports an unclipped value
/// above one (corner inequality).
double profile_p(const Sample& sample, double q, double p_min = 0.01,
                 double p_max = 0.99, bool* exceeded_unit = nullptr);

struct CornerFlags {
  bool q_at_lower = false;
  bool q_at_upper = false;
  bool p_out_of_unit = false;
};

struct EstimateOptions {
  Method method = Method::NonAggregated;
  GridSpec grid;
  bool refine = false;        // golden-section within the argmin grid cell
  bool profile = false;       // 1-D q search with p profiled out (na only)
  bool proportional_weights = false;  // two-moment: (N1/N, N2/N) instead of (1, 1)
};

struct EstimateReport {
  Method method = Method::NonAggregated;
  ParamPoint theta_hat;
  double objective_at_opt = 0.0;
  bool profile_used = false;
  CornerFlags corner;
  CornerDiagnostics diagnostics;
  std::optional<double> hessian_determinant;  // na only
  int n = 0, n1 = 0, n2 = 0;
  int n_excluded_out_of_radius = 0;
  int n_excluded_unsupported = 0;
};

/// Exhaustive grid search for the objective minimum; ties break toward
/// smaller q, then smaller p. Optional golden-section refinement within one
/// grid cell per coordinate. Corner outcomes are reported, never fatal.
EstimateReport estimate(const Sample& sample, const EstimateOptions& options);

enum class OmegaMode : std::uint8_t { DiagonalApprox, ClusterRobust, TwoMoment };

const char* omega_mode_name(OmegaMode m);
OmegaMode parse_omega_mode(const std::string& name);

struct CovarianceReport {
  OmegaMode omega_mode = OmegaMode::DiagonalApprox;
  Matrix2d v_hat = Matrix2d::Zero();
  double se_p = 0.0;
  double se_q = 0.0;
  bool q_se_defined = true;  // false when no non-IPs identify q
};

/// Sandwich covariance of theta_hat.
///   Non-aggregated: (D'D)^-1 D' Omega D (D'D)^-1 with D the N x 2 matrix of
///   moment derivatives; Omega is diagonal in g_i^2 (DiagonalApprox) or the
///   within-village block sum is estimated by village score outer products
///   (ClusterRobust).
///   Two-moment: 2 x 2 moment Jacobian with Omega11 = p(1-p)/N1 and Omega22
///   the village-clustered sum of squared non-IP moment sums over N2^2.
CovarianceReport covariance(const Sample& sample, ParamPoint theta_hat,
                            Method method, OmegaMode omega_mode);

}  // namespace diffmom
