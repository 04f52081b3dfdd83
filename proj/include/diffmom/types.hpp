#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace diffmom {

using Eigen::Matrix2d;
using Eigen::MatrixXd;
using Eigen::MatrixXi;
using Eigen::Vector2d;
using Eigen::VectorXd;
using Eigen::VectorXi;

/// Parameter pair: participation probability p, transmission probability q.
struct ParamPoint {
  double p = 0.0;
  double q = 0.0;
};

/// Which first-opportunity reception formula applies to an agent.
/// Ip/Dist1/Dist2 are unconditional; at distance three the link portfolio
/// decides between the tree formula, the adapted (shared-source) formula,
/// or no exact formula at all.
enum class RateCase : std::uint8_t {
  Ip,
  Dist1,
  Dist2,
  Dist3Tree,
  Dist3Adapted,
  Unsupported,
};

const char* rate_case_name(RateCase c);

/// Closed forms exist only through the third information exchange; agents
/// farther from every injection point are excluded from estimation.
inline constexpr int kMaxExchange = 3;

/// Distance marker for agents with no path to any injection point.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

enum class Method : std::uint8_t { NonAggregated, TwoMoment };

const char* method_name(Method m);
Method parse_method(const std::string& name);

}  // namespace diffmom
