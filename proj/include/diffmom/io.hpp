#pragma once

#include "diffmom/estimate.hpp"
#include "diffmom/montecarlo.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace diffmom {

/// Parse error with file/line context, message prefixed accordingly.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CSV schemas (UTF-8, LF, 0-indexed agents per village):
//   networks  header village,src,dst
//   ips       header village,agent
//   outcomes  header village,agent,t,y     full panel, t = 1..T
//   info      header village,agent,t,s     t = 1..T-1 (debug export)

std::vector<VillageNetwork> load_networks(const std::string& network_file,
                                          const std::string& ip_file);

/// Load and cross-validate a full estimation sample. The horizon is inferred
/// from the outcome panel, reach is computed per village.
Sample load_sample(const std::string& network_file, const std::string& ip_file,
                   const std::string& outcome_file);

void write_networks_csv(const std::string& network_file,
                        const std::string& ip_file,
                        std::span<const VillageNetwork> nets);
void write_outcomes_csv(const std::string& path, const Sample& sample);
void write_info_csv(const std::string& path, const Sample& sample);

/// Objective surface on a grid, rows `p,q,Q` in lexicographic (p, q) order.
/// Values are exactly those of the objective functions.
void export_surface(std::ostream& out, const Sample& sample, Method method,
                    const GridSpec& grid, Weights weights = {});

/// 17-significant-digit decimal rendering, round-trip exact for doubles.
std::string format_double(double x);

std::string report_to_json(const EstimateReport& report,
                           const CovarianceReport* cov);

/// Monte Carlo config from JSON. Networks come either from
/// {"networks": file, "ips": file} or {"synthetic": {...}}.
McConfig load_mc_config(const std::string& path);

/// estimates.csv, table.csv and scatter.csv under the output directory.
void write_mc_outputs(const std::string& out_dir, const McConfig& config,
                      const McTable& table);

}  // namespace diffmom
