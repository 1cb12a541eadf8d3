#pragma once

#include <stdexcept>

#include "hapnet/design.hpp"

namespace hapnet {

struct PlanReport {
  int n_hap = 0;
  int n_fso = 0;
  double cost = 0.0;               // n_hap * cHAP + n_fso * cFSO
  double mean_devices = 0.0;       // n_fso / n_hap
  int link_count = 0;
  double occupancy = 0.0;          // used slots / (links * 2W), 0 if no links
  long long total_link_wavelengths = 0;      // every used slot, reservations included
  long long lightpath_link_wavelengths = 0;  // slots carrying lightpaths only
  int lightpath_count = 0;
  double mean_hops = 0.0;
  int rejected_lightpaths = 0;
};

inline PlanReport compute_report(const Design& d) {
  PlanReport r;
  r.n_hap = static_cast<int>(d.haps.size());
  for (const auto& h : d.haps) r.n_fso += h.devices;
  r.cost = r.n_hap * d.params.cost_cHAP + r.n_fso * d.params.cost_cFSO;
  r.mean_devices = r.n_hap ? static_cast<double>(r.n_fso) / r.n_hap : 0.0;
  r.link_count = static_cast<int>(d.links.size());
  for (const auto& l : d.links)
    r.total_link_wavelengths +=
        static_cast<long long>(l.used_fwd.size()) + l.used_rev.size();
  const long long capacity =
      2LL * r.link_count * d.params.num_wavelengths_W;
  r.occupancy =
      capacity ? static_cast<double>(r.total_link_wavelengths) / capacity : 0.0;
  for (const auto& lp : d.lightpaths)
    r.lightpath_link_wavelengths += static_cast<long long>(lp.path.size()) - 1;
  r.lightpath_count = static_cast<int>(d.lightpaths.size());
  r.mean_hops = r.lightpath_count ? static_cast<double>(
                                        r.lightpath_link_wavelengths) /
                                        r.lightpath_count
                                  : 0.0;
  for (const auto& rej : d.rejections) r.rejected_lightpaths += rej.count;
  return r;
}

// Connection availability under independent cloud cuts of probability p_cut
// on the two slant paths of a protected pair: both must be cut to lose the
// connection.
inline double availability(double p_cut) {
  if (p_cut < 0.0 || p_cut > 1.0)
    throw std::invalid_argument("p_cut outside [0,1]");
  return 1.0 - p_cut * p_cut;
}

}  // namespace hapnet
