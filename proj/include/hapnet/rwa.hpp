#pragma once

#include <deque>
#include <vector>

#include "hapnet/clustering.hpp"
#include "hapnet/topology.hpp"

namespace hapnet {

struct Lightpath {
  int id = 0;
  int src = 0;
  int dst = 0;
  int wavelength = 0;
  std::vector<int> path;  // node sequence src..dst
};

struct Rejection {
  int src = 0;
  int dst = 0;
  int count = 0;  // lightpaths that could not be realized
};

struct RoutingResult {
  std::vector<Lightpath> lightpaths;
  std::vector<Rejection> rejections;
};

namespace detail {

// Routes one demand (s, d, n). Wavelengths are tried in least-used order
// with a budget of W distinct trials for the first lightpath. Per trial, a
// working copy of the layer graph drops arcs whose creation would exceed an
// endpoint's payload; arcs of links already built are never capacity-checked
// (the endpoints' devices are already installed). After the first lightpath
// succeeds on path p, the remaining n-1 lightpaths reuse p on successive
// least-used wavelengths; whatever does not fit is re-queued by the caller.
// Returns false only if no wavelength admits a first lightpath.
inline bool route_one_demand(TopologyState& state, int s, int d, int n,
                             int& next_lp_id,
                             std::vector<Lightpath>& accepted, int& remainder) {
  const PlanParams& p = state.params();
  const int h = state.hap_count();
  const int w_total = p.num_wavelengths_W;
  std::vector<char> excluded(w_total, 0);
  std::vector<char> removed(static_cast<size_t>(h) * h, 0);
  int trials = 0;

  while (trials < w_total) {
    const int w = state.least_used_wavelength(excluded);
    if (w < 0) break;
    excluded[w] = 1;
    ++trials;

    std::fill(removed.begin(), removed.end(), 0);
    std::vector<int> path;
    for (;;) {
      path = state.shortest_path_ber(s, d, w, removed);
      if (path.empty()) break;
      bool valid = true;
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        const int u = path[i], v = path[i + 1];
        if (!state.has_link(u, v) &&
            (state.device_count(u) >= p.hap_payload_C ||
             state.device_count(v) >= p.hap_payload_C)) {
          removed[static_cast<size_t>(u) * h + v] = 1;
          valid = false;
          break;
        }
      }
      if (valid) break;
    }
    if (path.empty()) continue;  // next wavelength

    for (size_t i = 0; i + 1 < path.size(); ++i)
      state.ensure_link(path[i], path[i + 1]);
    state.occupy(path, w, next_lp_id);
    accepted.push_back({next_lp_id++, s, d, w, path});

    int remain = n - 1;
    std::vector<char> used_for_p(w_total, 0);
    used_for_p[w] = 1;
    int tried_for_p = 1;
    while (remain > 0 && trials < w_total && tried_for_p < w_total) {
      const int wk = state.least_used_wavelength(used_for_p);
      if (wk < 0) break;
      used_for_p[wk] = 1;
      ++tried_for_p;
      if (state.wavelength_free_along(path, wk)) {
        state.occupy(path, wk, next_lp_id);
        accepted.push_back({next_lp_id++, s, d, wk, path});
        --remain;
      }
    }
    remainder = remain;
    return true;
  }
  remainder = n;
  return false;
}

}  // namespace detail

// Drains the demand queue FIFO (initial order: ascending (src, dst)); a
// demand's unroutable remainder re-enters at the tail as a fresh demand.
// Rejections are terminal: a demand is rejected only when no wavelength can
// carry even one of its lightpaths.
inline RoutingResult build_topology(TopologyState& state,
                                    const std::vector<HapDemand>& demands) {
  RoutingResult result;
  std::deque<HapDemand> queue(demands.begin(), demands.end());
  int next_lp_id = 0;
  while (!queue.empty()) {
    const HapDemand dem = queue.front();
    queue.pop_front();
    int remainder = 0;
    const bool ok = detail::route_one_demand(state, dem.src, dem.dst,
                                             dem.lightpaths, next_lp_id,
                                             result.lightpaths, remainder);
    if (!ok)
      result.rejections.push_back({dem.src, dem.dst, dem.lightpaths});
    else if (remainder > 0)
      queue.push_back({dem.src, dem.dst, remainder});
  }
  return result;
}

}  // namespace hapnet
