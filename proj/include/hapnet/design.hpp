#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hapnet/backup.hpp"
#include "hapnet/clustering.hpp"
#include "hapnet/params.hpp"
#include "hapnet/rwa.hpp"
#include "hapnet/topology.hpp"

namespace hapnet {

struct HapInfo {
  int id = 0;
  Point pos;
  bool added_backup = false;       // true for HAPs created by the pairing step
  std::vector<int> cluster;        // served ground node ids (empty if added)
  int devices = 0;                 // final installed FSO device count
};

struct LinkInfo {
  int a = 0, b = 0;                // a < b
  double length = 0.0;
  int reserved_per_direction = 0;  // backup slots (wavelengths 0..r-1)
  std::vector<int> used_fwd;       // wavelengths in use a->b (incl. reserved)
  std::vector<int> used_rev;       // wavelengths in use b->a
};

// Completed plan: everything needed to recompute metrics and re-verify the
// construction invariants without the builder's internal state.
struct Design {
  PlanParams params;
  int primary_count = 0;
  std::vector<HapInfo> haps;
  std::vector<LinkInfo> links;     // sorted by (a, b)
  std::vector<BackupPair> pairs;   // empty for an unprotected design
  std::vector<Lightpath> lightpaths;
  std::vector<Rejection> rejections;
};

inline Design build_design(const TopologyState& state,
                           const RoutingResult& routing,
                           const std::vector<Cluster>& clusters,
                           const std::vector<BackupPair>& pairs) {
  Design d;
  d.params = state.params();
  d.primary_count = static_cast<int>(clusters.size());
  d.pairs = pairs;
  d.lightpaths = routing.lightpaths;
  d.rejections = routing.rejections;

  for (int u = 0; u < state.hap_count(); ++u) {
    HapInfo h;
    h.id = u;
    h.pos = state.haps()[u];
    h.added_backup = u >= d.primary_count;
    if (!h.added_backup) h.cluster = clusters[u].members;
    h.devices = state.device_count(u);
    d.haps.push_back(std::move(h));
  }

  std::vector<std::pair<std::pair<int, int>, int>> reserved;
  for (const auto& pr : pairs) {
    const auto k = pr.a < pr.b ? std::make_pair(pr.a, pr.b)
                               : std::make_pair(pr.b, pr.a);
    reserved.push_back({k, pr.reserved_per_direction});
  }
  for (const auto& [k, link] : state.links()) {
    LinkInfo li;
    li.a = k.first;
    li.b = k.second;
    li.length = link.length;
    for (const auto& [rk, r] : reserved)
      if (rk == k) li.reserved_per_direction = r;
    for (int w = 0; w < d.params.num_wavelengths_W; ++w) {
      if (link.fwd[w] != kSlotFree) li.used_fwd.push_back(w);
      if (link.rev[w] != kSlotFree) li.used_rev.push_back(w);
    }
    d.links.push_back(std::move(li));
  }
  return d;
}

}  // namespace hapnet
