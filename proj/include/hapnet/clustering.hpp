#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "hapnet/geometry.hpp"
#include "hapnet/instance.hpp"
#include "hapnet/params.hpp"

namespace hapnet {

struct Cluster {
  Point nadir;               // serving HAP position (ground projection)
  std::vector<int> members;  // ground node ids, in admission order
};

// Greedy sweep clustering:
//  - The plane is cut into horizontal bars of height D*sqrt(2); a node on a
//    boundary belongs to the upper bar (half-open ranges).
//  - Within a bar, nodes are screened left to right (ties by y then id); a
//    cluster takes the maximal prefix whose x-span stays within D*sqrt(2)
//    and whose size stays within W.
//  - The HAP nadir sits at the x-midpoint of the taken span, on the bar's
//    horizontal midline.
//  - While below capacity, the cluster then absorbs the nearest still
//    unclustered nodes (any bar) within distance D of the nadir.
// Every node lands in exactly one cluster and within distance D of its HAP.
inline std::vector<Cluster> cluster_ground_nodes(
    const std::vector<GroundNode>& nodes, const PlanParams& params) {
  const double span = params.coverage_D * std::sqrt(2.0);
  const size_t cap = static_cast<size_t>(params.num_wavelengths_W);

  std::vector<const GroundNode*> order;
  order.reserve(nodes.size());
  for (const auto& n : nodes) order.push_back(&n);
  std::sort(order.begin(), order.end(),
            [](const GroundNode* a, const GroundNode* b) {
              if (a->x != b->x) return a->x < b->x;
              if (a->y != b->y) return a->y < b->y;
              return a->id < b->id;
            });

  std::map<long, std::vector<const GroundNode*>> bars;
  for (const GroundNode* n : order)
    bars[static_cast<long>(std::floor(n->y / span))].push_back(n);

  std::map<int, const GroundNode*> unclustered;
  for (const auto& n : nodes) unclustered[n.id] = &n;

  std::vector<Cluster> clusters;
  for (const auto& [k, bar] : bars) {
    for (;;) {
      std::vector<const GroundNode*> cand;
      for (const GroundNode* n : bar)
        if (unclustered.count(n->id)) cand.push_back(n);
      if (cand.empty()) break;

      const GroundNode* f1 = cand.front();
      std::vector<const GroundNode*> take;
      for (const GroundNode* n : cand) {
        if (n->x - f1->x <= span && take.size() < cap)
          take.push_back(n);
        else
          break;
      }
      const GroundNode* f2 = take.back();

      Cluster c;
      c.nadir = {(f1->x + f2->x) / 2.0, (static_cast<double>(k) + 0.5) * span};
      for (const GroundNode* n : take) {
        c.members.push_back(n->id);
        unclustered.erase(n->id);
      }
      // Fill remaining capacity with the nearest absorbable nodes.
      while (c.members.size() < cap && !unclustered.empty()) {
        int best_id = -1;
        double best_d = 0.0;
        for (const auto& [id, n] : unclustered) {
          const double d = distance({n->x, n->y}, c.nadir);
          if (d <= params.coverage_D &&
              (best_id < 0 || d < best_d || (d == best_d && id < best_id))) {
            best_id = id;
            best_d = d;
          }
        }
        if (best_id < 0) break;
        c.members.push_back(best_id);
        unclustered.erase(best_id);
      }
      clusters.push_back(std::move(c));
    }
  }
  return clusters;
}

struct HapDemand {
  int src = 0;  // HAP index
  int dst = 0;
  int lightpaths = 0;  // ceil(aggregate Mbps / wavelength rate)
};

// Aggregates ground traffic to directed HAP-pair demands. Intra-cluster
// traffic never leaves its serving HAP and produces no demand. Output is
// sorted by (src, dst) — the initial work-queue order.
inline std::vector<HapDemand> aggregate_demands(
    const std::vector<Cluster>& clusters, const std::vector<Flow>& traffic,
    const PlanParams& params) {
  std::map<int, int> node_to_hap;
  for (size_t h = 0; h < clusters.size(); ++h)
    for (int id : clusters[h].members) node_to_hap[id] = static_cast<int>(h);

  std::map<std::pair<int, int>, long long> mbps;
  for (const auto& f : traffic) {
    const int a = node_to_hap.at(f.src);
    const int b = node_to_hap.at(f.dst);
    if (a == b) continue;
    mbps[{a, b}] += f.mbps;
  }

  const long long rate = params.rmax_mbps();
  std::vector<HapDemand> out;
  out.reserve(mbps.size());
  for (const auto& [key, m] : mbps)
    out.push_back({key.first, key.second, static_cast<int>((m + rate - 1) / rate)});
  return out;
}

}  // namespace hapnet
