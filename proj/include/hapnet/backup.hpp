#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hapnet/clustering.hpp"
#include "hapnet/geometry.hpp"
#include "hapnet/matching.hpp"
#include "hapnet/params.hpp"

namespace hapnet {

// Mutual 1+1 protection pair. reserved_per_direction wavelength slots are
// set aside on the pair's link in each direction: one slot per ground node
// of either cluster (upstream duplicates of one side + downstream duplicates
// of the other, per direction).
struct BackupPair {
  int a = 0;
  int b = 0;
  int reserved_per_direction = 0;
};

struct BackupPlan {
  std::vector<BackupPair> pairs;   // covers every primary HAP exactly once
  std::vector<Point> added_haps;   // fresh backup HAPs, serve no cluster
};

// Pairing eligibility: the pair link must be longer than twice the largest
// cloud (so one cloud cannot cut both slant paths) yet shorter than the
// maximum inter-HAP link, and the combined cluster size must fit the
// per-direction wavelength budget.
inline bool backup_eligible(double d, int size_a, int size_b,
                            const PlanParams& p) {
  return 2.0 * p.max_cloud_dc < d && d < p.max_interhap_LHH &&
         size_a + size_b <= p.num_wavelengths_W;
}

// Adjacency matrix of the pairing eligibility graph over primary HAPs.
inline std::vector<std::vector<char>> eligibility_graph(
    const std::vector<Cluster>& clusters, const PlanParams& params) {
  const int h = static_cast<int>(clusters.size());
  std::vector<std::vector<char>> adj(h, std::vector<char>(h, 0));
  for (int a = 0; a < h; ++a) {
    for (int b = a + 1; b < h; ++b) {
      const double d = distance(clusters[a].nadir, clusters[b].nadir);
      if (backup_eligible(d, static_cast<int>(clusters[a].members.size()),
                          static_cast<int>(clusters[b].members.size()), params))
        adj[a][b] = adj[b][a] = 1;
    }
  }
  return adj;
}

// Pairs primary HAPs by maximum-cardinality matching on the eligibility
// graph (ties preferring smaller total pair distance), then gives each
// unmatched primary a fresh backup HAP placed just outside twice the cloud
// diameter, pushed outward along the centroid->primary ray. Every primary
// ends up in exactly one pair.
inline BackupPlan assign_backups(const std::vector<Cluster>& clusters,
                                 const PlanParams& params) {
  const int h = static_cast<int>(clusters.size());
  const auto adj = eligibility_graph(clusters, params);

  std::vector<std::vector<double>> dist_m(h, std::vector<double>(h, 0.0));
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b)
      dist_m[a][b] = distance(clusters[a].nadir, clusters[b].nadir);

  BlossomMatching bm(h);
  for (int a = 0; a < h; ++a)
    for (int b = a + 1; b < h; ++b)
      if (adj[a][b]) bm.add_edge(a, b);
  std::vector<int> mate = bm.solve();
  prefer_shorter_pairs(mate, adj, dist_m);

  BackupPlan plan;
  for (int a = 0; a < h; ++a) {
    const int b = mate[a];
    if (b > a)
      plan.pairs.push_back({a, b,
                            static_cast<int>(clusters[a].members.size() +
                                             clusters[b].members.size())});
  }

  Point centroid{0, 0};
  for (const auto& c : clusters) {
    centroid.x += c.nadir.x;
    centroid.y += c.nadir.y;
  }
  if (h > 0) {
    centroid.x /= h;
    centroid.y /= h;
  }

  for (int u = 0; u < h; ++u) {
    if (mate[u] != -1) continue;
    double dx = clusters[u].nadir.x - centroid.x;
    double dy = clusters[u].nadir.y - centroid.y;
    double norm = std::hypot(dx, dy);
    if (norm < 1e-12) {
      dx = 1.0;
      dy = 0.0;
      norm = 1.0;
    }
    double d = 2.0 * params.max_cloud_dc * 1.001;
    if (d >= params.max_interhap_LHH)
      d = (2.0 * params.max_cloud_dc + params.max_interhap_LHH) / 2.0;
    const Point pos{clusters[u].nadir.x + dx / norm * d,
                    clusters[u].nadir.y + dy / norm * d};
    const int added_index = h + static_cast<int>(plan.added_haps.size());
    plan.added_haps.push_back(pos);
    plan.pairs.push_back(
        {u, added_index, static_cast<int>(clusters[u].members.size())});
  }

  for (const auto& pr : plan.pairs)
    if (pr.reserved_per_direction > params.num_wavelengths_W)
      throw std::logic_error("backup reservation exceeds wavelength budget");
  return plan;
}

}  // namespace hapnet
