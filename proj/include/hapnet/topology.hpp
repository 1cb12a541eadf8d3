#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hapnet/backup.hpp"
#include "hapnet/ber.hpp"
#include "hapnet/geometry.hpp"
#include "hapnet/params.hpp"

namespace hapnet {

// Slot labels for one (direction, wavelength) cell.
constexpr int kSlotFree = -1;
constexpr int kSlotReserved = -2;  // backup duplicate traffic

// One bidirectional inter-HAP link with per-direction wavelength slots.
// fwd is the low-index -> high-index direction.
struct Link {
  double length = 0.0;
  std::vector<int> fwd, rev;  // slot label per wavelength
  int used_fwd = 0, used_rev = 0;
};

// Mutable topology under construction: the link set (initially the backup
// pair links with their reservations), per-direction wavelength occupancy,
// and per-HAP device counts. Device rule: one serving device if the HAP has
// a cluster, one backup-serving device if it backs up a nonempty cluster,
// one device per endpoint of each adjacent bidirectional link.
class TopologyState {
 public:
  TopologyState(std::vector<Point> haps, std::vector<int> cluster_sizes,
                const std::vector<BackupPair>& pairs, const PlanParams& params,
                BerCurve curve)
      : params_(params),
        curve_(std::move(curve)),
        haps_(std::move(haps)),
        cluster_sizes_(std::move(cluster_sizes)),
        wavelength_use_(params.num_wavelengths_W, 0) {
    const int h = static_cast<int>(haps_.size());
    cand_.assign(h, std::vector<double>(h, -1.0));
    for (int a = 0; a < h; ++a) {
      for (int b = a + 1; b < h; ++b) {
        const double d = distance(haps_[a], haps_[b]);
        if (d < params_.max_interhap_LHH) cand_[a][b] = cand_[b][a] = d;
      }
    }

    devices_.assign(h, 0);
    std::vector<char> backs_nonempty(h, 0);
    for (const auto& pr : pairs) {
      if (cluster_sizes_[pr.b] > 0) backs_nonempty[pr.a] = 1;
      if (cluster_sizes_[pr.a] > 0) backs_nonempty[pr.b] = 1;
    }
    for (int u = 0; u < h; ++u)
      devices_[u] = (cluster_sizes_[u] > 0 ? 1 : 0) + (backs_nonempty[u] ? 1 : 0);

    for (const auto& pr : pairs) {
      if (pr.reserved_per_direction > params_.num_wavelengths_W)
        throw std::logic_error("reservation exceeds wavelength budget");
      Link& l = create_link(pr.a, pr.b);
      for (int w = 0; w < pr.reserved_per_direction; ++w) {
        l.fwd[w] = kSlotReserved;
        l.rev[w] = kSlotReserved;
        wavelength_use_[w] += 2;
      }
      l.used_fwd = l.used_rev = pr.reserved_per_direction;
      backup_links_.push_back(key(pr.a, pr.b));
    }
  }

  int hap_count() const { return static_cast<int>(haps_.size()); }
  const std::vector<Point>& haps() const { return haps_; }
  const std::vector<int>& cluster_sizes() const { return cluster_sizes_; }
  const std::vector<int>& device_counts() const { return devices_; }
  const std::map<std::pair<int, int>, Link>& links() const { return links_; }
  const std::vector<std::pair<int, int>>& backup_link_keys() const {
    return backup_links_;
  }
  const PlanParams& params() const { return params_; }
  const BerCurve& ber_curve() const { return curve_; }

  // Admissible candidate arc length, or -1 if the pair is too far apart.
  double candidate_length(int u, int v) const { return cand_[u][v]; }

  bool has_link(int u, int v) const { return links_.count(key(u, v)) > 0; }

  // Slot label on the directed arc u->v, or kSlotFree if the link does not
  // exist yet.
  int slot(int u, int v, int w) const {
    auto it = links_.find(key(u, v));
    if (it == links_.end()) return kSlotFree;
    return u < v ? it->second.fwd[w] : it->second.rev[w];
  }

  // Directed arc weight: an arc never used in this direction costs 100 (so
  // building new links is a last resort); otherwise the used fraction of its
  // wavelengths, in [1/W, 1].
  double edge_weight(int u, int v) const {
    auto it = links_.find(key(u, v));
    if (it == links_.end()) return 100.0;
    const int used = u < v ? it->second.used_fwd : it->second.used_rev;
    if (used == 0) return 100.0;
    return static_cast<double>(used) / params_.num_wavelengths_W;
  }

  // Least-used wavelength: occupied on the fewest directed links; ties go to
  // the lowest index. Returns -1 if everything is excluded.
  int least_used_wavelength(const std::vector<char>& excluded) const {
    int best = -1;
    for (int w = 0; w < params_.num_wavelengths_W; ++w) {
      if (excluded[w]) continue;
      if (best < 0 || wavelength_use_[w] < wavelength_use_[best]) best = w;
    }
    return best;
  }

  // Dijkstra on the wavelength-w layer graph restricted by `removed`
  // (directed arcs blocked for this trial). A relaxation is admitted only if
  // the end-to-end success probability along the tentative path stays
  // strictly above the BER budget. Returns the node sequence s..d, or empty
  // if unreachable.
  std::vector<int> shortest_path_ber(int s, int d, int w,
                                     const std::vector<char>& removed) const {
    const int h = hap_count();
    const double kInf = 1e300;
    std::vector<double> dist(h, kInf), prod(h, 0.0);
    std::vector<int> prev(h, -1);
    std::vector<char> done(h, 0);
    dist[s] = 0.0;
    prod[s] = 1.0;
    for (int iter = 0; iter < h; ++iter) {
      int u = -1;
      for (int v = 0; v < h; ++v)
        if (!done[v] && dist[v] < kInf && (u < 0 || dist[v] < dist[u])) u = v;
      if (u < 0) break;
      done[u] = 1;
      if (u == d) break;
      for (int v = 0; v < h; ++v) {
        if (done[v] || v == u || cand_[u][v] < 0) continue;
        if (removed[u * h + v]) continue;
        if (slot(u, v, w) != kSlotFree) continue;
        const double alt = dist[u] + edge_weight(u, v);
        if (alt < dist[v]) {
          const double pr = prod[u] * (1.0 - curve_(cand_[u][v]));
          if (pr > 1.0 - params_.ber_threshold_delta) {
            dist[v] = alt;
            prev[v] = u;
            prod[v] = pr;
          }
        }
      }
    }
    std::vector<int> path;
    if (dist[d] >= kInf) return path;
    for (int v = d; v != s; v = prev[v]) path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;
  }

  int device_count(int u) const { return devices_[u]; }

  // Adds the bidirectional link if absent, charging one device to each
  // endpoint. Caller must have verified payload headroom.
  void ensure_link(int u, int v) {
    if (has_link(u, v)) return;
    create_link(u, v);
    if (devices_[u] > params_.hap_payload_C ||
        devices_[v] > params_.hap_payload_C)
      throw std::logic_error("payload exceeded while creating link");
  }

  // Marks wavelength w with `label` along the directed arcs of `path`.
  void occupy(const std::vector<int>& path, int w, int label) {
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      const int u = path[i], v = path[i + 1];
      Link& l = links_.at(key(u, v));
      int& cell = u < v ? l.fwd[w] : l.rev[w];
      if (cell != kSlotFree) throw std::logic_error("wavelength collision");
      cell = label;
      (u < v ? l.used_fwd : l.used_rev)++;
      wavelength_use_[w]++;
    }
  }

  bool wavelength_free_along(const std::vector<int>& path, int w) const {
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (slot(path[i], path[i + 1], w) != kSlotFree) return false;
    return true;
  }

 private:
  static std::pair<int, int> key(int u, int v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  }

  Link& create_link(int a, int b) {
    const auto k = key(a, b);
    Link l;
    l.length = cand_[a][b];
    if (l.length < 0) throw std::logic_error("link beyond admissible length");
    l.fwd.assign(params_.num_wavelengths_W, kSlotFree);
    l.rev.assign(params_.num_wavelengths_W, kSlotFree);
    devices_[k.first]++;
    devices_[k.second]++;
    return links_.emplace(k, std::move(l)).first->second;
  }

  PlanParams params_;
  BerCurve curve_;
  std::vector<Point> haps_;
  std::vector<int> cluster_sizes_;
  std::vector<std::vector<double>> cand_;
  std::map<std::pair<int, int>, Link> links_;
  std::vector<std::pair<int, int>> backup_links_;
  std::vector<int> devices_;
  std::vector<int> wavelength_use_;  // directed-link occupations per wavelength
};

}  // namespace hapnet
