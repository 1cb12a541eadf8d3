#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hapnet/params.hpp"

namespace hapnet {

// Per-link bit-error-rate as a function of link length (km). Any curve must
// be non-decreasing in length and map into [0, 0.5].
using BerCurve = std::function<double(double)>;

// Default curve: log10(BER) is linear in length with slope `slope_per_km`
// decades/km, anchored so BER(anchor_length) == anchor_ber exactly.
// Clamped to [floor, 0.5]. With the default parameters, a link at the
// maximum admissible length sits exactly on the BER budget, so a single
// maximum-length hop is infeasible under the strict end-to-end test.
class LogLinearBer {
 public:
  LogLinearBer(double anchor_length, double anchor_ber,
               double slope_per_km = 0.1, double floor = 1e-9)
      : anchor_length_(anchor_length),
        anchor_ber_(anchor_ber),
        slope_(slope_per_km),
        floor_(floor) {}

  double operator()(double length) const {
    if (length < 0) throw std::invalid_argument("negative link length");
    const double v =
        anchor_ber_ * std::pow(10.0, slope_ * (length - anchor_length_));
    return std::min(std::max(v, floor_), 0.5);
  }

 private:
  double anchor_length_, anchor_ber_, slope_, floor_;
};

inline BerCurve default_ber_curve(const PlanParams& p) {
  return LogLinearBer(p.max_interhap_LHH, p.ber_threshold_delta);
}

// Piecewise-linear curve through (length, ber) sample points; clamps to the
// end values outside the sampled range. Points must be strictly increasing
// in length and non-decreasing in ber.
class TableBer {
 public:
  explicit TableBer(std::vector<std::pair<double, double>> points)
      : pts_(std::move(points)) {
    if (pts_.size() < 2) throw std::invalid_argument("need >= 2 table points");
    for (size_t i = 1; i < pts_.size(); ++i) {
      if (pts_[i].first <= pts_[i - 1].first)
        throw std::invalid_argument("table lengths must increase");
      if (pts_[i].second < pts_[i - 1].second)
        throw std::invalid_argument("table ber must be non-decreasing");
    }
  }

  double operator()(double length) const {
    if (length < 0) throw std::invalid_argument("negative link length");
    if (length <= pts_.front().first) return pts_.front().second;
    if (length >= pts_.back().first) return pts_.back().second;
    auto it = std::upper_bound(
        pts_.begin(), pts_.end(), length,
        [](double v, const std::pair<double, double>& q) { return v < q.first; });
    const auto& [x1, y1] = *(it - 1);
    const auto& [x2, y2] = *it;
    return y1 + (y2 - y1) * (length - x1) / (x2 - x1);
  }

 private:
  std::vector<std::pair<double, double>> pts_;
};

// End-to-end feasibility: product of per-hop success probabilities must
// strictly exceed 1 - delta. The empty path is trivially feasible.
inline bool ber_e2e_feasible(const std::vector<double>& path_lengths,
                             double extension_length, double delta,
                             const BerCurve& curve) {
  double prod = 1.0;
  for (double l : path_lengths) prod *= 1.0 - curve(l);
  if (extension_length >= 0) prod *= 1.0 - curve(extension_length);
  return prod > 1.0 - delta;
}

}  // namespace hapnet
