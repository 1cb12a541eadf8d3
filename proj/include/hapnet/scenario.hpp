#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hapnet/instance.hpp"
#include "hapnet/params.hpp"
#include "hapnet/rng.hpp"

namespace hapnet {

struct ScenarioSpec {
  std::uint64_t seed = 0;
  int n_nodes = 100;
  double field_w = 100.0, field_h = 100.0;  // km
  double load_gbps = 0.5;  // target mean egress per node
  PlanParams params;
};

// Random instance: N uniform points on the field; directed flows sampled as
// (src, dst, 1..100 Mbps) pairs, clipped to the per-node rate caps and the
// remaining load budget, until mean per-node egress reaches load_gbps.
// Fully determined by the seed.
inline Instance generate_instance(const ScenarioSpec& spec) {
  Rng rng(spec.seed);
  Instance inst;
  const int n = spec.n_nodes;
  inst.nodes.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, spec.field_w);
    const double y = rng.uniform(0.0, spec.field_h);
    inst.nodes.push_back({i, x, y});
  }

  const int cap = spec.params.rmax_mbps();
  const long long target =
      static_cast<long long>(std::llround(spec.load_gbps * 1000.0)) * n;
  std::vector<int> egress(n, 0), ingress(n, 0);
  std::map<std::pair<int, int>, int> flows;
  long long total = 0;
  long long misses = 0;
  while (total < target && misses < 1000LL * n && n > 1) {
    const int s = static_cast<int>(rng.below(n));
    const int d = static_cast<int>(rng.below(n));
    if (s == d) continue;
    int r = static_cast<int>(rng.uniform_int(1, 100));
    r = std::min<long long>({static_cast<long long>(r), cap - egress[s],
                             cap - ingress[d], target - total});
    if (r <= 0) {
      ++misses;
      continue;
    }
    misses = 0;
    egress[s] += r;
    ingress[d] += r;
    total += r;
    flows[{s, d}] += r;
  }
  for (const auto& [key, mbps] : flows)
    inst.traffic.push_back({key.first, key.second, mbps});
  return inst;
}

inline nlohmann::json params_to_json(const PlanParams& p) {
  return {{"coverage_D", p.coverage_D},
          {"num_wavelengths_W", p.num_wavelengths_W},
          {"wavelength_rate_rmax", p.wavelength_rate_rmax},
          {"max_cloud_dc", p.max_cloud_dc},
          {"hap_payload_C", p.hap_payload_C},
          {"max_interhap_LHH", p.max_interhap_LHH},
          {"ber_threshold_delta", p.ber_threshold_delta},
          {"cost_cHAP", p.cost_cHAP},
          {"cost_cFSO", p.cost_cFSO}};
}

inline PlanParams params_from_json(const nlohmann::json& j) {
  PlanParams p;
  if (j.contains("coverage_D")) p.coverage_D = j.at("coverage_D");
  if (j.contains("num_wavelengths_W"))
    p.num_wavelengths_W = j.at("num_wavelengths_W");
  if (j.contains("wavelength_rate_rmax"))
    p.wavelength_rate_rmax = j.at("wavelength_rate_rmax");
  if (j.contains("max_cloud_dc")) p.max_cloud_dc = j.at("max_cloud_dc");
  if (j.contains("hap_payload_C")) p.hap_payload_C = j.at("hap_payload_C");
  if (j.contains("max_interhap_LHH"))
    p.max_interhap_LHH = j.at("max_interhap_LHH");
  if (j.contains("ber_threshold_delta"))
    p.ber_threshold_delta = j.at("ber_threshold_delta");
  if (j.contains("cost_cHAP")) p.cost_cHAP = j.at("cost_cHAP");
  if (j.contains("cost_cFSO")) p.cost_cFSO = j.at("cost_cFSO");
  return p;
}

// Scenario document: {"params": {...}, "nodes": [{id,x,y}],
// "traffic": [{src,dst,gbps}]}. Rates are integral Mbps internally and
// round-trip exactly through the gbps field.
inline nlohmann::json scenario_to_json(const Instance& inst,
                                       const PlanParams& params) {
  nlohmann::json j;
  j["params"] = params_to_json(params);
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : inst.nodes)
    j["nodes"].push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}});
  j["traffic"] = nlohmann::json::array();
  for (const auto& f : inst.traffic)
    j["traffic"].push_back(
        {{"src", f.src}, {"dst", f.dst}, {"gbps", f.mbps / 1000.0}});
  return j;
}

inline std::pair<Instance, PlanParams> scenario_from_json(
    const nlohmann::json& j) {
  Instance inst;
  PlanParams params = params_from_json(j.value("params", nlohmann::json::object()));
  for (const auto& n : j.at("nodes"))
    inst.nodes.push_back({n.at("id"), n.at("x"), n.at("y")});
  if (j.contains("traffic")) {
    for (const auto& f : j.at("traffic")) {
      const double gbps = f.at("gbps");
      inst.traffic.push_back(
          {f.at("src"), f.at("dst"),
           static_cast<int>(std::llround(gbps * 1000.0))});
    }
  }
  return {inst, params};
}

}  // namespace hapnet
