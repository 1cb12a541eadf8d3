#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hapnet/params.hpp"

namespace hapnet {

struct GroundNode {
  int id = 0;
  double x = 0.0;  // km, first quadrant
  double y = 0.0;
};

// Directed traffic entry. Rates are integral Mbps so cap and ceiling
// arithmetic stays exact.
struct Flow {
  int src = 0;
  int dst = 0;
  int mbps = 0;
};

struct Instance {
  std::vector<GroundNode> nodes;
  std::vector<Flow> traffic;
};

// Returns every violation found; the instance is usable iff the list is
// empty. Checks: node set nonempty, ids unique, coordinates nonnegative,
// rates positive, no self-demands, per-node ingress/egress caps.
inline std::vector<std::string> validate_instance(const Instance& inst,
                                                  const PlanParams& params) {
  std::vector<std::string> errs;
  if (inst.nodes.empty()) errs.push_back("empty node set");
  std::set<int> ids;
  for (const auto& n : inst.nodes) {
    if (!ids.insert(n.id).second)
      errs.push_back("duplicate id " + std::to_string(n.id));
    if (n.x < 0 || n.y < 0)
      errs.push_back("negative coordinate on node " + std::to_string(n.id));
  }
  const int cap = params.rmax_mbps();
  std::map<int, long long> egress, ingress;
  for (const auto& f : inst.traffic) {
    if (f.src == f.dst)
      errs.push_back("self demand on node " + std::to_string(f.src));
    if (f.mbps <= 0)
      errs.push_back("nonpositive rate " + std::to_string(f.src) + "->" +
                     std::to_string(f.dst));
    if (!ids.count(f.src) || !ids.count(f.dst))
      errs.push_back("traffic references unknown node");
    egress[f.src] += f.mbps;
    ingress[f.dst] += f.mbps;
  }
  for (const auto& [id, tot] : egress)
    if (tot > cap)
      errs.push_back("egress cap exceeded on node " + std::to_string(id));
  for (const auto& [id, tot] : ingress)
    if (tot > cap)
      errs.push_back("ingress cap exceeded on node " + std::to_string(id));
  return errs;
}

}  // namespace hapnet
