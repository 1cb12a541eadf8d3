#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hapnet/design.hpp"
#include "hapnet/scenario.hpp"

namespace hapnet {

inline nlohmann::json design_to_json(const Design& d) {
  nlohmann::json j;
  j["params"] = params_to_json(d.params);
  j["primary_count"] = d.primary_count;
  j["haps"] = nlohmann::json::array();
  for (const auto& h : d.haps)
    j["haps"].push_back({{"id", h.id},
                         {"x", h.pos.x},
                         {"y", h.pos.y},
                         {"role", h.added_backup ? "added-backup" : "primary-serving"},
                         {"cluster", h.cluster},
                         {"devices", h.devices}});
  j["links"] = nlohmann::json::array();
  for (const auto& l : d.links)
    j["links"].push_back({{"a", l.a},
                          {"b", l.b},
                          {"length", l.length},
                          {"reserved_per_direction", l.reserved_per_direction},
                          {"used_ab", l.used_fwd},
                          {"used_ba", l.used_rev}});
  j["backup_pairs"] = nlohmann::json::array();
  for (const auto& p : d.pairs)
    j["backup_pairs"].push_back(
        {{"a", p.a}, {"b", p.b}, {"reserved_per_direction", p.reserved_per_direction}});
  j["lightpaths"] = nlohmann::json::array();
  for (const auto& lp : d.lightpaths) {
    nlohmann::json arcs = nlohmann::json::array();
    for (size_t i = 0; i + 1 < lp.path.size(); ++i)
      arcs.push_back({lp.path[i], lp.path[i + 1]});
    j["lightpaths"].push_back({{"id", lp.id},
                               {"src", lp.src},
                               {"dst", lp.dst},
                               {"wavelength", lp.wavelength},
                               {"arcs", arcs}});
  }
  j["rejections"] = nlohmann::json::array();
  for (const auto& r : d.rejections)
    j["rejections"].push_back({{"src", r.src}, {"dst", r.dst}, {"count", r.count}});
  return j;
}

inline Design design_from_json(const nlohmann::json& j) {
  Design d;
  d.params = params_from_json(j.at("params"));
  d.primary_count = j.at("primary_count");
  for (const auto& h : j.at("haps")) {
    HapInfo hi;
    hi.id = h.at("id");
    hi.pos = {h.at("x"), h.at("y")};
    hi.added_backup = h.at("role") == "added-backup";
    hi.cluster = h.at("cluster").get<std::vector<int>>();
    hi.devices = h.at("devices");
    d.haps.push_back(std::move(hi));
  }
  for (const auto& l : j.at("links")) {
    LinkInfo li;
    li.a = l.at("a");
    li.b = l.at("b");
    li.length = l.at("length");
    li.reserved_per_direction = l.at("reserved_per_direction");
    li.used_fwd = l.at("used_ab").get<std::vector<int>>();
    li.used_rev = l.at("used_ba").get<std::vector<int>>();
    d.links.push_back(std::move(li));
  }
  for (const auto& p : j.at("backup_pairs"))
    d.pairs.push_back({p.at("a"), p.at("b"), p.at("reserved_per_direction")});
  for (const auto& lp : j.at("lightpaths")) {
    Lightpath l;
    l.id = lp.at("id");
    l.src = lp.at("src");
    l.dst = lp.at("dst");
    l.wavelength = lp.at("wavelength");
    const auto& arcs = lp.at("arcs");
    for (size_t i = 0; i < arcs.size(); ++i) {
      if (i == 0) l.path.push_back(arcs[i][0]);
      l.path.push_back(arcs[i][1]);
    }
    d.lightpaths.push_back(std::move(l));
  }
  for (const auto& r : j.at("rejections"))
    d.rejections.push_back({r.at("src"), r.at("dst"), r.at("count")});
  return d;
}

// Loads a (length_km, ber) table from two-column CSV text (header optional).
inline std::vector<std::pair<double, double>> ber_table_from_csv(
    const std::string& text) {
  std::vector<std::pair<double, double>> pts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    const size_t comma = line.find(',');
    if (comma == std::string::npos) continue;
    try {
      pts.emplace_back(std::stod(line.substr(0, comma)),
                       std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      continue;  // header or blank line
    }
  }
  return pts;
}

}  // namespace hapnet
