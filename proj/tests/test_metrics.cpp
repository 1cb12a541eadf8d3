#include <catch2/catch_amalgamated.hpp>

#include "hapnet/metrics.hpp"
#include "hapnet/pipeline.hpp"
#include "hapnet/rwa.hpp"

using namespace hapnet;

namespace {

TopologyState make_state(std::vector<Point> haps, PlanParams p,
                         std::vector<BackupPair> pairs = {}) {
  std::vector<int> sizes(haps.size(), 1);
  return TopologyState(std::move(haps), sizes, pairs, p,
                       default_ber_curve(p));
}

Design design_of(TopologyState& st, const RoutingResult& routing,
                 const std::vector<BackupPair>& pairs) {
  std::vector<Cluster> clusters;
  for (size_t i = 0; i < st.cluster_sizes().size(); ++i) {
    Cluster c;
    c.nadir = st.haps()[i];
    for (int k = 0; k < st.cluster_sizes()[i]; ++k)
      c.members.push_back(static_cast<int>(i) * 1000 + k);
    clusters.push_back(c);
  }
  return build_design(st, routing, clusters, pairs);
}

}  // namespace

TEST_CASE("device counting: a lone serving hap holds one transceiver") {
  PlanParams p;
  auto st = make_state({{10.0, 10.0}}, p);
  const auto d = design_of(st, {}, {});
  const auto r = compute_report(d);
  CHECK(r.n_hap == 1);
  CHECK(r.n_fso == 1);
  CHECK(r.mean_devices == Catch::Approx(1.0));
  CHECK(r.link_count == 0);
  CHECK(r.occupancy == 0.0);
  CHECK(r.cost == Catch::Approx(p.cost_cHAP + p.cost_cFSO));
}

TEST_CASE("device counting: a mutual protection pair with its link") {
  PlanParams p;
  std::vector<BackupPair> pairs = {{0, 1, 2}};
  auto st = make_state({{0.0, 0.0}, {25.0, 0.0}}, p, pairs);
  const auto d = design_of(st, {}, pairs);
  const auto r = compute_report(d);
  // Each hap: serving + protection-serving + one link transceiver.
  CHECK(r.n_hap == 2);
  CHECK(r.n_fso == 6);
  CHECK(r.mean_devices == Catch::Approx(3.0));
  CHECK(r.link_count == 1);
  CHECK(r.cost == Catch::Approx(2.0 * p.cost_cHAP + 6.0 * p.cost_cFSO));
}

TEST_CASE("occupancy counts taken slots over both directions") {
  PlanParams p;
  auto st = make_state({{0.0, 0.0}, {30.0, 0.0}}, p);
  st.ensure_link(0, 1);
  for (int w = 0; w < 10; ++w) st.occupy({0, 1}, w, w);
  RoutingResult routing;
  for (int w = 0; w < 10; ++w)
    routing.lightpaths.push_back({w, 0, 1, w, {0, 1}});
  const auto d = design_of(st, routing, {});
  const auto r = compute_report(d);
  CHECK(r.occupancy == Catch::Approx(10.0 / 256.0));
  CHECK(r.total_link_wavelengths == 10);
  CHECK(r.lightpath_link_wavelengths == 10);
}

TEST_CASE("occupancy reaches one when every slot is taken") {
  PlanParams p;
  p.num_wavelengths_W = 4;
  auto st = make_state({{0.0, 0.0}, {30.0, 0.0}}, p);
  st.ensure_link(0, 1);
  RoutingResult routing;
  int id = 0;
  for (int w = 0; w < 4; ++w) {
    st.occupy({0, 1}, w, id);
    routing.lightpaths.push_back({id++, 0, 1, w, {0, 1}});
    st.occupy({1, 0}, w, id);
    routing.lightpaths.push_back({id++, 1, 0, w, {1, 0}});
  }
  const auto d = design_of(st, routing, {});
  CHECK(compute_report(d).occupancy == Catch::Approx(1.0));
}

TEST_CASE("reservations count toward occupancy but not lightpath volume") {
  PlanParams p;
  p.num_wavelengths_W = 8;
  std::vector<BackupPair> pairs = {{0, 1, 3}};
  auto st = make_state({{0.0, 0.0}, {25.0, 0.0}}, p, pairs);
  const auto d = design_of(st, {}, pairs);
  const auto r = compute_report(d);
  CHECK(r.total_link_wavelengths == 6);  // 3 reserved in each direction
  CHECK(r.lightpath_link_wavelengths == 0);
  CHECK(r.occupancy == Catch::Approx(6.0 / 16.0));
}

TEST_CASE("a lightpath's wavelength-link volume equals its hop count") {
  PlanParams p;
  auto st =
      make_state({{0.0, 0.0}, {30.0, 0.0}, {60.0, 0.0}, {90.0, 0.0}}, p);
  st.ensure_link(0, 1);
  st.ensure_link(1, 2);
  st.ensure_link(2, 3);
  st.occupy({0, 1, 2, 3}, 0, 0);
  RoutingResult routing;
  routing.lightpaths.push_back({0, 0, 3, 0, {0, 1, 2, 3}});
  const auto d = design_of(st, routing, {});
  const auto r = compute_report(d);
  CHECK(r.lightpath_link_wavelengths == 3);
  CHECK(r.total_link_wavelengths == 3);
  CHECK(r.mean_hops == Catch::Approx(3.0));
}

TEST_CASE("availability against an independent double-outage model") {
  CHECK(availability(0.5) == 0.75);
  CHECK(availability(0.15) == 0.9775);
  CHECK(availability(0.0) == 1.0);
  CHECK(availability(1.0) == 0.0);
  CHECK_THROWS_AS(availability(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(availability(1.5), std::invalid_argument);
}

TEST_CASE("comparison row deltas recompute from the two reports") {
  ComparisonRow row;
  row.unprot.n_hap = 10;
  row.prot.n_hap = 11;
  row.unprot.n_fso = 40;
  row.prot.n_fso = 46;
  row.unprot.mean_devices = 4.0;
  row.prot.mean_devices = 4.6;
  row.unprot.lightpath_link_wavelengths = 200;
  row.prot.lightpath_link_wavelengths = 220;
  CHECK(row.hap_extra() == 1);
  CHECK(row.fso_extra_pct() == Catch::Approx(15.0));
  CHECK(row.mean_devices_diff() == Catch::Approx(0.6));
  CHECK(row.lightpath_lw_extra_pct() == Catch::Approx(10.0));
}
