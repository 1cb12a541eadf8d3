#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hapnet/backup.hpp"

using namespace hapnet;

namespace {

Cluster make_cluster(Point nadir, int size, int first_id) {
  Cluster c;
  c.nadir = nadir;
  for (int i = 0; i < size; ++i) c.members.push_back(first_id + i);
  return c;
}

}  // namespace

TEST_CASE("pair eligibility needs cloud separation, reach, and fit") {
  const PlanParams p;  // d_c=10, L=60, W=128

  SECTION("15 km apart: inside the shared-cloud radius, no edge") {
    REQUIRE_FALSE(backup_eligible(15.0, 60, 60, p));
  }
  SECTION("25 km apart with small clusters: edge") {
    REQUIRE(backup_eligible(25.0, 60, 60, p));
  }
  SECTION("joint size above the wavelength budget: no edge") {
    REQUIRE_FALSE(backup_eligible(25.0, 70, 70, p));
  }
  SECTION("joint size exactly at the budget still fits") {
    REQUIRE(backup_eligible(25.0, 64, 64, p));
  }
  SECTION("boundaries are strict on both sides of the distance window") {
    REQUIRE_FALSE(backup_eligible(20.0, 1, 1, p));
    REQUIRE_FALSE(backup_eligible(60.0, 1, 1, p));
    REQUIRE(backup_eligible(20.0 + 1e-9, 1, 1, p));
  }
}

TEST_CASE("two mutually eligible clusters pair up with no additions") {
  const PlanParams p;
  std::vector<Cluster> cs = {make_cluster({0.0, 0.0}, 30, 0),
                             make_cluster({25.0, 0.0}, 40, 100)};
  const auto plan = assign_backups(cs, p);
  REQUIRE(plan.added_haps.empty());
  REQUIRE(plan.pairs.size() == 1);
  CHECK(plan.pairs[0].a == 0);
  CHECK(plan.pairs[0].b == 1);
  CHECK(plan.pairs[0].reserved_per_direction == 70);
}

TEST_CASE("an odd group leaves one hap to be covered by an added platform") {
  const PlanParams p;
  std::vector<Cluster> cs = {make_cluster({0.0, 0.0}, 10, 0),
                             make_cluster({25.0, 0.0}, 10, 100),
                             make_cluster({50.0, 0.0}, 10, 200)};
  const auto plan = assign_backups(cs, p);
  REQUIRE(plan.pairs.size() == 2);
  REQUIRE(plan.added_haps.size() == 1);

  std::set<int> covered;
  for (const auto& pr : plan.pairs) {
    covered.insert(pr.a);
    covered.insert(pr.b);
  }
  for (int u = 0; u < 3; ++u) REQUIRE(covered.count(u) == 1);

  // The pair with the added hap reserves only the primary's cluster size.
  const int added = 3;
  bool found = false;
  for (const auto& pr : plan.pairs)
    if (pr.b == added) {
      found = true;
      CHECK(pr.reserved_per_direction == 10);
    }
  REQUIRE(found);
}

TEST_CASE("an isolated hap gets its partner just outside the cloud radius") {
  const PlanParams p;
  std::vector<Cluster> cs = {make_cluster({50.0, 50.0}, 5, 0)};
  const auto plan = assign_backups(cs, p);
  REQUIRE(plan.pairs.size() == 1);
  REQUIRE(plan.added_haps.size() == 1);
  const double d = distance(cs[0].nadir, plan.added_haps[0]);
  CHECK(d == Catch::Approx(2.0 * p.max_cloud_dc * 1.001).margin(1e-9));
  CHECK(2.0 * p.max_cloud_dc < d);
  CHECK(d < p.max_interhap_LHH);
}

TEST_CASE("added placement clamps into a narrow distance window") {
  PlanParams p;
  p.max_cloud_dc = 10.0;
  p.max_interhap_LHH = 20.01;  // the 1.001 bump would overshoot
  std::vector<Cluster> cs = {make_cluster({50.0, 50.0}, 5, 0)};
  const auto plan = assign_backups(cs, p);
  REQUIRE(plan.added_haps.size() == 1);
  const double d = distance(cs[0].nadir, plan.added_haps[0]);
  CHECK(d == Catch::Approx((2.0 * p.max_cloud_dc + p.max_interhap_LHH) / 2.0)
                 .margin(1e-9));
  CHECK(2.0 * p.max_cloud_dc < d);
  CHECK(d < p.max_interhap_LHH);
}

TEST_CASE("every primary ends up in exactly one valid pair") {
  const PlanParams p;
  // A ragged row: some eligible neighbours, some isolated.
  std::vector<Cluster> cs;
  const double xs[] = {0.0, 25.0, 47.0, 95.0, 120.0, 300.0};
  for (int i = 0; i < 6; ++i)
    cs.push_back(make_cluster({xs[i], 10.0}, 20 + i, i * 50));
  const auto plan = assign_backups(cs, p);

  std::set<int> covered;
  for (const auto& pr : plan.pairs) {
    REQUIRE(covered.insert(pr.a).second);
    REQUIRE(covered.insert(pr.b).second);
    // Position lookup spanning primaries and added haps.
    auto pos = [&](int u) {
      return u < 6 ? cs[u].nadir : plan.added_haps[u - 6];
    };
    const double d = distance(pos(pr.a), pos(pr.b));
    CHECK(2.0 * p.max_cloud_dc < d);
    CHECK(d < p.max_interhap_LHH);
  }
  for (int u = 0; u < 6; ++u) REQUIRE(covered.count(u) == 1);
}

TEST_CASE("pairing prefers nearby partners when a swap is free") {
  const PlanParams p;
  // Four clusters where 0-1 and 2-3 are the short pairs; all cross pairs
  // are also eligible, so a bad initial matching could cross them.
  std::vector<Cluster> cs = {
      make_cluster({0.0, 0.0}, 10, 0), make_cluster({25.0, 0.0}, 10, 100),
      make_cluster({0.0, 45.0}, 10, 200), make_cluster({25.0, 45.0}, 10, 300)};
  const auto plan = assign_backups(cs, p);
  REQUIRE(plan.pairs.size() == 2);
  double total = 0.0;
  for (const auto& pr : plan.pairs)
    total += distance(cs[pr.a].nadir, cs[pr.b].nadir);
  CHECK(total == Catch::Approx(50.0).margin(1e-9));
}
