#include <catch2/catch_amalgamated.hpp>

#include "design_checks.hpp"
#include "hapnet/pipeline.hpp"

using namespace hapnet;

namespace {

void expect_sound(const Design& d, const Instance& inst,
                  const BerCurve& curve) {
  const auto errs = checks::verify_design(d, inst, curve);
  for (const auto& e : errs) UNSCOPED_INFO(e);
  REQUIRE(errs.empty());
}

}  // namespace

TEST_CASE("planned designs satisfy every structural invariant") {
  const struct {
    std::uint64_t seed;
    int n;
  } cases[] = {{9, 150}, {17, 300}, {23, 500}, {2, 80}};
  for (const auto& c : cases) {
    ScenarioSpec spec;
    spec.seed = c.seed;
    spec.n_nodes = c.n;
    const Instance inst = generate_instance(spec);
    const auto curve = default_ber_curve(spec.params);

    const auto u = run_pipeline(inst, spec.params, Mode::kUnprotected);
    expect_sound(u.design, inst, curve);
    REQUIRE(u.design.pairs.empty());

    const auto p = run_pipeline(inst, spec.params, Mode::kProtected);
    expect_sound(p.design, inst, curve);
    REQUIRE_FALSE(p.design.pairs.empty());
  }
}

TEST_CASE("designs stay sound under a custom attenuation table") {
  ScenarioSpec spec;
  spec.seed = 40;
  spec.n_nodes = 250;
  const Instance inst = generate_instance(spec);
  const BerCurve curve = TableBer({{0.0, 1e-9}, {45.0, 1e-4}, {60.0, 1e-3}});
  const auto res = run_pipeline(inst, spec.params, Mode::kProtected, &curve);
  expect_sound(res.design, inst, curve);
}

TEST_CASE("the whole pipeline is a pure function of its inputs") {
  ScenarioSpec spec;
  spec.seed = 77;
  spec.n_nodes = 220;
  const Instance inst = generate_instance(spec);
  const auto a = run_pipeline(inst, spec.params, Mode::kProtected);
  const auto b = run_pipeline(inst, spec.params, Mode::kProtected);
  REQUIRE(design_to_json(a.design) == design_to_json(b.design));
  REQUIRE(a.report.occupancy == b.report.occupancy);
  REQUIRE(a.report.cost == b.report.cost);
}

TEST_CASE("an empty-traffic instance yields a topology with no lightpaths") {
  Instance inst;
  for (int i = 0; i < 12; ++i)
    inst.nodes.push_back({i, 5.0 * i + 2.0, 30.0 * (i % 3) + 4.0});
  const PlanParams params;
  const auto curve = default_ber_curve(params);

  const auto u = run_pipeline(inst, params, Mode::kUnprotected);
  REQUIRE(u.design.lightpaths.empty());
  REQUIRE(u.design.links.empty());
  expect_sound(u.design, inst, curve);

  const auto p = run_pipeline(inst, params, Mode::kProtected);
  REQUIRE(p.design.lightpaths.empty());
  // Protection links exist even with no traffic.
  REQUIRE(p.design.links.size() == p.design.pairs.size());
  expect_sound(p.design, inst, curve);
}
