// Command-line driver for the HAP/FSO network planning toolkit.
//
//   hapnet_cli generate  --n 200 --seed 7 [--load 0.5] [--out DIR]
//   hapnet_cli plan      --scenario scenario.json --mode both [--out DIR]
//   hapnet_cli sweep     --seed 42 [--n-list 100,200,400,800] [--instances 8]
//                        [--load 0.5] [--out DIR]
//   hapnet_cli metrics   --design design.json [--design2 other.json] [--out DIR]
//
// Default output directory: $HAPNET_OUT_DIR, else the working directory.
// Demand rejections are recorded in the outputs, never an error exit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hapnet/hapnet.hpp"

namespace {

std::string default_out_dir() {
  const char* env = std::getenv("HAPNET_OUT_DIR");
  return env && *env ? env : ".";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path().empty()
                                          ? "."
                                          : path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

hapnet::BerCurve make_curve(const std::string& table_csv,
                            const hapnet::PlanParams& params) {
  if (table_csv.empty()) return hapnet::default_ber_curve(params);
  return hapnet::TableBer(hapnet::ber_table_from_csv(read_file(table_csv)));
}

void print_report(const std::string& label, const hapnet::PlanReport& r) {
  std::cout << label << ": haps=" << r.n_hap << " fso=" << r.n_fso
            << " links=" << r.link_count << " lightpaths=" << r.lightpath_count
            << " occupancy=" << r.occupancy
            << " rejected=" << r.rejected_lightpaths << " cost=" << r.cost
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"survivable HAP/FSO network planner"};
  app.require_subcommand(1);

  std::string out_dir = default_out_dir();

  // generate
  auto* gen = app.add_subcommand("generate", "generate a random scenario");
  int gen_n = 100;
  std::uint64_t gen_seed = 0;
  double gen_load = 0.5, gen_fw = 100.0, gen_fh = 100.0;
  gen->add_option("--n", gen_n, "ground node count")->required();
  gen->add_option("--seed", gen_seed, "rng seed")->required();
  gen->add_option("--load", gen_load, "target mean egress per node (Gbps)");
  gen->add_option("--field-w", gen_fw, "field width (km)");
  gen->add_option("--field-h", gen_fh, "field height (km)");
  gen->add_option("--out", out_dir, "output directory");

  // plan
  auto* plan = app.add_subcommand("plan", "plan one scenario");
  std::string plan_scenario, plan_mode = "both", plan_ber_table;
  plan->add_option("--scenario", plan_scenario, "scenario JSON path")->required();
  plan->add_option("--mode", plan_mode, "protected|unprotected|both")
      ->check(CLI::IsMember({"protected", "unprotected", "both"}));
  plan->add_option("--ber-table", plan_ber_table,
                   "CSV of (length_km,ber) points overriding the default curve");
  plan->add_option("--out", out_dir, "output directory");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "paired sweep over instance sizes");
  std::uint64_t sweep_seed = 0;
  std::string sweep_nlist = "100,200,400,800";
  int sweep_instances = 8;
  double sweep_load = 0.5;
  sweep->add_option("--seed", sweep_seed, "master seed")->required();
  sweep->add_option("--n-list", sweep_nlist, "comma-separated node counts");
  sweep->add_option("--instances", sweep_instances, "total instances");
  sweep->add_option("--load", sweep_load, "target mean egress per node (Gbps)");
  sweep->add_option("--out", out_dir, "output directory");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "recompute metrics from designs");
  std::string m_design, m_design2;
  metrics->add_option("--design", m_design, "design JSON path")->required();
  metrics->add_option("--design2", m_design2,
                      "second design for a side-by-side row (unprotected first)");
  metrics->add_option("--out", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::filesystem::path out(out_dir);

    if (gen->parsed()) {
      hapnet::ScenarioSpec spec;
      spec.seed = gen_seed;
      spec.n_nodes = gen_n;
      spec.load_gbps = gen_load;
      spec.field_w = gen_fw;
      spec.field_h = gen_fh;
      const hapnet::Instance inst = hapnet::generate_instance(spec);
      const auto errs = hapnet::validate_instance(inst, spec.params);
      if (!errs.empty()) {
        for (const auto& e : errs) std::cerr << "invalid: " << e << "\n";
        return 1;
      }
      const auto path = out / "scenario.json";
      write_file(path, hapnet::scenario_to_json(inst, spec.params).dump(2) + "\n");
      std::cout << "wrote " << path.string() << " (" << inst.nodes.size()
                << " nodes, " << inst.traffic.size() << " flows)\n";
    }

    if (plan->parsed()) {
      const auto j = nlohmann::json::parse(read_file(plan_scenario));
      const auto [inst, params] = hapnet::scenario_from_json(j);
      const auto errs = hapnet::validate_instance(inst, params);
      if (!errs.empty()) {
        for (const auto& e : errs) std::cerr << "invalid: " << e << "\n";
        return 1;
      }
      const hapnet::BerCurve curve = make_curve(plan_ber_table, params);
      hapnet::ComparisonRow row;
      row.n_nodes = static_cast<int>(inst.nodes.size());
      const bool want_u = plan_mode != "protected";
      const bool want_p = plan_mode != "unprotected";
      if (want_u) {
        const auto res =
            hapnet::run_pipeline(inst, params, hapnet::Mode::kUnprotected, &curve);
        write_file(out / "design_unprotected.json",
                   hapnet::design_to_json(res.design).dump(2) + "\n");
        print_report("unprotected", res.report);
        row.unprot = res.report;
      }
      if (want_p) {
        const auto res =
            hapnet::run_pipeline(inst, params, hapnet::Mode::kProtected, &curve);
        write_file(out / "design_protected.json",
                   hapnet::design_to_json(res.design).dump(2) + "\n");
        print_report("protected", res.report);
        row.prot = res.report;
      }
      if (want_u && want_p) {
        std::ostringstream csv;
        hapnet::write_comparison_csv(csv, {row});
        write_file(out / "metrics.csv", csv.str());
        std::cout << "wrote " << (out / "metrics.csv").string() << "\n";
      }
    }

    if (sweep->parsed()) {
      hapnet::SweepSpec spec;
      spec.seed = sweep_seed;
      spec.instances = sweep_instances;
      spec.load_gbps = sweep_load;
      spec.n_list.clear();
      std::stringstream ss(sweep_nlist);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) spec.n_list.push_back(std::stoi(tok));
      if (spec.n_list.empty()) {
        std::cerr << "empty --n-list\n";
        return 1;
      }
      const auto rows = hapnet::run_sweep(spec);
      std::ostringstream csv;
      hapnet::write_comparison_csv(csv, rows);
      write_file(out / "sweep.csv", csv.str());
      std::cout << "wrote " << (out / "sweep.csv").string() << " (" << rows.size()
                << " rows)\n";
    }

    if (metrics->parsed()) {
      const auto d1 =
          hapnet::design_from_json(nlohmann::json::parse(read_file(m_design)));
      const auto r1 = hapnet::compute_report(d1);
      print_report("design", r1);
      if (!m_design2.empty()) {
        const auto d2 = hapnet::design_from_json(
            nlohmann::json::parse(read_file(m_design2)));
        hapnet::ComparisonRow row;
        row.n_nodes = 0;
        row.unprot = r1;
        row.prot = hapnet::compute_report(d2);
        print_report("design2", row.prot);
        std::ostringstream csv;
        hapnet::write_comparison_csv(csv, {row});
        write_file(out / "metrics.csv", csv.str());
        std::cout << "wrote " << (out / "metrics.csv").string() << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
