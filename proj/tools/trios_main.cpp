// Command-line front end: compile a circuit file, emit the benchmark
// suite, compare the routers across device topologies, or sweep the
// hardware-improvement factor.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trios/benchmarks.hpp"
#include "trios/circuit.hpp"
#include "trios/pipeline.hpp"
#include "trios/qasm.hpp"
#include "trios/schedule.hpp"
#include "trios/topology.hpp"

namespace {

using namespace trios;

CouplingGraph resolve_topology(const std::string& spec) {
  const auto names = standard_topology_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) {
    return topology_by_name(spec);
  }
  std::ifstream in(spec);
  if (!in) {
    throw TopologyError("no such topology or edge-list file: " + spec);
  }
  return topology_from_edge_list(in,
                                 std::filesystem::path(spec).stem().string());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw PipelineError("cannot write " + path);
  out << content;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

int run_compile(const std::string& input_path, const std::string& topology_spec,
                const std::string& router, const std::string& layout,
                const std::string& toffoli, bool noise_aware, double improvement,
                const std::string& out_path, const std::string& report_path) {
  const Circuit input = parse_qasm_file(input_path);
  const CouplingGraph g = resolve_topology(topology_spec);

  CompileOptions opts;
  opts.router = router == "baseline" ? RouterKind::Baseline : RouterKind::Trios;
  opts.layout = layout == "greedy" ? LayoutKind::Greedy : LayoutKind::Identity;
  opts.toffoli = toffoli == "6cnot"   ? ToffoliPolicy::Force6
                 : toffoli == "8cnot" ? ToffoliPolicy::Force8
                                      : ToffoliPolicy::Auto;
  opts.noise_aware = noise_aware;

  NoiseModel model = johannesburg_noise(improvement);
  const std::string name =
      std::filesystem::path(input_path).stem().string();
  const ReportRow row = evaluate(name, input, g, opts, model);

  std::printf("circuit          %s (%d qubits)\n", name.c_str(), row.n_qubits);
  std::printf("topology         %s (%d qubits)\n", g.name().c_str(),
              g.n_qubits());
  std::printf("router / layout  %s / %s\n", row.router.c_str(),
              row.layout.c_str());
  std::printf("toffolis in      %d\n", row.toffoli_in);
  std::printf("cnots in         %d\n", row.cnot_in);
  std::printf("swaps added      %d\n", row.swaps_added);
  std::printf("two-qubit total  %d\n", row.two_qubit_total);
  std::printf("depth            %d\n", row.depth);
  std::printf("duration         %.3f us\n", row.duration_us);
  std::printf("est. success     %.6f (improvement %g)\n", row.est_success,
              improvement);

  if (!out_path.empty()) {
    const CompileResult result = compile(input, g, opts);
    write_qasm_file(result.circuit, out_path);
    std::printf("wrote %s\n", out_path.c_str());
  }
  if (!report_path.empty()) {
    write_text_file(report_path, report_csv({row}));
    std::printf("wrote %s\n", report_path.c_str());
  }
  return 0;
}

int run_bench(const std::string& suite, const std::string& out_dir) {
  if (suite != "table1") {
    throw PipelineError("unknown suite: " + suite);
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
  }
  std::printf("%-24s %7s %9s %12s %12s\n", "benchmark", "qubits", "toffolis",
              "2q-after-8", "calibrated");
  for (const BenchmarkSpec& spec : standard_suite()) {
    const Circuit c = make_benchmark(spec.name);
    const GateCounts counts = count_gates(c);
    std::printf("%-24s %7d %9d %12d %12d\n", spec.name.c_str(), c.n_qubits(),
                counts.toffoli, cnots_after_8cnot(c), spec.cnots_after_8cnot);
    if (!out_dir.empty()) {
      write_qasm_file(c, (std::filesystem::path(out_dir) /
                          (spec.name + ".qasm")).string());
    }
  }
  if (!out_dir.empty()) {
    std::printf("wrote %zu circuits to %s\n", standard_suite().size(),
                out_dir.c_str());
  }
  return 0;
}

int run_compare(const std::string& topologies, double improvement,
                const std::string& report_path) {
  std::vector<std::string> names = topologies == "all"
                                       ? standard_topology_names()
                                       : split_list(topologies);
  const NoiseModel model = johannesburg_noise(improvement);
  const std::vector<ReportRow> rows = compare_suite(names, model);
  const std::vector<TopologySummary> summaries = summarize_compare(rows);

  std::printf("%-16s %14s %15s\n", "topology", "2q-reduction",
              "success-ratio");
  for (const TopologySummary& s : summaries) {
    std::printf("%-16s %13.2f%% %14.2fx\n", s.topology.c_str(),
                s.reduction_percent, s.geomean_success_ratio);
  }
  std::printf("(geometric means over the Toffoli-bearing benchmarks, "
              "improvement %g)\n", improvement);

  if (!report_path.empty()) {
    write_text_file(report_path, report_csv_with_summaries(rows));
    std::printf("wrote %s\n", report_path.c_str());
  }
  return 0;
}

int run_sweep(const std::string& benchmarks, const std::string& topology_spec,
              const std::string& factors_spec, const std::string& report_path) {
  std::vector<std::string> names;
  if (benchmarks == "toffoli") {
    for (const BenchmarkSpec& spec : standard_suite()) {
      if (spec.toffolis > 0) names.push_back(spec.name);
    }
  } else {
    names = split_list(benchmarks);
  }
  const CouplingGraph g = resolve_topology(topology_spec);
  std::vector<double> factors = parse_factors(factors_spec);
  // Keep the simulation-default point in the grid so its row is present
  // and labeled.
  if (std::find(factors.begin(), factors.end(), 20.0) == factors.end() &&
      factors.front() < 20.0 && factors.back() > 20.0) {
    factors.insert(std::upper_bound(factors.begin(), factors.end(), 20.0),
                   20.0);
  }
  const std::vector<SweepRow> rows =
      sensitivity_sweep(names, g, factors, johannesburg_noise());
  const std::string csv = sweep_csv(rows);
  if (report_path.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_text_file(report_path, csv);
    std::printf("wrote %s (%zu rows)\n", report_path.c_str(), rows.size());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toffoli-aware circuit compiler for coupling-limited devices"};
  app.require_subcommand(1);

  auto* compile_cmd =
      app.add_subcommand("compile", "compile a circuit file onto a device");
  std::string input_path, out_path, report_path;
  std::string topology_spec = "johannesburg";
  std::string router = "trios", layout = "identity", toffoli = "auto";
  bool noise_aware = false;
  double improvement = 20.0;
  compile_cmd->add_option("--input", input_path, "circuit file to compile")
      ->required();
  compile_cmd->add_option("--topology", topology_spec,
                          "device name or edge-list file");
  compile_cmd->add_option("--router", router, "trios or baseline")
      ->check(CLI::IsMember({"trios", "baseline"}));
  compile_cmd->add_option("--layout", layout, "identity or greedy")
      ->check(CLI::IsMember({"identity", "greedy"}));
  compile_cmd->add_option("--toffoli", toffoli, "auto, 6cnot, or 8cnot")
      ->check(CLI::IsMember({"auto", "6cnot", "8cnot"}));
  compile_cmd->add_flag("--noise-aware", noise_aware,
                        "weight routing paths by edge error rates");
  compile_cmd->add_option("--improvement", improvement,
                          "hardware improvement factor for the estimate");
  compile_cmd->add_option("--out", out_path, "write the compiled circuit here");
  compile_cmd->add_option("--report", report_path, "write a one-row CSV here");

  auto* bench_cmd =
      app.add_subcommand("bench", "emit the benchmark suite");
  std::string suite = "table1", out_dir;
  bench_cmd->add_option("--suite", suite, "suite name");
  bench_cmd->add_option("--out-dir", out_dir, "write circuit files here");

  auto* compare_cmd = app.add_subcommand(
      "compare", "run the suite through both routers on each topology");
  std::string topologies = "all";
  double cmp_improvement = 20.0;
  std::string cmp_report;
  compare_cmd->add_option("--topologies", topologies,
                          "'all' or a comma-separated list");
  compare_cmd->add_option("--improvement", cmp_improvement,
                          "hardware improvement factor");
  compare_cmd->add_option("--report", cmp_report, "write the full CSV here");

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "success-rate ratio across hardware improvement factors");
  std::string sweep_benchmarks = "toffoli";
  std::string sweep_topology = "johannesburg";
  std::string factors = "1:100:log25";
  std::string sweep_report;
  sweep_cmd->add_option("--benchmarks", sweep_benchmarks,
                        "'toffoli' or a comma-separated list");
  sweep_cmd->add_option("--topology", sweep_topology,
                        "device name or edge-list file");
  sweep_cmd->add_option("--factors", factors,
                        "list a,b,c or range A:B:logN / A:B:linN");
  sweep_cmd->add_option("--report", sweep_report, "write the CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile_cmd->parsed()) {
      return run_compile(input_path, topology_spec, router, layout, toffoli,
                         noise_aware, improvement, out_path, report_path);
    }
    if (bench_cmd->parsed()) {
      return run_bench(suite, out_dir);
    }
    if (compare_cmd->parsed()) {
      return run_compare(topologies, cmp_improvement, cmp_report);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(sweep_benchmarks, sweep_topology, factors, sweep_report);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
