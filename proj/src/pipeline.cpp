// Compilation pipeline and evaluation drivers.

#include "trios/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "trios/benchmarks.hpp"

namespace trios {

namespace {

// Pre-lowers every CCX for the baseline router, which routes pairwise
// and never sees whole Toffolis.
Circuit lower_toffolis(const Circuit& in, ToffoliPolicy policy) {
  Circuit out(in.n_qubits());
  out.set_n_clbits(in.n_clbits());
  for (const Gate& g : in.gates()) {
    if (g.kind != GateKind::CCX) {
      out.append(g.kind, g.qubits, g.params, g.cbit);
      continue;
    }
    if (policy == ToffoliPolicy::Force8) {
      append_toffoli_8cnot(out, g.qubits[0], g.qubits[1], g.qubits[2],
                           g.qubits[2]);
    } else {
      append_toffoli_6cnot(out, g.qubits[0], g.qubits[1], g.qubits[2]);
    }
  }
  return out;
}

bool has_uncoupled_pair(const Circuit& c, const CouplingGraph& g) {
  for (const Gate& gate : c.gates()) {
    if (is_two_qubit(gate.kind) && !g.has_edge(gate.qubits[0], gate.qubits[1])) {
      return true;
    }
  }
  return false;
}

std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* router_name(RouterKind r) {
  return r == RouterKind::Baseline ? "baseline" : "trios";
}

const char* layout_name(LayoutKind l) {
  return l == LayoutKind::Identity ? "identity" : "greedy";
}

double geomean(const std::vector<double>& values) {
  double log_sum = 0.0;
  for (double v : values) log_sum += std::log(v);
  return std::exp(log_sum / static_cast<double>(values.size()));
}

}  // namespace

CompileResult compile(const Circuit& input, const CouplingGraph& g,
                      const CompileOptions& opts) {
  const Circuit pass1 = pass1_decompose(input);
  if (pass1.n_qubits() > g.n_qubits()) {
    throw PipelineError("circuit is wider than the device");
  }
  const Layout initial = opts.layout == LayoutKind::Greedy
                             ? greedy_layout(pass1, g)
                             : identity_layout(g.n_qubits());

  RoutedCircuit routed;
  if (opts.router == RouterKind::Trios) {
    routed = route_trios(pass1, g, initial, opts.noise_aware);
  } else {
    routed = route_baseline(lower_toffolis(pass1, opts.toffoli), g, initial,
                            opts.noise_aware);
  }

  Circuit phys = pass2_decompose(routed.circuit, g, opts.toffoli);
  Layout final = routed.final;
  int swaps = routed.swaps_added;

  // Only the forced 6-CX form can leave uncoupled CX behind (its
  // control-control gates, when the trio sat on a line); route them
  // over the physical wires and fold the movement into the layout.
  if (has_uncoupled_pair(phys, g)) {
    const RoutedCircuit patch =
        route_baseline(phys, g, identity_layout(g.n_qubits()), opts.noise_aware);
    phys = pass2_decompose(patch.circuit, g, opts.toffoli);
    final = compose_layouts(final, patch.final);
    swaps += patch.swaps_added;
  }

  CompileResult result;
  result.circuit = std::move(phys);
  result.initial = routed.initial;
  result.final = final;
  result.swaps_added = swaps;
  result.in_counts = count_gates(pass1);
  result.out_counts = count_gates(result.circuit);
  return result;
}

ReportRow evaluate(const std::string& benchmark_name, const Circuit& input,
                   const CouplingGraph& g, const CompileOptions& opts,
                   const NoiseModel& model) {
  const CompileResult r = compile(input, g, opts);
  const Schedule sched = asap_schedule(r.circuit, model);

  ReportRow row;
  row.benchmark = benchmark_name;
  row.topology = g.name();
  row.router = router_name(opts.router);
  row.layout = layout_name(opts.layout);
  row.n_qubits = input.n_qubits();
  row.toffoli_in = r.in_counts.toffoli;
  row.cnot_in = r.in_counts.cnot;
  row.swaps_added = r.swaps_added;
  row.two_qubit_total = r.out_counts.two_qubit_total;
  row.depth = r.out_counts.depth;
  row.duration_us = sched.duration;
  row.est_success = estimate_success(r.circuit, model);
  return row;
}

std::vector<ReportRow> compare_suite(const std::vector<std::string>& topology_names,
                                     const NoiseModel& model) {
  std::vector<ReportRow> rows;
  for (const std::string& topo_name : topology_names) {
    const CouplingGraph g = topology_by_name(topo_name);
    for (const BenchmarkSpec& spec : standard_suite()) {
      const Circuit input = make_benchmark(spec.name);
      for (RouterKind router : {RouterKind::Baseline, RouterKind::Trios}) {
        CompileOptions opts;
        opts.router = router;
        rows.push_back(evaluate(spec.name, input, g, opts, model));
      }
    }
  }
  return rows;
}

std::vector<TopologySummary> summarize_compare(const std::vector<ReportRow>& rows) {
  std::vector<std::string> topologies;
  for (const ReportRow& row : rows) {
    if (std::find(topologies.begin(), topologies.end(), row.topology) ==
        topologies.end()) {
      topologies.push_back(row.topology);
    }
  }

  std::vector<TopologySummary> summaries;
  for (const std::string& topo : topologies) {
    std::vector<double> two_qubit_ratios;
    std::vector<double> success_ratios;
    for (const ReportRow& base : rows) {
      if (base.topology != topo || base.router != "baseline" ||
          base.toffoli_in == 0) {
        continue;
      }
      for (const ReportRow& trio : rows) {
        if (trio.topology == topo && trio.router == "trios" &&
            trio.benchmark == base.benchmark) {
          two_qubit_ratios.push_back(static_cast<double>(trio.two_qubit_total) /
                                     static_cast<double>(base.two_qubit_total));
          success_ratios.push_back(trio.est_success / base.est_success);
        }
      }
    }
    if (two_qubit_ratios.empty()) continue;
    TopologySummary s;
    s.topology = topo;
    s.geomean_two_qubit_ratio = geomean(two_qubit_ratios);
    s.reduction_percent = (1.0 - s.geomean_two_qubit_ratio) * 100.0;
    s.geomean_success_ratio = geomean(success_ratios);
    summaries.push_back(s);
  }
  return summaries;
}

std::vector<SweepRow> sensitivity_sweep(const std::vector<std::string>& benchmarks,
                                        const CouplingGraph& g,
                                        const std::vector<double>& factors,
                                        const NoiseModel& base) {
  std::vector<SweepRow> rows;
  for (const std::string& name : benchmarks) {
    const Circuit input = make_benchmark(name);

    CompileOptions opts;
    opts.router = RouterKind::Baseline;
    const CompileResult baseline = compile(input, g, opts);
    opts.router = RouterKind::Trios;
    const CompileResult trios = compile(input, g, opts);

    // Durations do not change along the sweep, so schedule once.
    const double dur_baseline = asap_schedule(baseline.circuit, base).duration;
    const double dur_trios = asap_schedule(trios.circuit, base).duration;

    for (double factor : factors) {
      NoiseModel model = base;
      model.improvement = factor;
      SweepRow row;
      row.benchmark = name;
      row.factor = factor;
      row.baseline_success = success_from_counts(
          baseline.out_counts.one_qubit, baseline.out_counts.two_qubit_total,
          baseline.out_counts.measure, dur_baseline, model);
      row.trios_success = success_from_counts(
          trios.out_counts.one_qubit, trios.out_counts.two_qubit_total,
          trios.out_counts.measure, dur_trios, model);
      row.ratio = row.baseline_success == 0.0
                      ? std::numeric_limits<double>::infinity()
                      : row.trios_success / row.baseline_success;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<double> parse_factors(const std::string& spec) {
  const auto colon1 = spec.find(':');
  if (colon1 == std::string::npos) {
    std::vector<double> factors;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size() || v <= 0.0) throw std::invalid_argument(item);
        factors.push_back(v);
      } catch (const std::exception&) {
        throw PipelineError("bad factor value: " + item);
      }
    }
    if (factors.empty()) throw PipelineError("empty factor list");
    return factors;
  }

  const auto colon2 = spec.find(':', colon1 + 1);
  if (colon2 == std::string::npos) {
    throw PipelineError("factor range needs the form A:B:logN or A:B:linN");
  }
  const std::string lo_s = spec.substr(0, colon1);
  const std::string hi_s = spec.substr(colon1 + 1, colon2 - colon1 - 1);
  const std::string kind = spec.substr(colon2 + 1);
  bool log_spaced = false;
  std::string count_s;
  if (kind.rfind("log", 0) == 0) {
    log_spaced = true;
    count_s = kind.substr(3);
  } else if (kind.rfind("lin", 0) == 0) {
    count_s = kind.substr(3);
  } else {
    throw PipelineError("factor range needs the form A:B:logN or A:B:linN");
  }

  double lo = 0.0, hi = 0.0;
  int count = 0;
  try {
    lo = std::stod(lo_s);
    hi = std::stod(hi_s);
    count = std::stoi(count_s);
  } catch (const std::exception&) {
    throw PipelineError("bad factor range: " + spec);
  }
  if (lo <= 0.0 || hi <= lo || count < 2) {
    throw PipelineError("factor range needs 0 < A < B and N >= 2");
  }

  std::vector<double> factors;
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    factors.push_back(log_spaced ? lo * std::pow(hi / lo, t)
                                 : lo + (hi - lo) * t);
  }
  return factors;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::string out =
      "benchmark,topology,router,layout,n_qubits,toffoli_in,cnot_in,"
      "swaps_added,two_qubit_total,depth,duration_us,est_success\n";
  for (const ReportRow& r : rows) {
    out += r.benchmark + ',' + r.topology + ',' + r.router + ',' + r.layout +
           ',' + std::to_string(r.n_qubits) + ',' +
           std::to_string(r.toffoli_in) + ',' + std::to_string(r.cnot_in) +
           ',' + std::to_string(r.swaps_added) + ',' +
           std::to_string(r.two_qubit_total) + ',' + std::to_string(r.depth) +
           ',' + fmt_double(r.duration_us) + ',' + fmt_double(r.est_success) +
           '\n';
  }
  return out;
}

std::string report_csv_with_summaries(const std::vector<ReportRow>& rows) {
  std::string out = report_csv(rows);
  const std::vector<TopologySummary> summaries = summarize_compare(rows);
  for (const TopologySummary& s : summaries) {
    std::string layout = "identity";
    for (const ReportRow& r : rows) {
      if (r.topology == s.topology) {
        layout = r.layout;
        break;
      }
    }
    out += "geomean-toffoli," + s.topology + ",ratio," + layout +
           ",0,0,0,0," + fmt_double(s.geomean_two_qubit_ratio) + ",0,0," +
           fmt_double(s.geomean_success_ratio) + '\n';
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "benchmark,factor,baseline_success,trios_success,ratio,label\n";
  for (const SweepRow& r : rows) {
    const char* label = r.factor == 1.0    ? "current-hardware"
                        : r.factor == 20.0 ? "simulation-default"
                                           : "";
    out += r.benchmark + ',' + fmt_double(r.factor) + ',' +
           fmt_double(r.baseline_success) + ',' + fmt_double(r.trios_success) +
           ',' + fmt_double(r.ratio) + ',' + label + '\n';
  }
  return out;
}

}  // namespace trios
