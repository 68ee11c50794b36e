// End-to-end compilation and the evaluation drivers.
//
// compile() chains the passes: lower to {1q, CX, CCX}, place, route
// (keeping Toffolis whole or pre-lowering them, depending on the
// router), then lower the survivors against the realized placement.
// The drivers run the benchmark suite through both routers and report
// sizes, schedules, and estimated success rates.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "trios/circuit.hpp"
#include "trios/decompose.hpp"
#include "trios/routing.hpp"
#include "trios/schedule.hpp"
#include "trios/topology.hpp"

namespace trios {

struct PipelineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RouterKind {
  Baseline,  // decompose every Toffoli first, then route pairwise
  Trios,     // route Toffoli operands as a group, decompose after
};

enum class LayoutKind { Identity, Greedy };

struct CompileOptions {
  RouterKind router = RouterKind::Trios;
  LayoutKind layout = LayoutKind::Identity;
  ToffoliPolicy toffoli = ToffoliPolicy::Auto;
  bool noise_aware = false;
};

struct CompileResult {
  Circuit circuit;  // device-width, all two-qubit gates coupled
  Layout initial;
  Layout final;
  int swaps_added = 0;
  GateCounts in_counts;   // of the circuit entering the router
  GateCounts out_counts;  // of the emitted physical circuit
};

CompileResult compile(const Circuit& input, const CouplingGraph& g,
                      const CompileOptions& opts = {});

// One benchmark/topology/router evaluation cell.
struct ReportRow {
  std::string benchmark;
  std::string topology;
  std::string router;
  std::string layout;
  int n_qubits = 0;
  int toffoli_in = 0;
  int cnot_in = 0;
  int swaps_added = 0;
  int two_qubit_total = 0;
  int depth = 0;
  double duration_us = 0.0;
  double est_success = 0.0;
};

ReportRow evaluate(const std::string& benchmark_name, const Circuit& input,
                   const CouplingGraph& g, const CompileOptions& opts,
                   const NoiseModel& model);

// Runs the full suite through both routers on each named topology
// (identity layout, placement-driven Toffoli lowering).
std::vector<ReportRow> compare_suite(const std::vector<std::string>& topology_names,
                                     const NoiseModel& model);

// Geometric means over the Toffoli-bearing benchmarks of one topology.
struct TopologySummary {
  std::string topology;
  double geomean_two_qubit_ratio = 0.0;  // trios / baseline
  double reduction_percent = 0.0;        // (1 - ratio) * 100
  double geomean_success_ratio = 0.0;    // trios / baseline
};

std::vector<TopologySummary> summarize_compare(const std::vector<ReportRow>& rows);

// Success-rate ratio as error rates and coherence times improve
// together by a common factor; gate durations stay fixed.
struct SweepRow {
  std::string benchmark;
  double factor = 0.0;
  double baseline_success = 0.0;
  double trios_success = 0.0;
  double ratio = 0.0;  // +inf when the baseline estimate underflows to zero
};

std::vector<SweepRow> sensitivity_sweep(const std::vector<std::string>& benchmarks,
                                        const CouplingGraph& g,
                                        const std::vector<double>& factors,
                                        const NoiseModel& base);

// Factor lists: "a,b,c", "A:B:logN" (log-spaced), or "A:B:linN".
std::vector<double> parse_factors(const std::string& spec);

// CSV/serialization; doubles are written with %.17g so reruns are
// byte-identical.
std::string report_csv(const std::vector<ReportRow>& rows);

// report_csv plus one trailing summary line per topology, benchmark
// field "geomean-toffoli" and router field "ratio": the
// two_qubit_total cell carries the geometric-mean two-qubit ratio and
// the est_success cell the geometric-mean success ratio.
std::string report_csv_with_summaries(const std::vector<ReportRow>& rows);

// The label column marks factor 1 as "current-hardware" and factor 20
// as "simulation-default".
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace trios
