// Acceptance gate: one timed PASS/FAIL line per criterion, exit 0 only
// if every criterion holds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "trios/benchmarks.hpp"
#include "trios/circuit.hpp"
#include "trios/decompose.hpp"
#include "trios/pipeline.hpp"
#include "trios/routing.hpp"
#include "trios/schedule.hpp"
#include "trios/topology.hpp"
#include "trios/unitary.hpp"

using namespace trios;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const char* name, bool ok, double seconds, const std::string& detail) {
  std::printf("%-4s %-58s %7.2fs  %s\n", ok ? "PASS" : "FAIL", name, seconds,
              detail.c_str());
  if (!ok) ++failures;
}

Matrix ccx_reference() {
  Circuit c(3);
  c.ccx(0, 1, 2);
  return to_unitary(c);
}

// ---------------------------------------------------------------------------

bool criterion_1(std::string& detail, double& limit) {
  limit = 1.0;
  Circuit six(3);
  append_toffoli_6cnot(six, 0, 1, 2);
  bool ok = equivalent_up_to_phase(to_unitary(six), ccx_reference(), 1e-9);

  for (int target_pos : {0, 1, 2}) {
    Circuit eight(3);
    append_toffoli_8cnot(eight, 0, 1, 2, target_pos);
    Circuit ref(3);
    std::vector<int> controls;
    for (int q : {0, 1, 2}) {
      if (q != target_pos) controls.push_back(q);
    }
    ref.ccx(controls[0], controls[1], target_pos);
    ok = ok && equivalent_up_to_phase(to_unitary(eight), to_unitary(ref), 1e-9);
  }
  detail = "6-CX and 8-CX forms vs CCX, tol 1e-9";
  return ok;
}

bool criterion_2(std::string& detail, double& limit) {
  limit = -1.0;
  Circuit s(2);
  s.swap(0, 1);
  const Circuit lowered = pass1_decompose(s);
  Matrix swap_ref = Matrix::Zero(4, 4);
  swap_ref(0, 0) = swap_ref(1, 2) = swap_ref(2, 1) = swap_ref(3, 3) = 1.0;
  bool ok = count_gates(lowered).cnot == 3;
  ok = ok && (to_unitary(lowered) - swap_ref).cwiseAbs().maxCoeff() <= 1e-12;
  detail = "3-CX expansion equals the swap unitary, tol 1e-12";
  return ok;
}

bool criterion_3(std::string& detail, double& limit) {
  limit = -1.0;
  const CouplingGraph g = johannesburg_topology();

  Circuit far(20);
  far.ccx(2, 6, 19);
  const RoutedCircuit routed = route_trios(far, g, identity_layout(20));
  const Circuit lowered = pass2_decompose(routed.circuit, g, ToffoliPolicy::Force8);
  const int total = count_gates(lowered).two_qubit_total;
  bool ok = routed.swaps_added <= 7 && total <= 29;

  Circuit near(20);
  near.ccx(3, 1, 2);
  const RoutedCircuit routed_near = route_trios(near, g, identity_layout(20));
  const Circuit lowered_near = pass2_decompose(routed_near.circuit, g);
  ok = ok && routed_near.swaps_added == 0 &&
       count_gates(lowered_near).two_qubit_total == 8;

  detail = "(2,6,19): " + std::to_string(routed.swaps_added) + " swaps, " +
           std::to_string(total) + " 2q; (3,1,2): " +
           std::to_string(routed_near.swaps_added) + " swaps";
  return ok;
}

bool criterion_4(std::string& detail, double& limit) {
  limit = -1.0;
  const std::map<std::string, int> exact = {
      {"bv", 19},           {"qaoa_complete", 90},   {"cnx_dirty", 128},
      {"cnx_halfborrowed", 256}, {"cnx_logancilla", 136}, {"grovers", 672}};
  const std::map<std::string, int> near = {{"cuccaro_adder", 190},
                                           {"takahashi_adder", 188},
                                           {"incrementer_borrowedbit", 448},
                                           {"cnx_inplace", 490}};
  bool ok = true;
  for (const BenchmarkSpec& spec : standard_suite()) {
    const Circuit c = make_benchmark(spec.name);
    const GateCounts counts = count_gates(c);
    if (c.n_qubits() != spec.qubits || counts.toffoli != spec.toffolis) {
      ok = false;
    }
    const int after8 = cnots_after_8cnot(c);
    if (exact.count(spec.name) && after8 != exact.at(spec.name)) ok = false;
    if (near.count(spec.name) && std::abs(after8 - near.at(spec.name)) > 2) {
      ok = false;
    }
  }
  detail = "11 generators; qft_adder informational: " +
           std::to_string(cnots_after_8cnot(make_benchmark("qft_adder")));
  return ok;
}

bool criterion_5(std::string& detail, double& limit) {
  limit = 30.0;
  std::mt19937 rng(20260822);
  const CouplingGraph line6 = line_topology(6);
  const CouplingGraph grid23 = grid_topology(2, 3);
  bool ok = true;
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = 3 + static_cast<int>(rng() % 4);
    Circuit c(n);
    const int gate_count = 8 + static_cast<int>(rng() % 8);
    for (int j = 0; j < gate_count; ++j) {
      const int pick = static_cast<int>(rng() % 7);
      int a = static_cast<int>(rng() % n);
      int b = static_cast<int>(rng() % n);
      int t = static_cast<int>(rng() % n);
      while (b == a) b = static_cast<int>(rng() % n);
      while (t == a || t == b) t = static_cast<int>(rng() % n);
      switch (pick) {
        case 0: c.h(a); break;
        case 1: c.x(a); break;
        case 2: c.t(a); break;
        case 3: c.tdg(a); break;
        case 4: c.rz(a, 0.1 + 0.05 * static_cast<double>(j)); break;
        case 5: c.cx(a, b); break;
        default: c.ccx(a, b, t); break;
      }
    }
    {
      int a = static_cast<int>(rng() % n);
      int b = (a + 1) % n;
      int t = (a + 2) % n;
      c.ccx(a, b, t);  // at least one Toffoli per circuit
    }

    for (const CouplingGraph* g : {&line6, &grid23}) {
      const Matrix u_in = to_unitary(c.widened(g->n_qubits()));
      for (RouterKind router : {RouterKind::Baseline, RouterKind::Trios}) {
        CompileOptions opts;
        opts.router = router;
        const CompileResult r = compile(c, *g, opts);
        const Matrix u_out = to_unitary(r.circuit);
        const Matrix p0 = permutation_unitary(r.initial.log_to_phys);
        const Matrix pf = permutation_unitary(r.final.log_to_phys);
        if (!equivalent_up_to_phase(pf.adjoint() * u_out * p0, u_in, 1e-8)) {
          ok = false;
        }
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " pipeline runs phase-equivalent, tol 1e-8";
  return ok;
}

std::vector<ReportRow> run_compare_all() {
  static std::vector<ReportRow> rows;
  if (rows.empty()) {
    rows = compare_suite(standard_topology_names(), johannesburg_noise(20.0));
  }
  return rows;
}

bool criterion_6(std::string& detail, double& limit) {
  limit = -1.0;
  const std::vector<ReportRow> rows = run_compare_all();
  bool ok = true;
  std::map<std::pair<std::string, std::string>, const ReportRow*> baseline;
  for (const ReportRow& r : rows) {
    if (r.router == "baseline") baseline[{r.benchmark, r.topology}] = &r;
  }
  for (const ReportRow& r : rows) {
    if (r.router != "trios" || r.toffoli_in == 0) continue;
    const ReportRow* b = baseline.at({r.benchmark, r.topology});
    if (r.two_qubit_total > b->two_qubit_total) ok = false;
  }
  detail = "reductions:";
  for (const TopologySummary& s : summarize_compare(rows)) {
    if (s.reduction_percent < 20.0) ok = false;
    char buf[48];
    std::snprintf(buf, sizeof(buf), " %s %.1f%%", s.topology.c_str(),
                  s.reduction_percent);
    detail += buf;
  }
  return ok;
}

bool criterion_7(std::string& detail, double& limit) {
  limit = -1.0;
  bool ok = true;

  // Range and monotonicity under gate addition.
  const NoiseModel model = johannesburg_noise(20.0);
  Circuit c(2);
  double prev = 1.0;
  for (int i = 0; i < 40; ++i) {
    c.cx(0, 1);
    c.h(0);
    const double s = estimate_success(c, model);
    if (s < 0.0 || s > 1.0 || s > prev) ok = false;
    prev = s;
  }

  // Ratio properties on the suite comparison.
  const std::vector<ReportRow> rows = run_compare_all();
  double log_sum = 0.0;
  int toffoli_cells = 0;
  for (const ReportRow& r : rows) {
    if (r.topology != "johannesburg" || r.router != "trios") continue;
    for (const ReportRow& b : rows) {
      if (b.topology == "johannesburg" && b.router == "baseline" &&
          b.benchmark == r.benchmark) {
        if (r.est_success < 0.0 || r.est_success > 1.0) ok = false;
        if (r.toffoli_in > 0) {
          log_sum += std::log(r.est_success / b.est_success);
          ++toffoli_cells;
        } else if (r.est_success != b.est_success) {
          ok = false;  // Toffoli-free must match exactly
        }
      }
    }
  }
  const double geomean = std::exp(log_sum / toffoli_cells);
  if (!(geomean > 2.0)) ok = false;
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "geomean success ratio %.3fx (bar: > 2.0), %d cells", geomean,
                toffoli_cells);
  detail = buf;
  return ok;
}

bool criterion_8(std::string& detail, double& limit) {
  limit = 60.0;
  std::vector<std::string> names;
  for (const BenchmarkSpec& spec : standard_suite()) {
    if (spec.toffolis > 0) names.push_back(spec.name);
  }
  const std::vector<SweepRow> rows =
      sensitivity_sweep(names, johannesburg_topology(),
                        parse_factors("1:100:log25"), johannesburg_noise());
  bool ok = rows.size() == names.size() * 25;
  std::map<std::string, double> prev;
  for (const SweepRow& r : rows) {
    if (r.ratio < 1.0) ok = false;
    if (prev.count(r.benchmark) && r.ratio > prev[r.benchmark] + 1e-9) {
      ok = false;
    }
    prev[r.benchmark] = r.ratio;
  }
  detail = std::to_string(rows.size()) +
           " sweep cells, ratios >= 1 and non-increasing in the factor";
  return ok;
}

bool criterion_9(std::string& detail, double& limit) {
  limit = 10.0;
  bool ok = true;
  const int n = 3;
  const std::int64_t reg = 1 << n;

  for (const char* name : {"cuccaro_adder", "takahashi_adder"}) {
    const Circuit c = make_benchmark(name, n);
    for (std::int64_t a = 0; a < reg; ++a) {
      for (std::int64_t b = 0; b < reg; ++b) {
        for (int cin = 0; cin < 2; ++cin) {
          const std::int64_t in = cin | (a << 1) | (b << (1 + n));
          const std::int64_t sum = a + b + cin;
          const std::int64_t want =
              cin | (a << 1) | ((sum % reg) << (1 + n)) |
              ((sum >> n) << (2 * n + 1));
          const auto out = apply_to_basis_state(c, static_cast<std::uint64_t>(in));
          if (std::abs(std::abs(out(want)) - 1.0) > 1e-9) ok = false;
        }
      }
    }
  }

  const Circuit qft = make_benchmark("qft_adder", n);
  for (std::int64_t a = 0; a < reg; ++a) {
    for (std::int64_t b = 0; b < reg; ++b) {
      const std::int64_t in = a | (b << n);
      const std::int64_t want = a | (((a + b) % reg) << n);
      const auto out = apply_to_basis_state(qft, static_cast<std::uint64_t>(in));
      if (std::abs(std::abs(out(want)) - 1.0) > 1e-9) ok = false;
    }
  }
  detail = "3-bit ripple and Fourier adders vs classical addition";
  return ok;
}

using Criterion = bool (*)(std::string&, double&);

void run(const char* name, Criterion fn) {
  std::string detail;
  double limit = -1.0;
  const auto start = Clock::now();
  bool ok = fn(detail, limit);
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0.0 && seconds > limit) ok = false;
  report(name, ok, seconds, detail);
}

}  // namespace

int main() {
  run("1 Toffoli decompositions match CCX", criterion_1);
  run("2 SWAP expansion is exact", criterion_2);
  run("3 single-Toffoli routing instances", criterion_3);
  run("4 benchmark generator tallies", criterion_4);
  run("5 randomized pipeline semantic preservation", criterion_5);
  run("6 two-qubit dominance and reduction floor", criterion_6);
  run("7 success-model properties and ratio bar", criterion_7);
  run("8 improvement-factor sweep shape", criterion_8);
  run("9 downsized adder truth tables", criterion_9);
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
