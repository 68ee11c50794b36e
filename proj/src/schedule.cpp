#include "trios/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace trios {

NoiseModel johannesburg_noise(double improvement) {
  if (!(improvement > 0.0)) {
    throw ScheduleError("improvement factor must be positive");
  }
  NoiseModel m;
  m.improvement = improvement;
  return m;
}

Schedule asap_schedule(const Circuit& circuit, const NoiseModel& model) {
  Schedule s;
  s.start.reserve(circuit.size());
  std::vector<double> busy_until(static_cast<std::size_t>(circuit.n_qubits()),
                                 0.0);
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::CCX:
      case GateKind::SWAP:
      case GateKind::CU1:
        throw ScheduleError("schedule requires a fully lowered circuit; found " +
                            gate_name(g.kind));
      case GateKind::Barrier: {
        double level = 0.0;
        for (double b : busy_until) level = std::max(level, b);
        std::fill(busy_until.begin(), busy_until.end(), level);
        s.start.push_back(level);
        break;
      }
      case GateKind::Measure: {
        // takes no modeled time; runs once its qubit is free
        const double at = busy_until[static_cast<std::size_t>(g.qubits[0])];
        s.start.push_back(at);
        break;
      }
      case GateKind::CX: {
        const double at =
            std::max(busy_until[static_cast<std::size_t>(g.qubits[0])],
                     busy_until[static_cast<std::size_t>(g.qubits[1])]);
        busy_until[static_cast<std::size_t>(g.qubits[0])] = at + model.t_2q;
        busy_until[static_cast<std::size_t>(g.qubits[1])] = at + model.t_2q;
        s.start.push_back(at);
        break;
      }
      default: {
        const double at = busy_until[static_cast<std::size_t>(g.qubits[0])];
        busy_until[static_cast<std::size_t>(g.qubits[0])] = at + model.t_1q;
        s.start.push_back(at);
        break;
      }
    }
  }
  for (double b : busy_until) s.duration = std::max(s.duration, b);
  return s;
}

double success_from_counts(int n_one_qubit, int n_two_qubit, int n_measured,
                           double duration, const NoiseModel& model) {
  double p = std::pow(1.0 - model.e1_eff(), n_one_qubit) *
             std::pow(1.0 - model.e2_eff(), n_two_qubit);
  if (model.include_measurement) {
    p *= std::pow(1.0 - model.e_meas_eff(), n_measured);
  }
  p *= std::exp(-(duration / model.t1_eff() + duration / model.t2_eff()));
  return p;
}

double estimate_success(const Circuit& circuit, const NoiseModel& model) {
  const GateCounts counts = count_gates(circuit);
  const Schedule s = asap_schedule(circuit, model);
  return success_from_counts(counts.one_qubit, counts.cnot, counts.measure,
                             s.duration, model);
}

}  // namespace trios
