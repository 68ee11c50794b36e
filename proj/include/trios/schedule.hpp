// ASAP scheduling and schedule-based success estimation.
//
// The estimate multiplies per-gate success probabilities with a
// coherence-decay term exp(-(D/T1 + D/T2)) over the circuit makespan
// D.  An improvement factor scales error rates down and coherence
// times up to model better hardware; gate durations stay fixed.

#pragma once

#include <stdexcept>
#include <vector>

#include "trios/circuit.hpp"

namespace trios {

struct ScheduleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoiseModel {
  double e1 = 0.0004;    // one-qubit gate error
  double e2 = 0.0147;    // two-qubit gate error
  double e_meas = 0.0147;
  double t_1q = 0.07;    // one-qubit gate time, microseconds
  double t_2q = 0.559;   // two-qubit gate time, microseconds
  double T1 = 70.87;     // relaxation time, microseconds
  double T2 = 72.72;     // dephasing time, microseconds
  double improvement = 1.0;
  bool include_measurement = false;

  double e1_eff() const { return e1 / improvement; }
  double e2_eff() const { return e2 / improvement; }
  double e_meas_eff() const { return e_meas / improvement; }
  double t1_eff() const { return T1 * improvement; }
  double t2_eff() const { return T2 * improvement; }
};

// Calibration-derived averages for the 20-qubit device the noise
// studies run on.  The default improvement of 1 models the hardware
// as measured; the CLI and the comparison reports use 20 to stand in
// for the generation where Toffoli-heavy programs start to succeed.
NoiseModel johannesburg_noise(double improvement = 1.0);

struct Schedule {
  std::vector<double> start;  // one entry per gate, microseconds
  double duration = 0.0;      // makespan; measurement takes no time
};

// As-soon-as-possible schedule.  Accepts only fully lowered circuits:
// one-qubit gates, CX, measure, barrier.  Barriers synchronize every
// qubit and take no time.
Schedule asap_schedule(const Circuit& circuit, const NoiseModel& model);

// Success from explicit tallies, shared by the estimator and the
// improvement-factor sweeps (which reuse counts across factors).
double success_from_counts(int n_one_qubit, int n_two_qubit, int n_measured,
                           double duration, const NoiseModel& model);

// Schedules the circuit and folds its gate counts into the estimate.
double estimate_success(const Circuit& circuit, const NoiseModel& model);

}  // namespace trios
