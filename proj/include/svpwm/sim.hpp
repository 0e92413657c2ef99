#pragma once

#include <array>
#include <vector>

#include "svpwm/config.hpp"
#include "svpwm/spectrum.hpp"
#include "svpwm/waveform.hpp"

namespace svpwm {

struct SimConfig {
    double dt = 2e-6;           // RK4 step ceiling, s
    int n_settle_cycles = 120;  // discarded start-up cycles
    int n_measure_cycles = 1;   // recorded cycles
};

/// Recorded steady-state window of a no-load run.
/// Sample times are relative to the start of the measure window.
struct SimResult {
    double period;              // fundamental period, s
    std::vector<double> t;
    std::vector<double> ia, ib, ic;  // line currents, A
    std::vector<double> torque;      // electromagnetic torque, Nm
};

/// Integrates the dq flux-linkage model of the machine at synchronous
/// speed (no load, zero slip) driven by the given pole voltages.
///
/// Integration is RK4 on segment-aligned steps: substeps never
/// straddle a switching instant, so the piecewise-constant input is
/// exact within each step. Starts from zero flux and discards
/// n_settle_cycles to let the magnetizing transient decay. Throws
/// std::domain_error when dt exceeds a twentieth of the shortest
/// switching interval and std::runtime_error naming dt if the state
/// diverges.
SimResult simulate_no_load(const ThreePhaseWaveform& supply,
                           const MachineParams& machine,
                           const SimConfig& cfg = {});

/// One recorded fundamental cycle of a line current as a waveform.
/// phase is 0, 1, 2 for a, b, c.
LinearWaveform current_cycle(const SimResult& res, int phase);

/// RMS-form THD, percent, of each line current over the first recorded
/// cycle, harmonics 2..n_max.
std::array<double, 3> line_current_thd(const SimResult& res, int n_max = 49);

/// Peak-to-peak torque over the first sector (one sixth of a cycle)
/// of the measure window, Nm.
double torque_pp_from_sim(const SimResult& res);

/// Pearson correlation between two equally-spaced samplings of the
/// same span; used to compare simulated and predicted torque shapes.
double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y);

} // namespace svpwm
