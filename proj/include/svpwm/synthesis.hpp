#pragma once

#include <vector>

#include "svpwm/config.hpp"
#include "svpwm/sequence.hpp"
#include "svpwm/waveform.hpp"

namespace svpwm {

/// One subcycle of the fundamental-cycle sampling plan.
struct SamplePlanEntry {
    int sector;        // 1..6
    int sample_index;  // 0-based within the sector
    double alpha_deg;  // reference angle from the sector-leading vector
    double ts;         // subcycle length, s
};

/// All 6 * samples_per_sector subcycles of one fundamental cycle, in
/// time order.
std::vector<SamplePlanEntry> sample_plan(Sequence seq, double m,
                                         const DriveConfig& drive);

/// Pole voltages of one fundamental cycle, levels 0 / v_dc.
///
/// Subcycle playlists are stitched across sectors by the rotation rule
/// that preserves half-wave symmetry: active slots map onto the
/// sector's own leading/trailing vectors and the zero-state ids swap
/// between V0 and V7 in even sectors. Adjacent equal levels merge, so
/// every breakpoint is a real one-leg transition.
ThreePhaseWaveform pole_voltage_waveform(Sequence seq, double m, double k,
                                         const DriveConfig& drive);

/// Staircase approximation of a balanced three-phase sinusoid,
/// steps_per_cycle uniform steps, amplitude v_peak around zero.
/// Used as a reference input for simulation checks.
ThreePhaseWaveform sinusoidal_three_phase(double v_peak, double f1,
                                          int steps_per_cycle);

} // namespace svpwm
