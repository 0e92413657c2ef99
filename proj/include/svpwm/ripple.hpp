#pragma once

#include <vector>

#include "svpwm/config.hpp"
#include "svpwm/sequence.hpp"
#include "svpwm/waveform.hpp"

namespace svpwm {

/// Error voltage (applied vector minus reference) in the reference
/// synchronous frame, held constant over one playlist slot.
struct ErrorSegment {
    double seconds;
    double vq;  // in-phase with the reference
    double vd;  // quadrature, positive toward the trailing vector
};

/// Error-voltage segments of one subcycle of sector 1.
/// Zero-duration playlist slots are kept (zero-length segments).
std::vector<ErrorSegment> error_voltage_segments(Sequence seq,
                                                 int sample_index, double m,
                                                 double k,
                                                 const DriveConfig& drive);

/// Stator flux-ripple components over one 60-degree sector, V*s.
/// Both components integrate the error voltage from zero initial
/// value; q returns to zero at every subcycle boundary (volt-second
/// balance), d returns to zero at the sector end.
struct FluxRipple {
    LinearWaveform q;
    LinearWaveform d;
};
FluxRipple flux_ripple(Sequence seq, double m, double k,
                       const DriveConfig& drive);

/// Nm of harmonic torque per V*s of q-axis flux ripple at modulation
/// index m. Independent of m under the constant-V/f law (v_ref and
/// fundamental frequency scale together).
double torque_ripple_scale(double m, const DriveConfig& drive,
                           const MachineParams& machine);

/// Harmonic torque over one sector: torque_ripple_scale times the
/// q-axis flux ripple.
LinearWaveform torque_ripple(Sequence seq, double m, double k,
                             const DriveConfig& drive,
                             const MachineParams& machine);

/// Closed-form peak-to-peak q-axis flux ripple of the Svhe sequence at
/// its harmonic-neutral split, per volt of DC link (multiply by v_dc
/// for V*s). Valid for the standard 15/45-degree sample angles.
double pp_flux_svhe(double m, double f_base = 50.0);

/// Same closed form for the Csv sequence (10/30/50-degree samples).
/// The expression assumes the sector-edge subcycle dominates, which
/// holds for m above roughly 0.74; below that it undershoots the
/// waveform scan and the scan is authoritative.
double pp_flux_csv(double m, double f_base = 50.0);

/// Modulation index where the Svhe and Csv closed-form ripples cross,
/// for first sample angles alpha1_deg (Svhe) and alpha2_deg (Csv).
double crossover_m(double alpha1_deg = 15.0, double alpha2_deg = 10.0);

} // namespace svpwm
