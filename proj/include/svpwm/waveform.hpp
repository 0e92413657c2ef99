#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace svpwm {

/// Piecewise-constant periodic waveform. steps are time-ordered with
/// steps[0].t == 0; each level holds until the next breakpoint and the
/// last one wraps to the period end. Adjacent equal levels inside the
/// vector are allowed but synthesis merges them.
struct StepWaveform {
    struct Step {
        double t;      // breakpoint time, s
        double level;  // value held from t onward
    };
    double period = 0.0;
    std::vector<Step> steps;
};

/// Value of w at time t (t taken modulo the period).
double value_at(const StepWaveform& w, double t);

/// Piecewise-linear waveform on [0, span]; nodes are time-ordered,
/// nodes.front().t == 0 and nodes.back().t == span. When used as a
/// periodic signal the span is the period and any mismatch between the
/// end and start values is a jump at the wrap point.
struct LinearWaveform {
    struct Node {
        double t;
        double v;
    };
    double span = 0.0;
    std::vector<Node> nodes;
};

double value_at(const LinearWaveform& w, double t);

/// Largest minus smallest node value.
double peak_to_peak(const LinearWaveform& w);

/// RMS of the piecewise-linear signal over its span (exact per-segment
/// integration, no sampling).
double rms_ripple(const LinearWaveform& w);

/// Three pole-voltage waveforms sharing one period.
struct ThreePhaseWaveform {
    double period = 0.0;
    std::array<StepWaveform, 3> phase;  // a, b, c
};

/// Level transitions per phase over one period, wrap included.
struct SwitchingCount {
    std::array<int, 3> per_phase;
    int total;
};
SwitchingCount switching_count(const ThreePhaseWaveform& w);

} // namespace svpwm
