#include "svpwm/synthesis.hpp"

#include <cmath>
#include <stdexcept>

#include "sequence_detail.hpp"

namespace svpwm {

std::vector<SamplePlanEntry> sample_plan(Sequence seq, double m,
                                         const DriveConfig& drive) {
    const double ts = subcycle_seconds(seq, m, drive);
    const auto angles = sample_angles_deg(seq);
    std::vector<SamplePlanEntry> plan;
    plan.reserve(6 * angles.size());
    for (int sector = 1; sector <= 6; ++sector)
        for (std::size_t i = 0; i < angles.size(); ++i)
            plan.push_back({sector, static_cast<int>(i), angles[i], ts});
    return plan;
}

ThreePhaseWaveform pole_voltage_waveform(Sequence seq, double m, double k,
                                         const DriveConfig& drive) {
    const auto& spec = detail::sequence_spec(seq);
    const double ts = subcycle_seconds(seq, m, drive);
    const double f1 = drive.fundamental_hz(m);

    ThreePhaseWaveform out;
    out.period = 1.0 / f1;

    if (sequence_uses_k(seq) && (!(k > 0.0) || !(k < 1.0)))
        throw std::domain_error("dwell split k=" + std::to_string(k) +
                                " outside (0, 1)");

    double t = 0.0;
    auto append = [&](int phase, double level) {
        auto& steps = out.phase[phase].steps;
        if (!steps.empty() && steps.back().level == level) return;
        if (!steps.empty() && steps.back().t >= t)
            steps.back().level = level;  // zero-length slot, overwrite
        else
            steps.push_back({t, level});
    };

    for (int sector = 1; sector <= 6; ++sector) {
        for (std::size_t i = 0; i < spec.angles_deg.size(); ++i) {
            const DwellTimes dw = dwell_times(m, spec.angles_deg[i], ts);
            for (const auto& rule : spec.samples[i]) {
                const double dur = detail::slot_seconds(rule, dw, k);
                const int id = detail::rotate_vector_id(rule.role, sector);
                const SwitchState st = vector_switch_state(id);
                if (dur > 0.0) {
                    append(0, st.a * drive.v_dc);
                    append(1, st.b * drive.v_dc);
                    append(2, st.c * drive.v_dc);
                    t += dur;
                }
            }
        }
    }

    // Accumulated slot durations and 1/f1 agree to rounding only.
    if (std::abs(t - out.period) > 1e-9 * out.period)
        throw std::logic_error("subcycle durations do not tile the period");
    for (auto& ph : out.phase) {
        ph.period = out.period;
        if (ph.steps.empty() || ph.steps.front().t != 0.0)
            throw std::logic_error("waveform does not start at t=0");
    }
    return out;
}

ThreePhaseWaveform sinusoidal_three_phase(double v_peak, double f1,
                                          int steps_per_cycle) {
    if (steps_per_cycle < 3)
        throw std::domain_error("steps_per_cycle must be at least 3");
    ThreePhaseWaveform out;
    out.period = 1.0 / f1;
    const double w0 = 2.0 * kPi * f1;
    for (int p = 0; p < 3; ++p) {
        out.phase[p].period = out.period;
        const double shift = -2.0 * kPi * p / 3.0;
        for (int i = 0; i < steps_per_cycle; ++i) {
            const double t0 = out.period * i / steps_per_cycle;
            const double tm = out.period * (i + 0.5) / steps_per_cycle;
            out.phase[p].steps.push_back(
                {t0, v_peak * std::sin(w0 * tm + shift)});
        }
    }
    return out;
}

} // namespace svpwm
