#include "svpwm/ripple.hpp"

#include <cmath>
#include <stdexcept>

#include "sequence_detail.hpp"

namespace svpwm {

namespace {

struct Slope {
    double vq, vd;
};

// Error voltage of a slot in the frame aligned with the reference,
// for a sample at alpha radians from the sector-leading vector.
Slope slot_slope(detail::Role role, double alpha_rad, double v_ref,
                 double v_dc) {
    switch (role) {
        case detail::Role::Zero0:
        case detail::Role::Zero7:
            return {-v_ref, 0.0};
        case detail::Role::Lead:
            return {v_dc * std::cos(alpha_rad) - v_ref,
                    -v_dc * std::sin(alpha_rad)};
        case detail::Role::Trail:
            return {v_dc * std::cos(kPi / 3.0 - alpha_rad) - v_ref,
                    v_dc * std::sin(kPi / 3.0 - alpha_rad)};
    }
    throw std::logic_error("unknown slot role");
}

} // namespace

std::vector<ErrorSegment> error_voltage_segments(Sequence seq,
                                                 int sample_index, double m,
                                                 double k,
                                                 const DriveConfig& drive) {
    const auto& spec = detail::sequence_spec(seq);
    if (sample_index < 0 ||
        sample_index >= static_cast<int>(spec.angles_deg.size()))
        throw std::domain_error("sample index " + std::to_string(sample_index) +
                                " outside 0.." +
                                std::to_string(spec.angles_deg.size() - 1));
    if (sequence_uses_k(seq) && (!(k > 0.0) || !(k < 1.0)))
        throw std::domain_error("dwell split k=" + std::to_string(k) +
                                " outside (0, 1)");

    const double ts = subcycle_seconds(seq, m, drive);
    const double alpha = spec.angles_deg[sample_index] * kDegToRad;
    const double v_ref = drive.v_ref(m);
    const DwellTimes dw = dwell_times(m, spec.angles_deg[sample_index], ts);

    std::vector<ErrorSegment> out;
    out.reserve(spec.samples[sample_index].size());
    for (const auto& rule : spec.samples[sample_index]) {
        const Slope s = slot_slope(rule.role, alpha, v_ref, drive.v_dc);
        out.push_back({detail::slot_seconds(rule, dw, k), s.vq, s.vd});
    }
    return out;
}

FluxRipple flux_ripple(Sequence seq, double m, double k,
                       const DriveConfig& drive) {
    const int n = samples_per_sector(seq);
    const double ts = subcycle_seconds(seq, m, drive);

    FluxRipple fr;
    fr.q.span = fr.d.span = n * ts;
    fr.q.nodes.push_back({0.0, 0.0});
    fr.d.nodes.push_back({0.0, 0.0});

    double t = 0.0, pq = 0.0, pd = 0.0;
    for (int i = 0; i < n; ++i) {
        for (const auto& seg : error_voltage_segments(seq, i, m, k, drive)) {
            if (seg.seconds <= 0.0) continue;
            t += seg.seconds;
            pq += seg.vq * seg.seconds;
            pd += seg.vd * seg.seconds;
            fr.q.nodes.push_back({t, pq});
            fr.d.nodes.push_back({t, pd});
        }
    }
    // Slot durations tile n*ts up to rounding; pin the span to the sum.
    fr.q.span = fr.d.span = t;
    return fr;
}

double torque_ripple_scale(double m, const DriveConfig& drive,
                           const MachineParams& machine) {
    require_modulation_index(m);
    const double f1 = drive.fundamental_hz(m);
    const double pole_pairs = machine.poles / 2.0;
    const double leakage_gain =
        1.0 / (machine.sigma_s + machine.sigma_r) - 1.0;
    return (2.0 / 3.0) * pole_pairs * drive.v_ref(m) /
           (2.0 * kPi * f1 * machine.l_o) * leakage_gain;
}

LinearWaveform torque_ripple(Sequence seq, double m, double k,
                             const DriveConfig& drive,
                             const MachineParams& machine) {
    const double scale = torque_ripple_scale(m, drive, machine);
    LinearWaveform out = flux_ripple(seq, m, k, drive).q;
    for (auto& node : out.nodes) node.v *= scale;
    return out;
}

double pp_flux_svhe(double m, double f_base) {
    require_modulation_index(m);
    const double ts = 1.0 / (12.0 * f_base * m);
    const double v_ref_pu = kSin60 * m;
    const double s15 = std::sin(15.0 * kDegToRad);
    const double s45 = std::sin(45.0 * kDegToRad);
    return v_ref_pu * ts * (1.0 - m * (s15 + s45));
}

double pp_flux_csv(double m, double f_base) {
    require_modulation_index(m);
    const double ts = 1.0 / (18.0 * f_base * m);
    const double v_ref_pu = kSin60 * m;
    const double s10 = std::sin(10.0 * kDegToRad);
    const double s50 = std::sin(50.0 * kDegToRad);
    const double c50 = std::cos(50.0 * kDegToRad);
    const double edge = v_ref_pu * (1.0 - m * (s10 + s50));
    const double overshoot = (v_ref_pu - c50) * 2.0 * m * s10;
    return ts * (edge + overshoot);
}

double crossover_m(double alpha1_deg, double alpha2_deg) {
    const double a1 = alpha1_deg * kDegToRad;
    const double a2 = alpha2_deg * kDegToRad;
    const double num =
        0.5 + 2.0 * std::sin(a2) * std::cos(kPi / 3.0 - a2) / kSin60;
    const double den = 1.5 * (std::sin(a1) + std::sin(kPi / 3.0 - a1)) +
                       std::sin(a2) - std::sin(kPi / 3.0 - a2);
    if (den == 0.0)
        throw std::domain_error("sample angles give no crossover");
    return num / den;
}

} // namespace svpwm
