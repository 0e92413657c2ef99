#include "svpwm/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace svpwm {

namespace {

void require_steps(const StepWaveform& w) {
    if (w.steps.empty() || !(w.period > 0.0))
        throw std::domain_error("step waveform is empty");
}

void require_nodes(const LinearWaveform& w) {
    if (w.nodes.size() < 2 || !(w.span > 0.0))
        throw std::domain_error("linear waveform needs at least two nodes");
}

} // namespace

double value_at(const StepWaveform& w, double t) {
    require_steps(w);
    double tt = std::fmod(t, w.period);
    if (tt < 0.0) tt += w.period;
    // Last breakpoint at or before tt; before the first one means the
    // wrap of the final level.
    auto it = std::upper_bound(
        w.steps.begin(), w.steps.end(), tt,
        [](double value, const StepWaveform::Step& s) { return value < s.t; });
    if (it == w.steps.begin()) return w.steps.back().level;
    return std::prev(it)->level;
}

double value_at(const LinearWaveform& w, double t) {
    require_nodes(w);
    if (t <= w.nodes.front().t) return w.nodes.front().v;
    if (t >= w.nodes.back().t) return w.nodes.back().v;
    auto it = std::upper_bound(
        w.nodes.begin(), w.nodes.end(), t,
        [](double value, const LinearWaveform::Node& n) { return value < n.t; });
    const auto& hi = *it;
    const auto& lo = *std::prev(it);
    const double dt = hi.t - lo.t;
    if (dt <= 0.0) return hi.v;
    return lo.v + (hi.v - lo.v) * (t - lo.t) / dt;
}

double peak_to_peak(const LinearWaveform& w) {
    require_nodes(w);
    auto [mn, mx] = std::minmax_element(
        w.nodes.begin(), w.nodes.end(),
        [](const auto& a, const auto& b) { return a.v < b.v; });
    return mx->v - mn->v;
}

double rms_ripple(const LinearWaveform& w) {
    require_nodes(w);
    // Integral of (a + (b-a)u)^2 du over [0,1] is (a^2 + ab + b^2)/3.
    double acc = 0.0;
    for (std::size_t i = 1; i < w.nodes.size(); ++i) {
        const double dt = w.nodes[i].t - w.nodes[i - 1].t;
        const double a = w.nodes[i - 1].v;
        const double b = w.nodes[i].v;
        acc += dt * (a * a + a * b + b * b) / 3.0;
    }
    return std::sqrt(acc / w.span);
}

SwitchingCount switching_count(const ThreePhaseWaveform& w) {
    SwitchingCount out{{0, 0, 0}, 0};
    for (int p = 0; p < 3; ++p) {
        const auto& steps = w.phase[p].steps;
        if (steps.empty()) continue;
        int n = 0;
        for (std::size_t i = 1; i < steps.size(); ++i)
            if (steps[i].level != steps[i - 1].level) ++n;
        if (steps.back().level != steps.front().level) ++n;  // wrap
        out.per_phase[p] = n;
        out.total += n;
    }
    return out;
}

} // namespace svpwm
