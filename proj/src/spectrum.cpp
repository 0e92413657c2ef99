#include "svpwm/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "svpwm/config.hpp"

namespace svpwm {

namespace {

using cplx = std::complex<double>;
constexpr cplx kJ{0.0, 1.0};

// integral over the segment of exp(-j w t) dt and of (t - t0) exp(-j w t) dt,
// both multiplied by exp(+j w t0) (the caller re-attaches the phase).
// Series form below |x| = 1e-3 avoids cancellation for short segments.
struct SegmentIntegrals {
    cplx i0, i1;
};

SegmentIntegrals base_integrals(double w, double dt) {
    const cplx x = kJ * (w * dt);
    if (std::abs(w * dt) < 1e-3) {
        const cplx x2 = x * x, x3 = x2 * x;
        return {dt * (1.0 - x / 2.0 + x2 / 6.0 - x3 / 24.0),
                dt * dt * (0.5 - x / 3.0 + x2 / 8.0 - x3 / 30.0)};
    }
    const cplx e = std::exp(-x);
    const cplx i0 = (1.0 - e) / (kJ * w);
    const cplx i1 = (i0 - dt * e) / (kJ * w);
    return {i0, i1};
}

} // namespace

std::complex<double> fourier_coefficient(const StepWaveform& w, int n) {
    if (w.steps.empty() || !(w.period > 0.0))
        throw std::domain_error("step waveform is empty");
    if (n < 0) throw std::domain_error("harmonic order must be >= 0");

    const double T = w.period;
    if (n == 0) {
        double acc = 0.0;
        for (std::size_t i = 0; i < w.steps.size(); ++i) {
            const double t0 = w.steps[i].t;
            const double t1 = i + 1 < w.steps.size() ? w.steps[i + 1].t : T;
            acc += w.steps[i].level * (t1 - t0);
        }
        return {acc / T, 0.0};
    }

    const double wn = 2.0 * kPi * n / T;
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        const double t0 = w.steps[i].t;
        const double t1 = i + 1 < w.steps.size() ? w.steps[i + 1].t : T;
        const auto seg = base_integrals(wn, t1 - t0);
        acc += w.steps[i].level * seg.i0 * std::exp(-kJ * (wn * t0));
    }
    return acc / T;
}

std::complex<double> fourier_coefficient(const LinearWaveform& w, int n) {
    if (w.nodes.size() < 2 || !(w.span > 0.0))
        throw std::domain_error("linear waveform needs at least two nodes");
    if (n < 0) throw std::domain_error("harmonic order must be >= 0");

    const double T = w.span;
    if (n == 0) {
        double acc = 0.0;
        for (std::size_t i = 1; i < w.nodes.size(); ++i)
            acc += 0.5 * (w.nodes[i - 1].v + w.nodes[i].v) *
                   (w.nodes[i].t - w.nodes[i - 1].t);
        return {acc / T, 0.0};
    }

    const double wn = 2.0 * kPi * n / T;
    cplx acc{0.0, 0.0};
    for (std::size_t i = 1; i < w.nodes.size(); ++i) {
        const double t0 = w.nodes[i - 1].t;
        const double dt = w.nodes[i].t - t0;
        if (dt <= 0.0) continue;
        const double y0 = w.nodes[i - 1].v;
        const double slope = (w.nodes[i].v - y0) / dt;
        const auto seg = base_integrals(wn, dt);
        acc += (y0 * seg.i0 + slope * seg.i1) * std::exp(-kJ * (wn * t0));
    }
    return acc / T;
}

double Spectrum::fundamental_mag() const {
    for (const auto& h : harmonics)
        if (h.n == 1) return std::abs(h.c);
    throw std::domain_error("spectrum has no fundamental");
}

namespace {

template <typename W>
Spectrum spectrum_impl(const W& w, int n_max) {
    if (n_max < 1) throw std::domain_error("n_max must be >= 1");
    Spectrum s;
    s.harmonics.reserve(n_max);
    for (int n = 1; n <= n_max; ++n)
        s.harmonics.push_back({n, fourier_coefficient(w, n)});
    return s;
}

} // namespace

Spectrum spectrum(const StepWaveform& w, int n_max) {
    return spectrum_impl(w, n_max);
}

Spectrum spectrum(const LinearWaveform& w, int n_max) {
    return spectrum_impl(w, n_max);
}

ThdResult thd(const Spectrum& s, int n_max) {
    const double c1 = s.fundamental_mag();
    if (c1 == 0.0)
        throw std::domain_error("fundamental magnitude is zero");
    double sq = 0.0, lin = 0.0;
    for (const auto& h : s.harmonics) {
        if (h.n < 2 || h.n > n_max) continue;
        const double mag = std::abs(h.c);
        sq += mag * mag;
        lin += mag;
    }
    return {100.0 * std::sqrt(sq) / c1, 100.0 * lin / c1};
}

} // namespace svpwm
