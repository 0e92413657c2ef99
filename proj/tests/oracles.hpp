#pragma once

// Independent reference implementations used only by tests. Nothing
// here calls the library code paths it checks: Fourier coefficients
// come from brute-force quadrature and the ripple formula is a
// hand-integrated closed form.

#include <cmath>
#include <complex>
#include <random>

#include "svpwm/config.hpp"
#include "svpwm/dwell.hpp"
#include "svpwm/waveform.hpp"

namespace oracle {

/// Composite-trapezoid Fourier coefficient of a piecewise-constant
/// waveform. Points are spent per segment so the only error is the
/// quadrature of exp(-j n w t), O((n/points)^2).
inline std::complex<double> quad_fourier(const svpwm::StepWaveform& w, int n,
                                         int total_points = 400000) {
    const double T = w.period;
    const double wn = 2.0 * svpwm::kPi * n / T;
    std::complex<double> acc{0.0, 0.0};
    const std::complex<double> j{0.0, 1.0};
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        const double t0 = w.steps[i].t;
        const double t1 = i + 1 < w.steps.size() ? w.steps[i + 1].t : T;
        if (!(t1 > t0)) continue;
        const int pts =
            std::max(16, static_cast<int>(total_points * (t1 - t0) / T));
        const double h = (t1 - t0) / pts;
        std::complex<double> seg{0.0, 0.0};
        for (int s = 0; s <= pts; ++s) {
            const double t = t0 + s * h;
            const double wgt = (s == 0 || s == pts) ? 0.5 : 1.0;
            seg += wgt * std::exp(-j * (wn * t));
        }
        acc += w.steps[i].level * seg * h;
    }
    return acc / T;
}

/// Same for a piecewise-linear waveform over its span.
inline std::complex<double> quad_fourier(const svpwm::LinearWaveform& w, int n,
                                         int total_points = 400000) {
    const double T = w.span;
    const double wn = 2.0 * svpwm::kPi * n / T;
    std::complex<double> acc{0.0, 0.0};
    const std::complex<double> j{0.0, 1.0};
    for (std::size_t i = 1; i < w.nodes.size(); ++i) {
        const double t0 = w.nodes[i - 1].t;
        const double t1 = w.nodes[i].t;
        if (!(t1 > t0)) continue;
        const double y0 = w.nodes[i - 1].v;
        const double slope = (w.nodes[i].v - y0) / (t1 - t0);
        const int pts =
            std::max(16, static_cast<int>(total_points * (t1 - t0) / T));
        const double h = (t1 - t0) / pts;
        std::complex<double> seg{0.0, 0.0};
        for (int s = 0; s <= pts; ++s) {
            const double t = t0 + s * h;
            const double wgt = (s == 0 || s == pts) ? 0.5 : 1.0;
            seg += wgt * (y0 + slope * (t - t0)) * std::exp(-j * (wn * t));
        }
        acc += seg * h;
    }
    return acc / T;
}

/// Hand-integrated q-axis flux ripple of the svhe sequence over its
/// two subcycles (0 <= t <= 2 ts), sample angles 15 and 45 degrees.
/// Constant names follow the derivation: K1 = -v_ref,
/// K2 = v_dc cos(alpha), K3 = v_dc cos(60 - alpha), K4 = K2 + K1,
/// K5 = K3 + K1.
inline double svhe_q_ripple_reference(double t, double m, double k, double ts,
                                      double v_dc) {
    const double v_ref = svpwm::kSin60 * m * v_dc;
    auto constants = [&](double alpha_deg, double& K1, double& K2, double& K3,
                         double& K4, double& K5) {
        const double a = alpha_deg * svpwm::kDegToRad;
        K1 = -v_ref;
        K2 = v_dc * std::cos(a);
        K3 = v_dc * std::cos(svpwm::kPi / 3.0 - a);
        K4 = K2 + K1;
        K5 = K3 + K1;
    };

    if (t <= ts) {
        // subcycle 1: 0 .. t0 .. t0 + k t1 .. t0 + k t1 + t2 .. ts
        double K1, K2, K3, K4, K5;
        constants(15.0, K1, K2, K3, K4, K5);
        const auto dw = svpwm::dwell_times(m, 15.0, ts);
        const double b1 = dw.tz;
        const double b2 = dw.tz + k * dw.t1;
        const double b3 = dw.tz + k * dw.t1 + dw.t2;
        if (t <= b1) return K1 * t;
        if (t <= b2) return K4 * t - K2 * dw.tz;
        if (t <= b3) return K2 * (k * dw.t1) + K5 * t - K3 * (dw.tz + k * dw.t1);
        return K4 * (t - dw.t2) - K2 * dw.tz + K5 * dw.t2;
    }

    // subcycle 2: ts .. ts + t7 .. ts + t7 + (1-k) t2 .. 2 ts - k t2 .. 2 ts
    double K1, K2, K3, K4, K5;
    constants(45.0, K1, K2, K3, K4, K5);
    const double K6 = K3 - K2;
    const auto dw = svpwm::dwell_times(m, 45.0, ts);
    const double u = t - ts;
    const double b1 = dw.tz;  // all zero time on V7 here
    const double b2 = dw.tz + (1.0 - k) * dw.t2;
    const double b3 = ts - k * dw.t2;
    if (u <= b1) return K1 * u;
    if (t <= ts + b2) return K5 * u - K3 * dw.tz;
    if (t <= ts + b3)
        return K6 * (dw.tz + (1.0 - k) * dw.t2) - K3 * dw.tz + K4 * u;
    return K5 * (u - dw.t1) - K3 * dw.tz + K4 * dw.t1;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0xC0FFEEu);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

} // namespace oracle
