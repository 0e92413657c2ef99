#include "svpwm/elimination.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "svpwm/spectrum.hpp"
#include "svpwm/synthesis.hpp"

namespace svpwm {

namespace {

std::complex<double> target_coeff(double m, int target, double k,
                                  const DriveConfig& drive) {
    const auto w = pole_voltage_waveform(Sequence::Svhe, m, k, drive);
    return fourier_coefficient(w.phase[0], target);
}

double fundamental_mag(double m, double k, const DriveConfig& drive) {
    const auto w = pole_voltage_waveform(Sequence::Svhe, m, k, drive);
    return std::abs(fourier_coefficient(w.phase[0], 1));
}

} // namespace

EliminationSolution solve_k(double m, int target, const DriveConfig& drive) {
    require_modulation_index(m);
    if (target < 2)
        throw std::domain_error("target harmonic must be >= 2, got " +
                                std::to_string(target));

    constexpr int kGrid = 1000;
    constexpr double kLo = 1e-3;
    constexpr double kHi = 0.999;

    std::vector<double> ks(kGrid);
    std::vector<std::complex<double>> cs(kGrid);
    std::size_t i_max = 0;
    for (int i = 0; i < kGrid; ++i) {
        ks[i] = kLo + (kHi - kLo) * i / (kGrid - 1);
        cs[i] = target_coeff(m, target, ks[i], drive);
        if (std::abs(cs[i]) > std::abs(cs[i_max])) i_max = i;
    }

    // c_target(k) stays on one line through the origin, so projecting
    // onto the direction of the largest sample turns root finding into
    // a scalar sign-change search.
    const std::complex<double> u = cs[i_max] / std::abs(cs[i_max]);
    auto project = [&](const std::complex<double>& c) {
        return (c * std::conj(u)).real();
    };

    std::vector<double> roots;
    double min_ratio = std::abs(cs[0]) / fundamental_mag(m, ks[0], drive);
    for (int i = 0; i + 1 < kGrid; ++i) {
        min_ratio = std::min(
            min_ratio, std::abs(cs[i + 1]) / fundamental_mag(m, ks[i + 1], drive));
        const double fa = project(cs[i]);
        const double fb = project(cs[i + 1]);
        if (fa == 0.0) {
            roots.push_back(ks[i]);
            continue;
        }
        if (fa * fb >= 0.0) continue;
        double a = ks[i], b = ks[i + 1], va = fa;
        while (b - a > 1e-13) {
            const double mid = 0.5 * (a + b);
            const double vm = project(target_coeff(m, target, mid, drive));
            if (vm == 0.0) {
                a = b = mid;
                break;
            }
            if ((va < 0.0) == (vm < 0.0)) {
                a = mid;
                va = vm;
            } else {
                b = mid;
            }
        }
        roots.push_back(0.5 * (a + b));
    }

    if (roots.empty()) {
        std::ostringstream msg;
        msg << "no dwell split k in (0, 1) zeroes harmonic " << target
            << " at m=" << m << "; smallest scanned |c_" << target
            << "|/|c_1| was " << min_ratio;
        throw std::runtime_error(msg.str());
    }

    std::sort(roots.begin(), roots.end());
    double best = roots.front();
    for (double r : roots) {
        const double d = std::abs(r - 0.5);
        const double bd = std::abs(best - 0.5);
        // strict < keeps the smaller root on a tie
        if (d < bd) best = r;
    }

    EliminationSolution sol;
    sol.m = m;
    sol.target = target;
    sol.k = best;
    sol.residual_rel =
        std::abs(target_coeff(m, target, best, drive)) /
        fundamental_mag(m, best, drive);
    sol.roots = std::move(roots);
    return sol;
}

} // namespace svpwm
