#include "svpwm/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "svpwm/elimination.hpp"
#include "svpwm/ripple.hpp"
#include "svpwm/waveform.hpp"

namespace svpwm {

namespace {

// Measured peak-to-peak torque ripple, Nm, on the 563 V / 7.5 kW
// bench drive. Columns: csv, abc1, abc2, svhe at k = 0.5, svhe with
// the 5th harmonic zeroed, svhe with the 7th zeroed.
struct Row {
    double m;
    double csv, abc1, abc2, ne, h5, h7;
};

constexpr Row kRippleRows[] = {
    {0.60, 20.066, 55.046, 55.070, 27.570, 27.570, 27.570},
    {0.65, 17.011, 48.547, 48.618, 24.400, 24.400, 24.400},
    {0.70, 14.958, 42.442, 42.432, 21.240, 21.240, 21.240},
    {0.75, 13.025, 36.066, 36.038, 18.060, 18.060, 18.060},
    {0.80, 11.700, 29.723, 29.588, 14.900, 14.900, 14.900},
    {0.85, 10.432, 23.719, 23.741, 11.740, 11.740, 11.740},
    {0.90, 9.136, 17.763, 17.812, 8.569, 8.569, 8.569},
    {0.95, 7.844, 11.893, 11.908, 5.398, 5.756, 5.942},
};

// Measured line-current THD, percent, same drive.
struct ThdRow {
    double m;
    double csv, ne, h5, h7;
};

constexpr ThdRow kThdRows[] = {
    {0.60, 71.84, 87.83, 84.57, 97.71},
    {0.65, 68.32, 79.67, 75.96, 90.96},
    {0.70, 65.12, 71.85, 67.58, 84.34},
    {0.75, 62.32, 64.45, 59.48, 78.23},
    {0.80, 59.95, 57.82, 52.01, 72.64},
    {0.85, 58.06, 52.22, 45.36, 67.68},
    {0.90, 56.90, 47.62, 39.67, 63.31},
    {0.95, 56.43, 44.84, 35.78, 60.03},
};

} // namespace

const std::vector<RippleTableCell>& reference_ripple_table() {
    static const std::vector<RippleTableCell> table = [] {
        std::vector<RippleTableCell> t;
        for (const auto& r : kRippleRows) {
            t.push_back({Sequence::Csv, r.m, 0, r.csv, "csv"});
            t.push_back({Sequence::Abc1, r.m, 0, r.abc1, "abc1"});
            t.push_back({Sequence::Abc2, r.m, 0, r.abc2, "abc2"});
            t.push_back({Sequence::Svhe, r.m, 0, r.ne, "svhe_ne"});
            t.push_back({Sequence::Svhe, r.m, 5, r.h5, "svhe_h5"});
            t.push_back({Sequence::Svhe, r.m, 7, r.h7, "svhe_h7"});
        }
        return t;
    }();
    return table;
}

const std::vector<ThdTableCell>& reference_thd_table() {
    static const std::vector<ThdTableCell> table = [] {
        std::vector<ThdTableCell> t;
        for (const auto& r : kThdRows) {
            t.push_back({Sequence::Csv, r.m, 0, r.csv, "csv"});
            t.push_back({Sequence::Svhe, r.m, 0, r.ne, "svhe_ne"});
            t.push_back({Sequence::Svhe, r.m, 5, r.h5, "svhe_h5"});
            t.push_back({Sequence::Svhe, r.m, 7, r.h7, "svhe_h7"});
        }
        return t;
    }();
    return table;
}

CalibrationFit fit_dc_link_voltage() {
    DriveConfig unit;
    unit.v_dc = 1.0;
    const MachineParams machine;

    // Solved k depends on m only, not v_dc; cache per (m, target).
    std::map<std::pair<double, int>, double> k_cache;
    auto cell_k = [&](const RippleTableCell& cell) {
        if (cell.k_solved_target == 0) return 0.5;
        const auto key = std::make_pair(cell.m, cell.k_solved_target);
        auto it = k_cache.find(key);
        if (it == k_cache.end())
            it = k_cache
                     .emplace(key,
                              solve_k(cell.m, cell.k_solved_target, unit).k)
                     .first;
        return it->second;
    };

    const auto& table = reference_ripple_table();
    // Per-volt^2 prediction of each cell; the model is pred = c * v^2.
    std::vector<double> c(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& cell = table[i];
        const double pp =
            peak_to_peak(flux_ripple(cell.seq, cell.m, cell_k(cell), unit).q);
        c[i] = torque_ripple_scale(cell.m, unit, machine) * pp;
    }

    // Least squares on relative error, linear in v^2:
    // v^2 = sum(c_i/T_i) / sum((c_i/T_i)^2).
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double r = c[i] / table[i].torque_pp_nm;
        num += r;
        den += r * r;
    }
    const double v2 = num / den;

    CalibrationFit fit;
    fit.v_dc = std::sqrt(v2);
    fit.relative_residuals.resize(table.size());
    fit.max_abs_relative_residual = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double pred = c[i] * v2;
        const double rel = (pred - table[i].torque_pp_nm) / table[i].torque_pp_nm;
        fit.relative_residuals[i] = rel;
        fit.max_abs_relative_residual =
            std::max(fit.max_abs_relative_residual, std::abs(rel));
    }
    return fit;
}

} // namespace svpwm
