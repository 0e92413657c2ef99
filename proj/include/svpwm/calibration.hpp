#pragma once

#include <array>
#include <string>
#include <vector>

#include "svpwm/config.hpp"
#include "svpwm/sequence.hpp"

namespace svpwm {

/// One measured peak-to-peak torque-ripple cell of the reference
/// dataset: sequence, modulation index, Nm.
struct RippleTableCell {
    Sequence seq;
    double m;
    /// How k was chosen for the cell: 0.5, or the solved value that
    /// zeroes the given harmonic (0 means fixed 0.5).
    int k_solved_target;
    double torque_pp_nm;
    const char* label;  // column name in the source dataset
};

/// The 48-cell reference dataset (8 modulation indices, 6 columns).
const std::vector<RippleTableCell>& reference_ripple_table();

/// Reference line-current THD dataset, percent (8 modulation indices,
/// 4 columns: csv, svhe at k = 0.5, svhe with 5th zeroed, svhe with
/// 7th zeroed).
struct ThdTableCell {
    Sequence seq;
    double m;
    int k_solved_target;
    double thd_percent;
    const char* label;
};
const std::vector<ThdTableCell>& reference_thd_table();

/// DC link voltage fitted to the reference ripple table.
///
/// Every predicted cell is proportional to v_dc^2 (flux ripple and
/// torque scale each carry one factor), so the fit is linear in
/// v_dc^2. Minimizing the summed squared *relative* error gives
/// v^2 = sum(c_i / T_i) / sum((c_i / T_i)^2) with c_i the per-volt^2
/// prediction and T_i the table value.
struct CalibrationFit {
    double v_dc;
    std::vector<double> relative_residuals;  // (pred - table) / table per cell
    double max_abs_relative_residual;
};
CalibrationFit fit_dc_link_voltage();

} // namespace svpwm
