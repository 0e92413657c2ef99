#pragma once

#include <vector>

#include "svpwm/config.hpp"
#include "svpwm/sequence.hpp"

namespace svpwm {

/// Result of tuning the dwell-split k so one pole-voltage harmonic
/// vanishes.
struct EliminationSolution {
    double m;
    int target;               // harmonic order driven to zero
    double k;                 // selected root, the one nearest 0.5
    double residual_rel;      // |c_target| / |c_1| at the selected root
    std::vector<double> roots;  // every root found in (0, 1), ascending
};

/// Finds k in (0, 1) such that the pole-voltage harmonic c_target of
/// the Svhe sequence at modulation index m is zero.
///
/// c_target(k) traces a line through the origin of the complex plane,
/// so the sign of its projection onto a fixed direction brackets the
/// zeros; each bracket from a 1000-point scan is refined by bisection.
/// All roots are reported and the one nearest 0.5 is selected (ties
/// break toward the smaller k). Throws std::runtime_error naming m and
/// target when no root exists, including the smallest scanned
/// |c_target| / |c_1| so the caller can see how close the scan came.
EliminationSolution solve_k(double m, int target, const DriveConfig& drive);

} // namespace svpwm
