#pragma once

#include "svpwm/config.hpp"

namespace svpwm {

/// Dwell split of one subcycle between the two active vectors and zero.
struct DwellTimes {
    double t1;  // sector-leading active vector, s
    double t2;  // sector-trailing active vector, s
    double tz;  // total zero-vector time, s
};

/// Volt-second balanced dwell times for a reference at angle alpha_deg
/// inside a sector (0..60 deg from the leading vector), modulation
/// index m, subcycle length ts seconds.
///
/// t1 + t2 + tz == ts and t1, t2 >= 0; tz may reach 0 only at m = 1.
/// Throws std::domain_error for m outside (0, 1] or alpha outside
/// [0, 60].
DwellTimes dwell_times(double m, double alpha_deg, double ts);

} // namespace svpwm
