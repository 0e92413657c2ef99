#include "svpwm/dwell.hpp"

#include <cmath>
#include <string>

namespace svpwm {

DwellTimes dwell_times(double m, double alpha_deg, double ts) {
    require_modulation_index(m);
    if (!(alpha_deg >= 0.0) || !(alpha_deg <= 60.0))
        throw std::domain_error("sample angle alpha=" +
                                std::to_string(alpha_deg) +
                                " deg outside [0, 60]");
    if (!(ts > 0.0))
        throw std::domain_error("subcycle length ts=" + std::to_string(ts) +
                                " must be positive");

    const double a = alpha_deg * kDegToRad;
    const double t1 = m * std::sin(kPi / 3.0 - a) * ts;
    const double t2 = m * std::sin(a) * ts;
    return {t1, t2, ts - t1 - t2};
}

} // namespace svpwm
