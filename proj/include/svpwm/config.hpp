#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace svpwm {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDegToRad = kPi / 180.0;
inline constexpr double kSqrt3 = std::numbers::sqrt3;
inline constexpr double kSin60 = kSqrt3 / 2.0;

/// DC link voltage (V) reproducing the reference torque-ripple dataset.
/// Obtained once from fit_dc_link_voltage(); see calibration.hpp.
inline constexpr double kCalibratedVdc = 563.0135424733;

/// Reference-vector amplitude convention.
///
/// RailToRail: |V_ref| = sin(60 deg) * m * v_dc, with pole voltages
/// switching between 0 and v_dc and ripple budgets expressed against
/// that span. This is the convention the bundled reference dataset
/// was produced with and the only one implemented; the enum exists so
/// call sites name the choice instead of inheriting it silently.
enum class VectorConvention { RailToRail };

/// Converter-side operating parameters shared by every module.
struct DriveConfig {
    double v_dc = kCalibratedVdc;   // DC link voltage, V
    double f_base = 50.0;           // stator frequency at m = 1, Hz
    VectorConvention convention = VectorConvention::RailToRail;

    /// Fundamental frequency follows the modulation index (V/f drive).
    double fundamental_hz(double m) const { return f_base * m; }

    /// Reference-vector magnitude for modulation index m.
    double v_ref(double m) const { return kSin60 * m * v_dc; }
};

/// Induction machine constants for torque scaling and simulation.
/// Defaults describe the 7.5 kW, 4-pole test machine of the reference
/// dataset (per-phase referred quantities, SI units).
struct MachineParams {
    int poles = 4;
    double r_s = 1.1667;        // stator resistance, ohm
    double r_r = 3.2105;        // rotor resistance (referred), ohm
    double l_o = 0.3025;        // magnetizing inductance, H
    double sigma_s = 0.0392;    // stator leakage factor
    double sigma_r = 0.0392;    // rotor leakage factor

    double l_s() const { return (1.0 + sigma_s) * l_o; }
    double l_r() const { return (1.0 + sigma_r) * l_o; }
    double l_m() const { return l_o; }

    /// l_s*l_r - l_m^2; positive for any physical leakage.
    double flux_det() const { return l_s() * l_r() - l_m() * l_m(); }
};

/// Throws std::domain_error unless m is inside (0, 1].
inline void require_modulation_index(double m) {
    if (!(m > 0.0) || !(m <= 1.0))
        throw std::domain_error("modulation index m=" + std::to_string(m) +
                                " outside (0, 1]");
}

} // namespace svpwm
