#pragma once

#include <complex>
#include <vector>

#include "svpwm/waveform.hpp"

namespace svpwm {

/// Complex Fourier coefficient c_n of the periodic waveform,
/// c_n = (1/T) * integral over one period of w(t) * exp(-j n w0 t) dt,
/// evaluated exactly per segment (no sampling). n >= 0; c_0 is the
/// mean.
std::complex<double> fourier_coefficient(const StepWaveform& w, int n);

/// Same for a piecewise-linear waveform treated as one period.
std::complex<double> fourier_coefficient(const LinearWaveform& w, int n);

struct Harmonic {
    int n;
    std::complex<double> c;
};

/// Coefficients c_1 .. c_n_max.
struct Spectrum {
    std::vector<Harmonic> harmonics;
    double fundamental_mag() const;  // |c_1|
};

Spectrum spectrum(const StepWaveform& w, int n_max);
Spectrum spectrum(const LinearWaveform& w, int n_max);

/// Total harmonic distortion computed from harmonics 2..n_max.
/// percent is the RMS form 100 * sqrt(sum |c_n|^2) / |c_1|;
/// linear_sum_percent is the plain magnitude sum 100 * sum |c_n| / |c_1|
/// kept as a diagnostic (it over-counts and is not comparable to the
/// RMS figure). Throws std::domain_error when |c_1| is zero.
struct ThdResult {
    double percent;
    double linear_sum_percent;
};
ThdResult thd(const Spectrum& s, int n_max);

} // namespace svpwm
