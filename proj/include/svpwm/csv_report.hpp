#pragma once

#include <string>
#include <vector>

#include "svpwm/sim.hpp"
#include "svpwm/spectrum.hpp"
#include "svpwm/waveform.hpp"

namespace svpwm {

/// FNV-1a 64-bit hash of the canonical run-configuration text,
/// rendered as 16 hex digits. Identical configurations hash
/// identically, so output files are byte-stable across runs.
std::string config_hash(const std::string& canonical_config);

/// Formats v with up to 12 significant digits, locale-independent,
/// no trailing zeros ("%.12g").
std::string format_number(double v);

/// The comment header every CSV starts with:
/// "# svpwm-ripple <version> config=<hash>\n".
std::string csv_header_comment(const std::string& cfg_hash);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Writes comment line, column names, then one line per row.
/// Throws std::runtime_error naming the path when the file cannot be
/// opened or written.
void write_csv(const std::string& path, const CsvTable& table,
               const std::string& cfg_hash);

/// Row per breakpoint union of the three phases: t, va, vb, vc.
CsvTable waveform_table(const ThreePhaseWaveform& w);

/// Row per harmonic: n, re, im, mag.
CsvTable spectrum_table(const Spectrum& s);

/// Row per node: t, psi_q, psi_d, torque (torque = scale * psi_q).
CsvTable ripple_table(const LinearWaveform& q, const LinearWaveform& d,
                      double torque_scale);

/// Row per sample: t, ia, ib, ic, torque.
CsvTable timeseries_table(const SimResult& res);

} // namespace svpwm
