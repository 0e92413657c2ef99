#include "svpwm/csv_report.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "svpwm/config.hpp"

namespace svpwm {

std::string config_hash(const std::string& canonical_config) {
    // FNV-1a, 64 bit.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : canonical_config) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_header_comment(const std::string& cfg_hash) {
    return "# svpwm-ripple " + std::string(kVersion) + " config=" + cfg_hash +
           "\n";
}

void write_csv(const std::string& path, const CsvTable& table,
               const std::string& cfg_hash) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open \"" + path + "\" for writing");

    out << csv_header_comment(cfg_hash);
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i];
    out << "\n";
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::runtime_error("row width mismatch writing \"" + path +
                                     "\"");
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_number(row[i]);
        out << "\n";
    }
    out.flush();
    if (!out)
        throw std::runtime_error("write to \"" + path + "\" failed");
}

CsvTable waveform_table(const ThreePhaseWaveform& w) {
    std::vector<double> grid;
    for (const auto& ph : w.phase)
        for (const auto& s : ph.steps) grid.push_back(s.t);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    CsvTable t;
    t.columns = {"t", "va", "vb", "vc"};
    t.rows.reserve(grid.size());
    for (double tt : grid)
        t.rows.push_back({tt, value_at(w.phase[0], tt), value_at(w.phase[1], tt),
                          value_at(w.phase[2], tt)});
    return t;
}

CsvTable spectrum_table(const Spectrum& s) {
    CsvTable t;
    t.columns = {"n", "re", "im", "mag"};
    t.rows.reserve(s.harmonics.size());
    for (const auto& h : s.harmonics)
        t.rows.push_back({static_cast<double>(h.n), h.c.real(), h.c.imag(),
                          std::abs(h.c)});
    return t;
}

CsvTable ripple_table(const LinearWaveform& q, const LinearWaveform& d,
                      double torque_scale) {
    if (q.nodes.size() != d.nodes.size())
        throw std::runtime_error("q and d ripple waveforms differ in shape");
    CsvTable t;
    t.columns = {"t", "psi_q", "psi_d", "torque"};
    t.rows.reserve(q.nodes.size());
    for (std::size_t i = 0; i < q.nodes.size(); ++i)
        t.rows.push_back({q.nodes[i].t, q.nodes[i].v, d.nodes[i].v,
                          torque_scale * q.nodes[i].v});
    return t;
}

CsvTable timeseries_table(const SimResult& res) {
    CsvTable t;
    t.columns = {"t", "ia", "ib", "ic", "torque"};
    t.rows.reserve(res.t.size());
    for (std::size_t i = 0; i < res.t.size(); ++i)
        t.rows.push_back(
            {res.t[i], res.ia[i], res.ib[i], res.ic[i], res.torque[i]});
    return t;
}

} // namespace svpwm
