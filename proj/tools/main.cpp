// svpwm-ripple: switching-sequence analysis for a two-level three-phase
// inverter. Synthesizes pole-voltage waveforms, tunes the dwell-split
// harmonic elimination, and reports flux/torque ripple and line-current
// THD as CSV files.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svpwm/calibration.hpp"
#include "svpwm/csv_report.hpp"
#include "svpwm/dwell.hpp"
#include "svpwm/elimination.hpp"
#include "svpwm/ripple.hpp"
#include "svpwm/sequence.hpp"
#include "svpwm/sim.hpp"
#include "svpwm/spectrum.hpp"
#include "svpwm/synthesis.hpp"

namespace {

using namespace svpwm;

struct Options {
    std::string out;
    double vdc = kCalibratedVdc;
    double fbase = 50.0;
    int poles = 4;
    double dt = 2e-6;
    int settle = 120;
    int nmax = 49;
    std::string seq = "svhe";
    std::vector<double> m_list;
    std::string k_policy = "half";
    std::string target = "both";
    double alpha1 = 15.0;
    double alpha2 = 10.0;
};

DriveConfig drive_of(const Options& o) {
    DriveConfig d;
    d.v_dc = o.vdc;
    d.f_base = o.fbase;
    return d;
}

MachineParams machine_of(const Options& o) {
    MachineParams mp;
    mp.poles = o.poles;
    return mp;
}

SimConfig sim_of(const Options& o) {
    SimConfig sc;
    sc.dt = o.dt;
    sc.n_settle_cycles = o.settle;
    return sc;
}

std::vector<double> m_or_default(const Options& o) {
    if (!o.m_list.empty()) return o.m_list;
    return {0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95};
}

/// Dwell split chosen by the --k policy for one (sequence, m) pair.
double resolve_k(const Options& o, Sequence seq, double m,
                 const DriveConfig& drive) {
    if (!sequence_uses_k(seq)) return 0.5;
    if (o.k_policy == "half") return 0.5;
    if (o.k_policy == "solve-5") return solve_k(m, 5, drive).k;
    if (o.k_policy == "solve-7") return solve_k(m, 7, drive).k;
    if (o.k_policy.rfind("fixed:", 0) == 0) {
        std::size_t used = 0;
        const std::string body = o.k_policy.substr(6);
        double v = 0.0;
        try {
            v = std::stod(body, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != body.size() || !(v > 0.0) || !(v < 1.0))
            throw std::domain_error("bad --k value \"" + o.k_policy +
                                    "\": fixed:<x> needs x in (0, 1)");
        return v;
    }
    throw std::domain_error("unknown --k policy \"" + o.k_policy +
                            "\" (half, fixed:<x>, solve-5, solve-7)");
}

std::string canonical_config(const Options& o, const std::string& cmd) {
    std::ostringstream s;
    s << "cmd=" << cmd << ";vdc=" << format_number(o.vdc)
      << ";fbase=" << format_number(o.fbase) << ";poles=" << o.poles
      << ";dt=" << format_number(o.dt) << ";settle=" << o.settle
      << ";nmax=" << o.nmax << ";seq=" << o.seq << ";k=" << o.k_policy
      << ";target=" << o.target << ";alpha1=" << format_number(o.alpha1)
      << ";alpha2=" << format_number(o.alpha2) << ";m=";
    const auto ms = m_or_default(o);
    for (std::size_t i = 0; i < ms.size(); ++i)
        s << (i ? "," : "") << format_number(ms[i]);
    return s.str();
}

std::filesystem::path out_dir(const Options& o) {
    std::filesystem::path p = o.out;
    std::filesystem::create_directories(p);
    return p;
}

std::string file_of(const std::filesystem::path& dir, const std::string& name) {
    return (dir / name).string();
}

int cmd_waveform(const Options& o) {
    const auto dir = out_dir(o);
    const auto hash = config_hash(canonical_config(o, "waveform"));
    const DriveConfig drive = drive_of(o);
    const MachineParams machine = machine_of(o);
    const Sequence seq = sequence_from_name(o.seq);
    const auto ms = m_or_default(o);
    if (ms.size() != 1)
        throw std::domain_error("waveform needs exactly one --m value");
    const double m = ms.front();
    const double k = resolve_k(o, seq, m, drive);

    const auto w = pole_voltage_waveform(seq, m, k, drive);
    const auto sp = spectrum(w.phase[0], o.nmax);
    const auto fr = flux_ripple(seq, m, k, drive);
    const double scale = torque_ripple_scale(m, drive, machine);

    const std::string tag = std::string(sequence_name(seq)) + "_m" +
                            format_number(m);
    write_csv(file_of(dir, "pole_voltage_" + tag + ".csv"), waveform_table(w),
              hash);
    write_csv(file_of(dir, "spectrum_" + tag + ".csv"), spectrum_table(sp),
              hash);
    write_csv(file_of(dir, "flux_ripple_" + tag + ".csv"),
              ripple_table(fr.q, fr.d, scale), hash);

    const auto sw = switching_count(w);
    const auto th = thd(sp, o.nmax);
    std::cout << "sequence " << sequence_name(seq) << " m=" << format_number(m)
              << " k=" << format_number(k) << "\n"
              << "switchings per phase " << sw.per_phase[0] << "/"
              << sw.per_phase[1] << "/" << sw.per_phase[2] << " total "
              << sw.total << "\n"
              << "pole-voltage THD " << format_number(th.percent) << " %\n"
              << "flux ripple pp q=" << format_number(peak_to_peak(fr.q))
              << " d=" << format_number(peak_to_peak(fr.d)) << " V*s"
              << ", torque pp " << format_number(scale * peak_to_peak(fr.q))
              << " Nm\n"
              << "wrote 3 files to " << dir.string() << "\n";
    return 0;
}

int cmd_solve_k(const Options& o) {
    const auto dir = out_dir(o);
    const auto hash = config_hash(canonical_config(o, "solve-k"));
    const DriveConfig drive = drive_of(o);

    std::vector<int> targets;
    if (o.target == "both")
        targets = {5, 7};
    else if (o.target == "5")
        targets = {5};
    else if (o.target == "7")
        targets = {7};
    else
        throw std::domain_error("bad --target \"" + o.target +
                                "\" (5, 7 or both)");

    CsvTable t;
    t.columns = {"m", "target", "k", "residual"};
    for (double m : m_or_default(o)) {
        for (int target : targets) {
            try {
                const auto sol = solve_k(m, target, drive);
                t.rows.push_back({m, static_cast<double>(target), sol.k,
                                  sol.residual_rel});
                std::cout << "m=" << format_number(m) << " target " << target
                          << ": k=" << format_number(sol.k) << " residual "
                          << format_number(sol.residual_rel) << "\n";
            } catch (const std::runtime_error& e) {
                // No root: keep the row, mark the cell.
                t.rows.push_back({m, static_cast<double>(target),
                                  std::nan(""), std::nan("")});
                std::cout << "m=" << format_number(m) << " target " << target
                          << ": no solution (" << e.what() << ")\n";
            }
        }
    }
    write_csv(file_of(dir, "solved_k.csv"), t, hash);
    std::cout << "wrote solved_k.csv to " << dir.string() << "\n";
    return 0;
}

int cmd_sweep_ripple(const Options& o) {
    const auto dir = out_dir(o);
    const auto hash = config_hash(canonical_config(o, "sweep-ripple"));
    const DriveConfig drive = drive_of(o);
    const MachineParams machine = machine_of(o);

    CsvTable t;
    t.columns = {"m", "csv", "abc1", "abc2", "svhe_ne", "svhe_h5", "svhe_h7"};
    for (double m : m_or_default(o)) {
        const double scale = torque_ripple_scale(m, drive, machine);
        auto pp = [&](Sequence seq, double k) {
            return scale * peak_to_peak(flux_ripple(seq, m, k, drive).q);
        };
        t.rows.push_back({m, pp(Sequence::Csv, 0.5), pp(Sequence::Abc1, 0.5),
                          pp(Sequence::Abc2, 0.5), pp(Sequence::Svhe, 0.5),
                          pp(Sequence::Svhe, solve_k(m, 5, drive).k),
                          pp(Sequence::Svhe, solve_k(m, 7, drive).k)});
    }
    write_csv(file_of(dir, "ripple_sweep.csv"), t, hash);
    std::cout << "wrote ripple_sweep.csv (" << t.rows.size() << " rows) to "
              << dir.string() << "\n";
    return 0;
}

int cmd_sweep_thd(const Options& o) {
    const auto dir = out_dir(o);
    const auto hash = config_hash(canonical_config(o, "sweep-thd"));
    const DriveConfig drive = drive_of(o);
    const MachineParams machine = machine_of(o);
    const SimConfig sc = sim_of(o);

    CsvTable t;
    t.columns = {"m", "csv", "svhe_ne", "svhe_h5", "svhe_h7"};
    for (double m : m_or_default(o)) {
        auto cell = [&](Sequence seq, double k) {
            const auto w = pole_voltage_waveform(seq, m, k, drive);
            const auto res = simulate_no_load(w, machine, sc);
            return line_current_thd(res, o.nmax)[0];
        };
        std::cerr << "simulating m=" << format_number(m) << "\n";
        t.rows.push_back({m, cell(Sequence::Csv, 0.5),
                          cell(Sequence::Svhe, 0.5),
                          cell(Sequence::Svhe, solve_k(m, 5, drive).k),
                          cell(Sequence::Svhe, solve_k(m, 7, drive).k)});
    }
    write_csv(file_of(dir, "thd_sweep.csv"), t, hash);
    std::cout << "wrote thd_sweep.csv (" << t.rows.size() << " rows) to "
              << dir.string() << "\n";
    return 0;
}

int cmd_crossover(const Options& o) {
    const auto dir = out_dir(o);
    const auto hash = config_hash(canonical_config(o, "crossover"));
    const double mc = crossover_m(o.alpha1, o.alpha2);

    CsvTable t;
    t.columns = {"alpha1_deg", "alpha2_deg", "m_crossover"};
    t.rows.push_back({o.alpha1, o.alpha2, mc});
    write_csv(file_of(dir, "crossover.csv"), t, hash);
    std::cout << "ripple crossover at m=" << format_number(mc) << " (alpha1="
              << format_number(o.alpha1) << " deg, alpha2="
              << format_number(o.alpha2) << " deg)\n"
              << "wrote crossover.csv to " << dir.string() << "\n";
    return 0;
}

int cmd_report(const Options& o) {
    const auto dir = out_dir(o);
    const auto hash = config_hash(canonical_config(o, "report"));
    const DriveConfig drive = drive_of(o);

    cmd_sweep_ripple(o);
    cmd_sweep_thd(o);
    cmd_solve_k(o);
    cmd_crossover(o);

    const auto fit = fit_dc_link_voltage();
    std::ofstream sum(file_of(dir, "summary.txt"));
    if (!sum)
        throw std::runtime_error("cannot open \"" +
                                 file_of(dir, "summary.txt") +
                                 "\" for writing");
    sum << csv_header_comment(hash);
    sum << "fitted v_dc " << format_number(fit.v_dc) << " V (max table residual "
        << format_number(100.0 * fit.max_abs_relative_residual) << " %)\n";
    sum << "ripple crossover m " << format_number(crossover_m(o.alpha1, o.alpha2))
        << "\n";
    for (auto seq : {Sequence::Csv, Sequence::Abc1, Sequence::Abc2,
                     Sequence::Svhe}) {
        const auto w = pole_voltage_waveform(seq, 0.8, 0.5, drive);
        const auto sw = switching_count(w);
        sum << "switchings per phase at m=0.8, " << sequence_name(seq) << ": "
            << sw.per_phase[0] << "\n";
    }
    sum.flush();
    if (!sum)
        throw std::runtime_error("write to summary.txt failed");
    std::cout << "wrote summary.txt to " << dir.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    const char* env_out = std::getenv("SVHE_OUT_DIR");
    o.out = env_out && *env_out ? env_out : ".";

    CLI::App app{"switching-sequence ripple and THD analysis for a "
                 "two-level three-phase inverter"};
    app.set_version_flag("--version", std::string("svpwm-ripple ") + kVersion);
    app.fallthrough();
    app.set_config("--config", "", "flat key=value file; flags win");

    app.add_option("--out", o.out,
                   "output directory (default: $SVHE_OUT_DIR or .)")
        ->capture_default_str();
    app.add_option("--vdc", o.vdc, "DC link voltage, V")
        ->capture_default_str();
    app.add_option("--fbase", o.fbase, "stator frequency at m=1, Hz")
        ->capture_default_str();
    app.add_option("--poles", o.poles, "machine pole count")
        ->capture_default_str();
    app.add_option("--dt", o.dt, "simulation step ceiling, s")
        ->capture_default_str();
    app.add_option("--settle", o.settle, "simulation settle cycles")
        ->capture_default_str();
    app.add_option("--nmax", o.nmax, "highest harmonic order")
        ->capture_default_str();
    app.add_option("--seq", o.seq, "sequence: csv, abc1, abc2, svhe")
        ->capture_default_str();
    app.add_option("--m", o.m_list,
                   "modulation indices (comma separated; default sweep "
                   "0.6..0.95)")
        ->delimiter(',');
    app.add_option("--k", o.k_policy,
                   "dwell split: half, fixed:<x>, solve-5, solve-7")
        ->capture_default_str();
    app.add_option("--target", o.target, "harmonic to solve for: 5, 7, both")
        ->capture_default_str();
    app.add_option("--alpha1", o.alpha1, "first sample angle, deg")
        ->capture_default_str();
    app.add_option("--alpha2", o.alpha2,
                   "first sample angle of the three-sample sequence, deg")
        ->capture_default_str();

    auto* c_wave = app.add_subcommand("waveform",
                                      "synthesize one cycle and its ripple");
    auto* c_solve = app.add_subcommand("solve-k",
                                       "solve the harmonic-zeroing dwell split");
    auto* c_rip = app.add_subcommand("sweep-ripple",
                                     "predicted torque ripple over m");
    auto* c_thd = app.add_subcommand("sweep-thd",
                                     "simulated line-current THD over m");
    auto* c_cross = app.add_subcommand("crossover",
                                       "ripple crossover modulation index");
    auto* c_rep = app.add_subcommand("report", "everything plus summary.txt");
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
        if (c_wave->parsed()) return cmd_waveform(o);
        if (c_solve->parsed()) return cmd_solve_k(o);
        if (c_rip->parsed()) return cmd_sweep_ripple(o);
        if (c_thd->parsed()) return cmd_sweep_thd(o);
        if (c_cross->parsed()) return cmd_crossover(o);
        if (c_rep->parsed()) return cmd_report(o);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
