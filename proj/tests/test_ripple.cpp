#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "svpwm/calibration.hpp"
#include "svpwm/ripple.hpp"
#include "svpwm/sequence.hpp"
#include "oracles.hpp"

using namespace svpwm;

namespace {

const Sequence kAll[] = {Sequence::Csv, Sequence::Abc1, Sequence::Abc2,
                         Sequence::Svhe};
const double kMGrid[] = {0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95};

} // namespace

TEST_CASE("error segments of the centered sequence, first sample") {
    DriveConfig drive;
    drive.v_dc = 1.0;
    const double m = 0.8;
    const double ts = subcycle_seconds(Sequence::Csv, m, drive);
    const auto segs = error_voltage_segments(Sequence::Csv, 0, m, 0.5, drive);
    REQUIRE(segs.size() == 4);
    const auto dw = dwell_times(m, 10.0, ts);
    const double v_ref = kSin60 * m;

    CHECK(segs[0].seconds == doctest::Approx(0.5 * dw.tz));
    CHECK(segs[0].vq == doctest::Approx(-v_ref));
    CHECK(segs[0].vd == 0.0);

    CHECK(segs[1].seconds == doctest::Approx(dw.t1));
    CHECK(segs[1].vq ==
          doctest::Approx(std::cos(10.0 * kDegToRad) - v_ref));
    CHECK(segs[1].vd == doctest::Approx(-std::sin(10.0 * kDegToRad)));

    CHECK(segs[2].seconds == doctest::Approx(dw.t2));
    CHECK(segs[2].vq ==
          doctest::Approx(std::cos(50.0 * kDegToRad) - v_ref));
    CHECK(segs[2].vd == doctest::Approx(std::sin(50.0 * kDegToRad)));

    CHECK(segs[3].seconds == doctest::Approx(0.5 * dw.tz));
    CHECK(segs[3].vq == doctest::Approx(-v_ref));
}

TEST_CASE("flux ripple closes at every subcycle boundary") {
    DriveConfig drive;  // calibrated v_dc, the tolerance scales with it
    for (auto seq : kAll) {
        for (double m : kMGrid) {
            const double ts = subcycle_seconds(seq, m, drive);
            const double budget = 1e-10 * drive.v_ref(m) * ts;
            const auto fr = flux_ripple(seq, m, 0.4, drive);
            const int n = samples_per_sector(seq);
            CAPTURE(sequence_name(seq));
            CAPTURE(m);
            for (int i = 1; i <= n; ++i) {
                const double t = i * ts;
                CHECK(std::abs(value_at(fr.q, t)) < budget);
                CHECK(std::abs(value_at(fr.d, t)) < budget);
            }
            CHECK(std::abs(fr.q.nodes.back().v) < budget);
            CHECK(std::abs(fr.d.nodes.back().v) < budget);
        }
    }
}

TEST_CASE("library ripple equals the hand-integrated closed form") {
    // 50 random (m, k) pairs, all breakpoints plus segment midpoints
    DriveConfig drive;
    for (int trial = 0; trial < 50; ++trial) {
        const double m = oracle::uniform(0.3, 1.0);
        const double k = oracle::uniform(0.05, 0.95);
        const double ts = subcycle_seconds(Sequence::Svhe, m, drive);
        const auto fr = flux_ripple(Sequence::Svhe, m, k, drive);
        CAPTURE(m);
        CAPTURE(k);
        // relative where the value is nonzero, absolute floor at the
        // boundary zeros (both sides close only to rounding there)
        const double floor = 1e-12 * drive.v_ref(m) * ts;
        for (std::size_t i = 0; i < fr.q.nodes.size(); ++i) {
            const auto& node = fr.q.nodes[i];
            const double want =
                oracle::svhe_q_ripple_reference(node.t, m, k, ts, drive.v_dc);
            CHECK(std::abs(node.v - want) <= 1e-10 * std::abs(want) + floor);
            if (i > 0) {
                const double tm = 0.5 * (fr.q.nodes[i - 1].t + node.t);
                const double wm =
                    oracle::svhe_q_ripple_reference(tm, m, k, ts, drive.v_dc);
                CHECK(std::abs(value_at(fr.q, tm) - wm) <=
                      1e-10 * std::abs(wm) + floor);
            }
        }
    }
}

TEST_CASE("closed-form peak-to-peak matches the waveform scan") {
    DriveConfig drive;
    drive.v_dc = 1.0;
    for (double m : kMGrid) {
        const double scan_svhe =
            peak_to_peak(flux_ripple(Sequence::Svhe, m, 0.5, drive).q);
        CHECK(pp_flux_svhe(m) == doctest::Approx(scan_svhe).epsilon(1e-9));
        const double scan_csv =
            peak_to_peak(flux_ripple(Sequence::Csv, m, 0.5, drive).q);
        if (m >= 0.75)
            CHECK(pp_flux_csv(m) == doctest::Approx(scan_csv).epsilon(1e-9));
        else
            // outside its regime the closed form undershoots the scan
            CHECK(pp_flux_csv(m) < scan_csv);
    }
    // spot values at the standard drive
    CHECK(pp_flux_svhe(0.8) == doctest::Approx(3.280206e-4).epsilon(1e-5));
    CHECK(pp_flux_svhe(0.9) == doctest::Approx(1.886012e-4).epsilon(1e-5));
    CHECK(pp_flux_csv(0.8) == doctest::Approx(2.581816e-4).epsilon(1e-5));
    CHECK(pp_flux_csv(0.9) == doctest::Approx(2.011782e-4).epsilon(1e-5));
}

TEST_CASE("q-ripple is invariant in k below m=0.95") {
    DriveConfig drive;
    drive.v_dc = 1.0;
    for (double m : {0.6, 0.75, 0.9}) {
        const double ref =
            peak_to_peak(flux_ripple(Sequence::Svhe, m, 0.5, drive).q);
        for (double k = 0.2; k <= 0.81; k += 0.1)
            CHECK(peak_to_peak(flux_ripple(Sequence::Svhe, m, k, drive).q) ==
                  doctest::Approx(ref).epsilon(1e-9));
    }
    // and genuinely not invariant at 0.95
    const double at_half =
        peak_to_peak(flux_ripple(Sequence::Svhe, 0.95, 0.5, drive).q);
    const double at_02 =
        peak_to_peak(flux_ripple(Sequence::Svhe, 0.95, 0.2, drive).q);
    CHECK(std::abs(at_02 - at_half) / at_half > 0.05);
}

TEST_CASE("d-axis peak-to-peak does not depend on m") {
    DriveConfig drive;
    drive.v_dc = 1.0;
    // the sector-middle sample rises to sin^2(30), the edge samples dip
    // to -sin(10) sin(50), both scaled by m ts v_dc with m ts = 1/900
    const double csv_expect = (0.25 + std::sin(10.0 * kDegToRad) *
                                          std::sin(50.0 * kDegToRad)) /
                              900.0;
    const double two_sps_expect = std::sin(15.0 * kDegToRad) *
                                  std::sin(45.0 * kDegToRad) / 600.0;
    for (double m : kMGrid) {
        CHECK(peak_to_peak(flux_ripple(Sequence::Csv, m, 0.5, drive).d) ==
              doctest::Approx(csv_expect).epsilon(1e-9));
        CHECK(peak_to_peak(flux_ripple(Sequence::Svhe, m, 0.5, drive).d) ==
              doctest::Approx(two_sps_expect).epsilon(1e-9));
        CHECK(peak_to_peak(flux_ripple(Sequence::Abc1, m, 0.5, drive).d) ==
              doctest::Approx(two_sps_expect).epsilon(1e-9));
    }
}

TEST_CASE("torque scale is independent of m and linear in v_dc") {
    DriveConfig drive;
    drive.v_dc = 1.0;
    const MachineParams machine;
    const double base = torque_ripple_scale(0.8, drive, machine);
    CHECK(base == doctest::Approx(0.1428303564459).epsilon(1e-9));
    for (double m : kMGrid)
        CHECK(torque_ripple_scale(m, drive, machine) ==
              doctest::Approx(base).epsilon(1e-12));
    drive.v_dc = 563.0;
    CHECK(torque_ripple_scale(0.8, drive, machine) ==
          doctest::Approx(base * 563.0).epsilon(1e-12));
}

TEST_CASE("torque ripple waveform is the scaled q ripple") {
    DriveConfig drive;
    const MachineParams machine;
    const auto fr = flux_ripple(Sequence::Svhe, 0.8, 0.5, drive);
    const auto tq = torque_ripple(Sequence::Svhe, 0.8, 0.5, drive, machine);
    const double scale = torque_ripple_scale(0.8, drive, machine);
    REQUIRE(tq.nodes.size() == fr.q.nodes.size());
    for (std::size_t i = 0; i < tq.nodes.size(); ++i)
        CHECK(tq.nodes[i].v ==
              doctest::Approx(scale * fr.q.nodes[i].v).epsilon(1e-12));
    // calibrated drive reproduces the expected magnitude
    CHECK(scale * peak_to_peak(fr.q) == doctest::Approx(14.851).epsilon(1e-3));
}

TEST_CASE("ripple crossover index") {
    CHECK(crossover_m() == doctest::Approx(0.884740).epsilon(1e-5));
    CHECK(crossover_m(15.0, 10.0) == crossover_m());
    // moving the first sample toward the sector edge shifts the crossover
    CHECK(crossover_m(12.0, 10.0) != doctest::Approx(crossover_m()));
}

TEST_CASE("reference tables are complete") {
    CHECK(reference_ripple_table().size() == 48);
    CHECK(reference_thd_table().size() == 32);
    for (const auto& cell : reference_ripple_table()) {
        CHECK(cell.torque_pp_nm > 0.0);
        CHECK(cell.m >= 0.6);
        CHECK(cell.m <= 0.95);
    }
}

TEST_CASE("calibration fit reproduces the frozen supply voltage") {
    const auto fit = fit_dc_link_voltage();
    CHECK(fit.v_dc == doctest::Approx(kCalibratedVdc).epsilon(1e-9));
    // all but three cells sit within 1 percent
    int beyond_2pct = 0, within_1pct = 0;
    for (double r : fit.relative_residuals) {
        if (std::abs(r) > 0.02) ++beyond_2pct;
        if (std::abs(r) <= 0.01) ++within_1pct;
    }
    CHECK(beyond_2pct == 3);
    CHECK(within_1pct == 45);
    CHECK(fit.max_abs_relative_residual ==
          doctest::Approx(0.0873).epsilon(0.01));
}
