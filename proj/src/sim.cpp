#include "svpwm/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace svpwm {

namespace {

struct Segment {
    double seconds;
    double vq, vd;
};

// Union of the three phase breakpoint lists; every phase level is
// constant inside each segment.
std::vector<Segment> cycle_segments(const ThreePhaseWaveform& supply) {
    std::vector<double> bps;
    for (const auto& ph : supply.phase)
        for (const auto& s : ph.steps) bps.push_back(s.t);
    bps.push_back(0.0);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    std::vector<Segment> segs;
    segs.reserve(bps.size());
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const double t0 = bps[i];
        const double t1 = i + 1 < bps.size() ? bps[i + 1] : supply.period;
        if (!(t1 > t0)) continue;
        const double tm = 0.5 * (t0 + t1);
        const double va = value_at(supply.phase[0], tm);
        const double vb = value_at(supply.phase[1], tm);
        const double vc = value_at(supply.phase[2], tm);
        // Common mode cancels in both transforms.
        const double vq = (2.0 / 3.0) * (va - 0.5 * vb - 0.5 * vc);
        const double vd = (vc - vb) / kSqrt3;
        segs.push_back({t1 - t0, vq, vd});
    }
    return segs;
}

struct Model {
    double ls, lr, lm, det, rs, rr, w_syn, pole_pairs;

    struct State {
        double lqs, lds, lqr, ldr;
    };

    struct Currents {
        double iqs, ids, iqr, idr;
    };

    Currents currents(const State& x) const {
        return {(lr * x.lqs - lm * x.lqr) / det,
                (lr * x.lds - lm * x.ldr) / det,
                (ls * x.lqr - lm * x.lqs) / det,
                (ls * x.ldr - lm * x.lds) / det};
    }

    State deriv(const State& x, double vq, double vd) const {
        const Currents i = currents(x);
        return {vq - rs * i.iqs, vd - rs * i.ids,
                -rr * i.iqr + w_syn * x.ldr, -rr * i.idr - w_syn * x.lqr};
    }

    double torque(const State& x) const {
        const Currents i = currents(x);
        return 1.5 * pole_pairs * (x.lds * i.iqs - x.lqs * i.ids);
    }
};

Model::State axpy(const Model::State& x, double a, const Model::State& d) {
    return {x.lqs + a * d.lqs, x.lds + a * d.lds, x.lqr + a * d.lqr,
            x.ldr + a * d.ldr};
}

Model::State rk4_step(const Model& mdl, const Model::State& x, double h,
                      double vq, double vd) {
    const auto k1 = mdl.deriv(x, vq, vd);
    const auto k2 = mdl.deriv(axpy(x, 0.5 * h, k1), vq, vd);
    const auto k3 = mdl.deriv(axpy(x, 0.5 * h, k2), vq, vd);
    const auto k4 = mdl.deriv(axpy(x, h, k3), vq, vd);
    Model::State out = x;
    out.lqs += h / 6.0 * (k1.lqs + 2.0 * k2.lqs + 2.0 * k3.lqs + k4.lqs);
    out.lds += h / 6.0 * (k1.lds + 2.0 * k2.lds + 2.0 * k3.lds + k4.lds);
    out.lqr += h / 6.0 * (k1.lqr + 2.0 * k2.lqr + 2.0 * k3.lqr + k4.lqr);
    out.ldr += h / 6.0 * (k1.ldr + 2.0 * k2.ldr + 2.0 * k3.ldr + k4.ldr);
    return out;
}

} // namespace

SimResult simulate_no_load(const ThreePhaseWaveform& supply,
                           const MachineParams& machine,
                           const SimConfig& cfg) {
    if (!(supply.period > 0.0))
        throw std::domain_error("supply waveform has no period");
    if (!(cfg.dt > 0.0))
        throw std::domain_error("dt must be positive");
    if (cfg.n_settle_cycles < 0 || cfg.n_measure_cycles < 1)
        throw std::domain_error("cycle counts must be >= 0 settle, >= 1 measure");

    const auto segs = cycle_segments(supply);
    double min_seg = supply.period;
    for (const auto& s : segs) min_seg = std::min(min_seg, s.seconds);
    if (cfg.dt > min_seg / 20.0) {
        std::ostringstream msg;
        msg << "dt=" << cfg.dt << " exceeds a twentieth of the shortest "
            << "switching interval (" << min_seg << "); reduce dt";
        throw std::domain_error(msg.str());
    }

    const double f1 = 1.0 / supply.period;
    Model mdl{machine.l_s(),    machine.l_r(),      machine.l_m(),
              machine.flux_det(), machine.r_s,      machine.r_r,
              2.0 * kPi * f1,   machine.poles / 2.0};

    Model::State x{0.0, 0.0, 0.0, 0.0};

    auto check_finite = [&](const Model::State& s) {
        const double norm = std::abs(s.lqs) + std::abs(s.lds) +
                            std::abs(s.lqr) + std::abs(s.ldr);
        if (!std::isfinite(norm) || norm > 1e9) {
            std::ostringstream msg;
            msg << "integration diverged with dt=" << cfg.dt
                << "; reduce dt or check the supply waveform";
            throw std::runtime_error(msg.str());
        }
    };

    SimResult res;
    res.period = supply.period;

    auto record = [&](double t, const Model::State& s) {
        const auto i = mdl.currents(s);
        res.t.push_back(t);
        res.ia.push_back(i.iqs);
        res.ib.push_back(-0.5 * i.iqs - 0.5 * kSqrt3 * i.ids);
        res.ic.push_back(-0.5 * i.iqs + 0.5 * kSqrt3 * i.ids);
        res.torque.push_back(mdl.torque(s));
    };

    const int total_cycles = cfg.n_settle_cycles + cfg.n_measure_cycles;
    double t_rec = 0.0;
    for (int cycle = 0; cycle < total_cycles; ++cycle) {
        const bool measuring = cycle >= cfg.n_settle_cycles;
        if (measuring && cycle == cfg.n_settle_cycles) record(0.0, x);
        for (const auto& seg : segs) {
            const int n_sub =
                std::max(1, static_cast<int>(std::ceil(seg.seconds / cfg.dt)));
            const double h = seg.seconds / n_sub;
            for (int s = 0; s < n_sub; ++s) {
                x = rk4_step(mdl, x, h, seg.vq, seg.vd);
                if (measuring) {
                    t_rec += h;
                    record(t_rec, x);
                }
            }
        }
        check_finite(x);
    }
    return res;
}

LinearWaveform current_cycle(const SimResult& res, int phase) {
    if (phase < 0 || phase > 2)
        throw std::domain_error("phase index outside 0..2");
    const auto& cur = phase == 0 ? res.ia : phase == 1 ? res.ib : res.ic;
    if (res.t.size() != cur.size() || res.t.size() < 2)
        throw std::domain_error("simulation result holds no samples");

    LinearWaveform w;
    const double limit = res.period * (1.0 + 1e-9);
    for (std::size_t i = 0; i < res.t.size(); ++i) {
        if (res.t[i] > limit) break;
        w.nodes.push_back({res.t[i], cur[i]});
    }
    w.span = w.nodes.back().t;  // within rounding of the period
    return w;
}

std::array<double, 3> line_current_thd(const SimResult& res, int n_max) {
    std::array<double, 3> out{};
    for (int p = 0; p < 3; ++p)
        out[p] = thd(spectrum(current_cycle(res, p), n_max), n_max).percent;
    return out;
}

double torque_pp_from_sim(const SimResult& res) {
    if (res.t.size() < 2)
        throw std::domain_error("simulation result holds no samples");
    const double span = res.period / 6.0;
    double lo = res.torque.front(), hi = lo;
    for (std::size_t i = 0; i < res.t.size() && res.t[i] <= span * (1.0 + 1e-9);
         ++i) {
        lo = std::min(lo, res.torque[i]);
        hi = std::max(hi, res.torque[i]);
    }
    return hi - lo;
}

double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::domain_error("correlation needs two equal-length series");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::domain_error("correlation of a constant series");
    return sxy / std::sqrt(sxx * syy);
}

} // namespace svpwm
