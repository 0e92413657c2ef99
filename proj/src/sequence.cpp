#include "svpwm/sequence.hpp"

#include <cmath>
#include <stdexcept>

#include "svpwm/dwell.hpp"
#include "sequence_detail.hpp"

namespace svpwm {

namespace detail {

// Slot templates in sector-1 roles. Duration = (c0 + ck * k) * ref.
// Role::Lead / Role::Trail rotate with the sector; zero slots carry
// their sector-1 id and swap in even sectors (see rotate_vector_id).
namespace {

using R = SlotRule;

const SequenceSpec kCsv{
    Sequence::Csv,
    {10.0, 30.0, 50.0},
    {
        {R{Role::Zero0, Ref::Z, 0.5, 0.0}, R{Role::Lead, Ref::T1, 1.0, 0.0},
         R{Role::Trail, Ref::T2, 1.0, 0.0}, R{Role::Zero7, Ref::Z, 0.5, 0.0}},
        {R{Role::Zero7, Ref::Z, 0.5, 0.0}, R{Role::Trail, Ref::T2, 1.0, 0.0},
         R{Role::Lead, Ref::T1, 1.0, 0.0}, R{Role::Zero0, Ref::Z, 0.5, 0.0}},
        {R{Role::Zero0, Ref::Z, 0.5, 0.0}, R{Role::Lead, Ref::T1, 1.0, 0.0},
         R{Role::Trail, Ref::T2, 1.0, 0.0}, R{Role::Zero7, Ref::Z, 0.5, 0.0}},
    },
};

const SequenceSpec kAbc1{
    Sequence::Abc1,
    {15.0, 45.0},
    {
        {R{Role::Zero0, Ref::Z, 1.0, 0.0}, R{Role::Lead, Ref::T1, 0.5, 0.0},
         R{Role::Trail, Ref::T2, 1.0, 0.0}, R{Role::Lead, Ref::T1, 0.5, 0.0}},
        {R{Role::Lead, Ref::T1, 0.5, 0.0}, R{Role::Trail, Ref::T2, 1.0, 0.0},
         R{Role::Lead, Ref::T1, 0.5, 0.0}, R{Role::Zero0, Ref::Z, 1.0, 0.0}},
    },
};

const SequenceSpec kAbc2{
    Sequence::Abc2,
    {15.0, 45.0},
    {
        {R{Role::Zero7, Ref::Z, 1.0, 0.0}, R{Role::Trail, Ref::T2, 0.5, 0.0},
         R{Role::Lead, Ref::T1, 1.0, 0.0}, R{Role::Trail, Ref::T2, 0.5, 0.0}},
        {R{Role::Trail, Ref::T2, 0.5, 0.0}, R{Role::Lead, Ref::T1, 1.0, 0.0},
         R{Role::Trail, Ref::T2, 0.5, 0.0}, R{Role::Zero7, Ref::Z, 1.0, 0.0}},
    },
};

// The k split applies to the repeated vector of each sample: the lead
// dwell splits k : (1-k) around the trail slot in the first sample,
// mirrored onto the trail dwell in the second.
const SequenceSpec kSvhe{
    Sequence::Svhe,
    {15.0, 45.0},
    {
        {R{Role::Zero0, Ref::Z, 1.0, 0.0}, R{Role::Lead, Ref::T1, 0.0, 1.0},
         R{Role::Trail, Ref::T2, 1.0, 0.0}, R{Role::Lead, Ref::T1, 1.0, -1.0}},
        {R{Role::Zero7, Ref::Z, 1.0, 0.0}, R{Role::Trail, Ref::T2, 1.0, -1.0},
         R{Role::Lead, Ref::T1, 1.0, 0.0}, R{Role::Trail, Ref::T2, 0.0, 1.0}},
    },
};

} // namespace

const SequenceSpec& sequence_spec(Sequence seq) {
    switch (seq) {
        case Sequence::Csv: return kCsv;
        case Sequence::Abc1: return kAbc1;
        case Sequence::Abc2: return kAbc2;
        case Sequence::Svhe: return kSvhe;
    }
    throw std::logic_error("unknown sequence");
}

int rotate_vector_id(Role role, int sector) {
    const bool even = sector % 2 == 0;
    switch (role) {
        case Role::Lead: return sector;
        case Role::Trail: return sector == 6 ? 1 : sector + 1;
        case Role::Zero0: return even ? 7 : 0;
        case Role::Zero7: return even ? 0 : 7;
    }
    throw std::logic_error("unknown slot role");
}

double slot_seconds(const SlotRule& rule, const DwellTimes& dw, double k) {
    const double ref = rule.ref == Ref::Z ? dw.tz
                     : rule.ref == Ref::T1 ? dw.t1
                                           : dw.t2;
    return (rule.c0 + rule.ck * k) * ref;
}

} // namespace detail

Sequence sequence_from_name(const std::string& name) {
    if (name == "csv") return Sequence::Csv;
    if (name == "abc1") return Sequence::Abc1;
    if (name == "abc2") return Sequence::Abc2;
    if (name == "svhe") return Sequence::Svhe;
    throw std::domain_error("unknown sequence name \"" + name +
                            "\" (expected csv, abc1, abc2 or svhe)");
}

const char* sequence_name(Sequence seq) {
    switch (seq) {
        case Sequence::Csv: return "csv";
        case Sequence::Abc1: return "abc1";
        case Sequence::Abc2: return "abc2";
        case Sequence::Svhe: return "svhe";
    }
    return "?";
}

bool sequence_uses_k(Sequence seq) { return seq == Sequence::Svhe; }

int samples_per_sector(Sequence seq) {
    return static_cast<int>(detail::sequence_spec(seq).angles_deg.size());
}

std::vector<double> sample_angles_deg(Sequence seq) {
    return detail::sequence_spec(seq).angles_deg;
}

SwitchState vector_switch_state(int vector_id) {
    static constexpr SwitchState kStates[8] = {
        {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
        {0, 1, 1}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1},
    };
    if (vector_id < 0 || vector_id > 7)
        throw std::domain_error("vector id " + std::to_string(vector_id) +
                                " outside 0..7");
    return kStates[vector_id];
}

std::vector<PlaylistSlot> subcycle_playlist(Sequence seq, int sample_index,
                                            double m, double k, double ts) {
    const auto& spec = detail::sequence_spec(seq);
    if (sample_index < 0 ||
        sample_index >= static_cast<int>(spec.angles_deg.size()))
        throw std::domain_error("sample index " + std::to_string(sample_index) +
                                " outside 0.." +
                                std::to_string(spec.angles_deg.size() - 1));
    if (sequence_uses_k(seq) && (!(k > 0.0) || !(k < 1.0)))
        throw std::domain_error("dwell split k=" + std::to_string(k) +
                                " outside (0, 1)");

    const DwellTimes dw = dwell_times(m, spec.angles_deg[sample_index], ts);
    std::vector<PlaylistSlot> out;
    out.reserve(spec.samples[sample_index].size());
    for (const auto& rule : spec.samples[sample_index])
        out.push_back({detail::rotate_vector_id(rule.role, 1),
                       detail::slot_seconds(rule, dw, k)});
    return out;
}

double subcycle_seconds(Sequence seq, double m, const DriveConfig& drive) {
    require_modulation_index(m);
    const double f1 = drive.fundamental_hz(m);
    return 1.0 / (6.0 * f1 * samples_per_sector(seq));
}

} // namespace svpwm
