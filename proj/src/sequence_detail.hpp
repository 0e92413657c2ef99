#pragma once

// Internal slot-template plumbing shared by playlist, synthesis and
// ripple code. Not installed.

#include <vector>

#include "svpwm/dwell.hpp"
#include "svpwm/sequence.hpp"

namespace svpwm::detail {

enum class Role { Zero0, Zero7, Lead, Trail };
enum class Ref { Z, T1, T2 };

struct SlotRule {
    Role role;
    Ref ref;
    double c0;  // duration = (c0 + ck * k) * referenced dwell time
    double ck;
};

struct SequenceSpec {
    Sequence id;
    std::vector<double> angles_deg;
    std::vector<std::vector<SlotRule>> samples;
};

const SequenceSpec& sequence_spec(Sequence seq);

/// Concrete vector id of a slot role in the given sector (1..6).
/// Lead/Trail follow the sector's active pair; the zero ids alternate
/// between odd and even sectors, which is what keeps the three-phase
/// waveforms half-wave symmetric.
int rotate_vector_id(Role role, int sector);

double slot_seconds(const SlotRule& rule, const DwellTimes& dw, double k);

} // namespace svpwm::detail
