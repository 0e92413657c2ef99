#pragma once

#include <array>
#include <string>
#include <vector>

#include "svpwm/config.hpp"

namespace svpwm {

/// Switching sequences for one subcycle, named by their zero-state
/// usage pattern:
///   Csv   3 samples/sector, zero time split between both zero states
///   Abc1  2 samples/sector, all zero time on V0 (0,0,0)
///   Abc2  2 samples/sector, all zero time on V7 (1,1,1)
///   Svhe  2 samples/sector, one zero state per sample and the
///         leading-vector dwell of each sample split k : (1-k)
enum class Sequence { Csv, Abc1, Abc2, Svhe };

/// Parses "csv", "abc1", "abc2", "svhe" (case-sensitive).
/// Throws std::domain_error on anything else.
Sequence sequence_from_name(const std::string& name);
const char* sequence_name(Sequence seq);

/// True when the sequence consumes the dwell-split parameter k.
bool sequence_uses_k(Sequence seq);

/// Samples per 60-degree sector (3 for Csv, 2 otherwise).
int samples_per_sector(Sequence seq);

/// Reference angles of the samples inside a sector, degrees from the
/// sector-leading vector. Centered: 10/30/50 for Csv, 15/45 otherwise.
std::vector<double> sample_angles_deg(Sequence seq);

/// Inverter leg states for vectors 0..7: (a, b, c) each 0 or 1.
/// 1..6 walk the hexagon counter-clockwise starting at (1,0,0).
struct SwitchState {
    int a, b, c;
    bool operator==(const SwitchState&) const = default;
};
SwitchState vector_switch_state(int vector_id);

/// One slot of a subcycle playlist: hold vector_id for seconds.
struct PlaylistSlot {
    int vector_id;
    double seconds;
};

/// Vector order and durations of one subcycle in sector 1.
///
/// sample_index counts 0-based within the sector. k splits the
/// leading-vector dwell for Svhe (throws std::domain_error outside
/// (0, 1)); other sequences ignore it. Durations sum to ts within
/// 1e-12 relative. Slots of zero duration are kept so the structural
/// slot count is fixed per sequence.
std::vector<PlaylistSlot> subcycle_playlist(Sequence seq, int sample_index,
                                            double m, double k, double ts);

/// Subcycle length for Sequence seq at modulation index m:
/// one sixth of the fundamental period divided by samples per sector.
double subcycle_seconds(Sequence seq, double m, const DriveConfig& drive);

} // namespace svpwm
