#pragma once

#include "tdfc/schedule.hpp"

#include <string>
#include <vector>

namespace tdfc {

/// Which propagation direction picks up the pi-phase at this block's
/// emitter. Both variants implement the same CZ; the field is kept for
/// trace fidelity only.
enum class Chirality { ScatterLeft, ScatterRight };

/// Hardware description of one TDF stage.
struct BlockConfig {
    int delay = 1;  ///< round trip in units of the emission period
    Chirality chirality = Chirality::ScatterRight;
};

/// One config per schedule block; chirality alternates from block to block
/// (each circulator crossing flips the drive polarization).
std::vector<BlockConfig> default_block_configs(const Schedule& s);

/// Event kinds in their sub-period order: a photon returning at nominal
/// time t scatters (Gate) just before the emission due at t, and only then
/// hands off to the next block.
enum class EventKind { Return = 0, Gate = 1, Emit = 2, HandOff = 3 };

struct TimelineEvent {
    long long time = 0;  ///< integer multiple of the emission period
    EventKind kind = EventKind::Emit;
    int slot = 0;       ///< photon slot (Gate: the earlier photon i)
    int slot2 = 0;      ///< Gate only: the later photon i+delay
    int block = 0;      ///< 0 = native emitter stage, 1..B = TDF blocks
    int to_block = 0;   ///< HandOff only

    friend bool operator==(const TimelineEvent&, const TimelineEvent&) = default;
};

/// Discrete timeline of the whole run: Emit(i) at t=i for excited slots,
/// Return(i,k) at t=i+delay_k ordered before the coincident emission,
/// Gate events for enabled masks, HandOff once per photon per circulator
/// crossing. Throws MaskViolation when a mask references a vacuum slot and
/// DelayMismatch when the hardware list disagrees with the schedule.
std::vector<TimelineEvent> emulate(const Schedule& s,
                                   const std::vector<BlockConfig>& blocks);

/// Gate events in time order, as (i, j) slot pairs.
std::vector<std::pair<int, int>> gate_sequence(const std::vector<TimelineEvent>& events);

/// Line-oriented stable trace, one event per line.
std::string trace_format(const std::vector<TimelineEvent>& events);

}  // namespace tdfc
