#include "tdfc/emulator.hpp"

#include "tdfc/errors.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace tdfc {

std::vector<BlockConfig> default_block_configs(const Schedule& s) {
    std::vector<BlockConfig> out;
    out.reserve(s.blocks.size());
    for (std::size_t k = 0; k < s.blocks.size(); ++k) {
        out.push_back({s.blocks[k].delay,
                       k % 2 == 0 ? Chirality::ScatterRight : Chirality::ScatterLeft});
    }
    return out;
}

std::vector<TimelineEvent> emulate(const Schedule& s,
                                   const std::vector<BlockConfig>& blocks) {
    if (blocks.size() != s.blocks.size()) {
        throw DelayMismatch("hardware has " + std::to_string(blocks.size()) +
                            " blocks, schedule needs " +
                            std::to_string(s.blocks.size()));
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].delay != s.blocks[k].delay) {
            throw DelayMismatch("block " + std::to_string(k + 1) + " delay " +
                                std::to_string(blocks[k].delay) +
                                " != schedule delay " +
                                std::to_string(s.blocks[k].delay));
        }
    }
    for (const auto& b : s.blocks) {
        for (int i : b.enabled_gates) {
            if (!s.excitation_set.count(i) || !s.excitation_set.count(i + b.delay)) {
                throw MaskViolation("gate mask at slot " + std::to_string(i) +
                                    " (delay " + std::to_string(b.delay) +
                                    ") references a vacuum slot");
            }
        }
    }
    for (int i : s.native_chain_gates) {
        if (!s.excitation_set.count(i) || !s.excitation_set.count(i + 1)) {
            throw MaskViolation("native gate at slot " + std::to_string(i) +
                                " references a vacuum slot");
        }
    }
    s.validate();

    std::vector<TimelineEvent> events;
    const int num_blocks = static_cast<int>(s.blocks.size());
    for (int i : s.excitation_set) {
        events.push_back({i, EventKind::Emit, i, 0, 0, 0});
        for (int k = 1; k <= num_blocks; ++k) {
            const int delay = s.blocks[static_cast<std::size_t>(k - 1)].delay;
            events.push_back({i + delay, EventKind::Return, i, 0, k, 0});
            // Photons cross a circulator between consecutive blocks only;
            // the first block shares the emitter, so no crossing before it.
            if (k < num_blocks) {
                events.push_back({i + delay, EventKind::HandOff, i, 0, k, k + 1});
            }
        }
    }
    for (int i : s.native_chain_gates) {
        events.push_back({i + 1, EventKind::Gate, i, i + 1, 0, 0});
    }
    for (int k = 1; k <= num_blocks; ++k) {
        const auto& b = s.blocks[static_cast<std::size_t>(k - 1)];
        for (int i : b.enabled_gates) {
            events.push_back({i + b.delay, EventKind::Gate, i, i + b.delay, k, 0});
        }
    }

    std::sort(events.begin(), events.end(),
              [](const TimelineEvent& a, const TimelineEvent& b) {
                  return std::tie(a.time, a.kind, a.block, a.slot) <
                         std::tie(b.time, b.kind, b.block, b.slot);
              });
    return events;
}

std::vector<std::pair<int, int>> gate_sequence(
    const std::vector<TimelineEvent>& events) {
    std::vector<std::pair<int, int>> gates;
    for (const auto& e : events) {
        if (e.kind == EventKind::Gate) gates.emplace_back(e.slot, e.slot2);
    }
    return gates;
}

std::string trace_format(const std::vector<TimelineEvent>& events) {
    std::ostringstream os;
    for (const auto& e : events) {
        os << "t=" << e.time << " kind=";
        switch (e.kind) {
            case EventKind::Return:
                os << "Return args=slot=" << e.slot << ",block=" << e.block;
                break;
            case EventKind::Gate:
                os << "Gate args=i=" << e.slot << ",j=" << e.slot2
                   << ",block=" << e.block;
                break;
            case EventKind::Emit:
                os << "Emit args=slot=" << e.slot;
                break;
            case EventKind::HandOff:
                os << "HandOff args=slot=" << e.slot << ",from=" << e.block
                   << ",to=" << e.to_block;
                break;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace tdfc
