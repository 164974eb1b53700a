#include "tdfc/schedule.hpp"

#include "tdfc/errors.hpp"

#include <string>

namespace tdfc {

void Schedule::validate() const {
    auto check_excited = [&](int slot, const std::string& what) {
        if (slot < 1 || slot > n_slots) {
            throw IndexOutOfRange(what + " slot " + std::to_string(slot) +
                                  " outside [1, " + std::to_string(n_slots) + "]");
        }
        if (!excitation_set.count(slot)) {
            throw InvalidSpec(what + " endpoint " + std::to_string(slot) +
                              " is not excited");
        }
    };

    for (int s : excitation_set) {
        if (s < 1 || s > n_slots) {
            throw IndexOutOfRange("excitation slot " + std::to_string(s) +
                                  " outside [1, " + std::to_string(n_slots) + "]");
        }
    }
    for (int i : native_chain_gates) {
        check_excited(i, "native gate");
        check_excited(i + 1, "native gate");
    }
    std::set<int> delays;
    for (const auto& b : blocks) {
        if (b.delay < 1) throw InvalidSpec("block delay must be >= 1");
        if (!delays.insert(b.delay).second) {
            throw InvalidSpec("duplicate block delay " + std::to_string(b.delay));
        }
        for (int i : b.enabled_gates) {
            check_excited(i, "block gate");
            check_excited(i + b.delay, "block gate");
        }
    }
}

std::set<int> Schedule::delay_classes_used() const {
    std::set<int> classes;
    if (!native_chain_gates.empty()) classes.insert(1);
    for (const auto& b : blocks) {
        if (!b.enabled_gates.empty()) classes.insert(b.delay);
    }
    return classes;
}

std::vector<std::pair<int, int>> Schedule::all_gates() const {
    std::vector<std::pair<int, int>> gates;
    for (int i : native_chain_gates) gates.emplace_back(i, i + 1);
    for (const auto& b : blocks) {
        for (int i : b.enabled_gates) gates.emplace_back(i, i + b.delay);
    }
    return gates;
}

}  // namespace tdfc
