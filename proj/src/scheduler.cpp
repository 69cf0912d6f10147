#include "fran/scheduler.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fran {

namespace {

void check_demands(const Topology& t, const std::vector<int>& demands) {
    if (static_cast<int>(demands.size()) != t.k()) {
        throw std::invalid_argument("demand vector has " + std::to_string(demands.size()) +
                                    " entries, need one per user (K=" + std::to_string(t.k()) +
                                    ")");
    }
    for (int f : demands) {
        if (f < 1) {
            throw std::invalid_argument("demanded file id " + std::to_string(f) +
                                        " must be >= 1");
        }
    }
}

Transmission make_tx(const Topology& t, long long en_raw, long long user_raw, int tau,
                     const std::vector<int>& demands) {
    Transmission tx;
    tx.en = t.wrap(en_raw);
    tx.user = t.wrap(user_raw);
    tx.tau = tau;
    tx.file_id = demands[tx.user - 1];
    return tx;
}

}  // namespace

int type_source(const Topology& t, int user, int tau) {
    if (tau < 1 || tau > t.d()) {
        throw std::out_of_range("subfile type " + std::to_string(tau) + " outside {1, ..., " +
                                std::to_string(t.d()) + "}");
    }
    return t.wrap(static_cast<long long>(user) - tau + 1);
}

std::pair<int, int> stage_types(int s, int d) {
    const int stages = (d + 1) / 2;
    if (s < 1 || s > stages) {
        throw std::out_of_range("stage " + std::to_string(s) + " outside {1, ..., " +
                                std::to_string(stages) + "}");
    }
    return {s, d - s + 1};
}

std::pair<std::vector<int>, std::vector<int>> leftover_users(const Topology& t, int s) {
    const int k = t.k();
    const int d = t.d();
    if (d < 2) {
        throw std::invalid_argument("leftover users are defined for d >= 2 (got d=" +
                                    std::to_string(d) + ")");
    }
    if (k < d + 1) {
        throw std::invalid_argument("scheduler requires K >= d+1 (got K=" + std::to_string(k) +
                                    ", d=" + std::to_string(d) + ")");
    }
    stage_types(s, d);  // range check

    const int blocks = k / (d + 1);
    // Replay Phase 1 per role and diff against all users.
    std::set<int> served_first;   // role EN_i -> UE_{i+s-1}, type s
    std::set<int> served_second;  // role EN_{i+s} -> UE_{i+d}, type d-s+1
    for (int slot = 1; slot <= d + 1; ++slot) {
        for (int b = 0; b < blocks; ++b) {
            const long long anchor = slot + static_cast<long long>(b) * (d + 1);
            served_first.insert(t.wrap(anchor + s - 1));
            served_second.insert(t.wrap(anchor + d));
        }
    }
    std::pair<std::vector<int>, std::vector<int>> missing;
    for (int u = 1; u <= k; ++u) {
        if (!served_first.count(u)) missing.first.push_back(u);
        if (!served_second.count(u)) missing.second.push_back(u);
    }
    return missing;
}

Schedule build_schedule(const Topology& t, const std::vector<int>& demands) {
    check_demands(t, demands);
    const int k = t.k();
    const int d = t.d();

    Schedule schedule{t, {}};

    if (d == 1) {
        // Receiver sets are disjoint, so every EN serves its own user at once.
        Slot slot{1, 1, 1, {}};
        for (int en = 1; en <= k; ++en) {
            slot.transmissions.push_back(make_tx(t, en, en, 1, demands));
        }
        schedule.slots.push_back(std::move(slot));
        return schedule;
    }

    if (k < d + 1) {
        throw std::invalid_argument("scheduler requires K >= d+1 for d >= 2 (got K=" +
                                    std::to_string(k) + ", d=" + std::to_string(d) + ")");
    }

    const int blocks = k / (d + 1);
    const int rem = k % (d + 1);
    const int stage_slots = (d + 1) + rem;
    const int stages = (d + 1) / 2;

    for (int s = 1; s <= stages; ++s) {
        const auto [type_a, type_b] = stage_types(s, d);
        for (int slot_in_stage = 1; slot_in_stage <= stage_slots; ++slot_in_stage) {
            Slot slot;
            slot.time = (s - 1) * stage_slots + slot_in_stage;
            slot.stage = s;
            slot.phase = slot_in_stage <= d + 1 ? 1 : 2;

            // Phase 1 visits every block; Phase 2 keeps shifting the last
            // block only, to reach the K mod (d+1) users the full blocks
            // never covered.
            std::vector<long long> anchors;
            if (slot.phase == 1) {
                for (int b = 0; b < blocks; ++b) {
                    anchors.push_back(slot_in_stage + static_cast<long long>(b) * (d + 1));
                }
            } else {
                anchors.push_back(slot_in_stage + static_cast<long long>(blocks - 1) * (d + 1));
            }
            for (const long long anchor : anchors) {
                slot.transmissions.push_back(make_tx(t, anchor, anchor + s - 1, type_a, demands));
                slot.transmissions.push_back(make_tx(t, anchor + s, anchor + d, type_b, demands));
            }
            std::sort(slot.transmissions.begin(), slot.transmissions.end(),
                      [](const Transmission& a, const Transmission& b) { return a.en < b.en; });
            schedule.slots.push_back(std::move(slot));
        }
    }
    return schedule;
}

std::string dump_schedule(const Schedule& schedule) {
    std::ostringstream out;
    for (const Slot& slot : schedule.slots) {
        std::vector<Transmission> ordered = slot.transmissions;
        std::sort(ordered.begin(), ordered.end(),
                  [](const Transmission& a, const Transmission& b) { return a.en < b.en; });
        for (const Transmission& tx : ordered) {
            out << "slot=" << slot.time << " stage=" << slot.stage << " phase=" << slot.phase
                << " en=" << tx.en << " ue=" << tx.user << " file=" << tx.file_id
                << " type=" << tx.tau << "\n";
        }
    }
    return out.str();
}

}  // namespace fran
