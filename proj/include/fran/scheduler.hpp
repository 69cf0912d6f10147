#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fran/topology.hpp"

namespace fran {

/// One EN-to-user delivery of a coded subfile. `tau` is the subfile type:
/// the type-tau subfile for user u is the one cached at EN ((u-tau) mod K)+1,
/// so type 1 comes from EN_u, type 2 from EN_{u-1}, down to type d from
/// EN_{u-d+1}.
struct Transmission {
    int en = 0;
    int user = 0;
    int file_id = 0;
    int tau = 0;
};

/// A time slot: a collision-free set of simultaneous transmissions. ENs not
/// listed are silent.
struct Slot {
    int time = 0;   // 1-based, global across stages
    int stage = 0;  // 1..ceil(d/2)
    int phase = 0;  // 1 or 2
    std::vector<Transmission> transmissions;
};

/// The full delivery schedule for one demand vector.
struct Schedule {
    Topology topology;
    std::vector<Slot> slots;
};

/// EN caching the type-`tau` coded subfile of user `user`'s demand:
/// ((user - tau) mod K) + 1. Requires 1 <= tau <= d.
int type_source(const Topology& t, int user, int tau);

/// The pair of subfile types served in stage `s`: (s, d-s+1); they always
/// sum to d+1. Requires 1 <= s <= ceil(d/2).
std::pair<int, int> stage_types(int s, int d);

/// Users still owed each of stage `s`'s two types after its Phase 1, one set
/// per transmission role. Both sets have exactly K mod (d+1) elements and
/// are what Phase 2 serves. Requires d >= 2 and K >= d+1.
std::pair<std::vector<int>, std::vector<int>> leftover_users(const Topology& t, int s);

/// Builds the blind interference-avoidance schedule.
///
/// d = 1 is a single slot in which every EN serves its own user. For d >= 2
/// (requires K >= d+1) the schedule runs ceil(d/2) stages; stage s serves
/// types s and d-s+1. Phase 1 covers the full blocks of d+1 consecutive
/// pairs over d+1 cyclically shifted slots; Phase 2 runs K mod (d+1) more
/// slots for the wrapped-around leftover pairs. At within-stage slot t the
/// block anchored at i transmits EN_i -> UE_{i+s-1} (type s) and
/// EN_{i+s} -> UE_{i+d} (type d-s+1), indices modulo K.
///
/// `demands` maps each user to its requested file id and only labels the
/// transmissions; the delivery pattern itself is demand-oblivious.
Schedule build_schedule(const Topology& t, const std::vector<int>& demands);

/// Golden-fixture dump: one line per transmission,
/// `slot=<t> stage=<s> phase=<1|2> en=<i> ue=<j> file=<f> type=<tau>`,
/// sorted by (slot, en), LF endings.
std::string dump_schedule(const Schedule& schedule);

}  // namespace fran
