#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fran/placement.hpp"
#include "fran/rational.hpp"
#include "fran/scheduler.hpp"
#include "fran/topology.hpp"

namespace fran {

/// A user that cannot decode its slot: some EN other than (or in addition
/// to) the intended one was active inside its transmitter set.
struct CollisionViolation {
    int slot = 0;
    int user = 0;
    std::vector<int> interferers;
};

/// A user still missing subfile types at the end of the schedule.
struct CompletenessIssue {
    int user = 0;
    std::vector<int> missing_types;
};

/// Slot, delivery, DoF and NDT accounting for a validated schedule.
struct NdtReport {
    long long slots = 0;
    long long deliveries = 0;
    Rational sum_dof;    // deliveries / slots
    Rational ndt_exact;  // slots / d: one interference-free subfile of F/d bits per slot
    Rational ndt_bound;  // the worst-case closed-form bound for this d
};

/// Structural sanity of a schedule against its topology: every transmission
/// uses a real edge, carries the type implied by its (en, user) pair, and no
/// EN transmits twice in one slot. Returns human-readable problems.
std::vector<std::string> check_wellformed(const Topology& t, const Schedule& schedule);

/// Deterministic collision model: user j decodes a slot iff exactly one of
/// its connected ENs is active and that EN addresses j. Returns all
/// violations; an empty result means every intended delivery succeeds.
std::vector<CollisionViolation> check_collisions(const Topology& t, const Schedule& schedule);

/// Per-user distinct received types must be exactly {1, ..., d}. Assumes the
/// collision check passed (every intended delivery is heard).
std::vector<CompletenessIssue> check_completeness(const Topology& t, const Schedule& schedule);

/// Outcome of an end-to-end delivery simulation.
struct DeliveryOutcome {
    bool ok = false;
    int first_failed_user = 0;  // 0 when ok
    std::vector<std::vector<std::uint8_t>> decoded;  // per user, 1-based -> index 0..K-1
};

/// Runs the full pipeline on real payloads: every user collects the coded
/// subfiles addressed to it across the schedule and decodes its demanded
/// file; the result must match the library bit-exactly.
DeliveryOutcome simulate_delivery(const Topology& t, const PlacementScheme& scheme,
                                  const Library& lib, const std::vector<int>& demands,
                                  const Schedule& schedule);

/// Counts slots and deliveries and derives exact rational DoF and NDT.
NdtReport measure(const Topology& t, const Schedule& schedule);

/// `ndt=<n>[/<d>] dof=<n>[/<d>] slots=<S> deliveries=<D>`
std::string render_report_line(const NdtReport& report);

/// `violation slot=<t> ue=<j> ens=<i1,i2,...>`
std::string render_violation_line(const CollisionViolation& violation);

}  // namespace fran
