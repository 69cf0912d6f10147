#include "fran/validator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fran/analysis.hpp"

namespace fran {

std::vector<std::string> check_wellformed(const Topology& t, const Schedule& schedule) {
    std::vector<std::string> problems;
    const int k = t.k();
    const int d = t.d();
    for (const Slot& slot : schedule.slots) {
        std::set<int> seen_ens;
        for (const Transmission& tx : slot.transmissions) {
            std::ostringstream where;
            where << "slot " << slot.time << " en " << tx.en << " ue " << tx.user << ": ";
            if (tx.en < 1 || tx.en > k || tx.user < 1 || tx.user > k) {
                problems.push_back(where.str() + "index out of range");
                continue;
            }
            if (!seen_ens.insert(tx.en).second) {
                problems.push_back(where.str() + "EN transmits twice in one slot");
            }
            if (!t.connects(tx.en, tx.user)) {
                problems.push_back(where.str() + "no edge between EN and user");
            }
            if (tx.tau < 1 || tx.tau > d) {
                problems.push_back(where.str() + "type " + std::to_string(tx.tau) +
                                   " outside {1, ..., " + std::to_string(d) + "}");
            } else if (type_source(t, tx.user, tx.tau) != tx.en) {
                problems.push_back(where.str() + "type " + std::to_string(tx.tau) +
                                   " is not cached at this EN");
            }
            if (tx.file_id < 1) {
                problems.push_back(where.str() + "bad file id");
            }
        }
    }
    return problems;
}

std::vector<CollisionViolation> check_collisions(const Topology& t, const Schedule& schedule) {
    std::vector<CollisionViolation> violations;
    for (const Slot& slot : schedule.slots) {
        for (const Transmission& tx : slot.transmissions) {
            // Multiset semantics: a duplicated EN counts once per transmission,
            // so one EN addressing two users is caught as interference too.
            std::vector<int> heard;
            for (const Transmission& other : slot.transmissions) {
                if (t.connects(other.en, tx.user)) {
                    heard.push_back(other.en);
                }
            }
            const bool clean = heard.size() == 1 && heard.front() == tx.en;
            if (!clean) {
                CollisionViolation v;
                v.slot = slot.time;
                v.user = tx.user;
                for (int en : heard) {
                    if (en != tx.en || std::count(heard.begin(), heard.end(), en) > 1) {
                        v.interferers.push_back(en);
                    }
                }
                std::sort(v.interferers.begin(), v.interferers.end());
                v.interferers.erase(std::unique(v.interferers.begin(), v.interferers.end()),
                                    v.interferers.end());
                violations.push_back(std::move(v));
            }
        }
    }
    return violations;
}

std::vector<CompletenessIssue> check_completeness(const Topology& t, const Schedule& schedule) {
    const int k = t.k();
    const int d = t.d();
    std::vector<std::set<int>> received(k + 1);
    for (const Slot& slot : schedule.slots) {
        for (const Transmission& tx : slot.transmissions) {
            received[tx.user].insert(tx.tau);
        }
    }
    std::vector<CompletenessIssue> issues;
    for (int u = 1; u <= k; ++u) {
        CompletenessIssue issue;
        issue.user = u;
        for (int tau = 1; tau <= d; ++tau) {
            if (!received[u].count(tau)) {
                issue.missing_types.push_back(tau);
            }
        }
        if (!issue.missing_types.empty()) {
            issues.push_back(std::move(issue));
        }
    }
    return issues;
}

DeliveryOutcome simulate_delivery(const Topology& t, const PlacementScheme& scheme,
                                  const Library& lib, const std::vector<int>& demands,
                                  const Schedule& schedule) {
    const int k = t.k();
    const int d = t.d();
    const CacheContents caches = encode(scheme, lib);

    // Collect, per user, which ENs delivered a coded subfile of its demand.
    std::vector<std::set<int>> sources(k + 1);
    for (const Slot& slot : schedule.slots) {
        for (const Transmission& tx : slot.transmissions) {
            if (tx.file_id == demands[tx.user - 1]) {
                sources[tx.user].insert(tx.en);
            }
        }
    }

    DeliveryOutcome outcome;
    outcome.decoded.resize(k);
    for (int u = 1; u <= k; ++u) {
        const int want = demands[u - 1];
        if (static_cast<int>(sources[u].size()) < d) {
            outcome.first_failed_user = u;
            return outcome;
        }
        std::vector<CodedSubfile> parts;
        for (int en : sources[u]) {
            parts.push_back(caches.at(en, want));
            if (static_cast<int>(parts.size()) == d) break;
        }
        outcome.decoded[u - 1] = decode(scheme, want, parts);
        if (outcome.decoded[u - 1] != lib.file(want)) {
            outcome.first_failed_user = u;
            return outcome;
        }
    }
    outcome.ok = true;
    return outcome;
}

NdtReport measure(const Topology& t, const Schedule& schedule) {
    NdtReport report;
    report.slots = static_cast<long long>(schedule.slots.size());
    for (const Slot& slot : schedule.slots) {
        report.deliveries += static_cast<long long>(slot.transmissions.size());
    }
    report.sum_dof = Rational(report.deliveries, report.slots);
    // One slot moves one coded subfile of F/d bits at the interference-free
    // rate, so S slots take S/d file-normalized time units.
    report.ndt_exact = Rational(report.slots, t.d());
    report.ndt_bound = analysis::prop1_bound(t.d());
    return report;
}

std::string render_report_line(const NdtReport& report) {
    std::ostringstream out;
    out << "ndt=" << report.ndt_exact.str() << " dof=" << report.sum_dof.str()
        << " slots=" << report.slots << " deliveries=" << report.deliveries;
    return out.str();
}

std::string render_violation_line(const CollisionViolation& violation) {
    std::ostringstream out;
    out << "violation slot=" << violation.slot << " ue=" << violation.user << " ens=";
    for (std::size_t i = 0; i < violation.interferers.size(); ++i) {
        out << (i ? "," : "") << violation.interferers[i];
    }
    return out.str();
}

}  // namespace fran
