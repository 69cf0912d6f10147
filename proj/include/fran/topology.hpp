#pragma once

#include <vector>

namespace fran {

/// A (K,d) regular partially connected edge network: K edge-node/user pairs
/// arranged on a cycle, where EN i reaches users {i, i+1, ..., i+d-1} and
/// user j hears ENs {j-d+1, ..., j}, all indices wrapping modulo K.
///
/// Indices are 1-based on every interface. Immutable after construction.
class Topology {
public:
    /// Requires 1 <= d <= k; throws std::invalid_argument naming the
    /// violated bound otherwise.
    Topology(int k, int d);

    int k() const { return k_; }
    int d() const { return d_; }

    /// Normalizes any (possibly negative) 1-based index into {1, ..., K}.
    int wrap(long long index) const;

    /// Users reached by EN `en`, in cyclic order starting at `en`.
    std::vector<int> receivers(int en) const;

    /// ENs heard by user `ue`, in cyclic order ending at `ue`.
    std::vector<int> transmitters(int ue) const;

    /// True iff user `ue` is in receivers(en).
    bool connects(int en, int ue) const;

    bool operator==(const Topology& o) const { return k_ == o.k_ && d_ == o.d_; }

private:
    int check_index(int index, const char* what) const;

    int k_;
    int d_;
};

}  // namespace fran
