#include "fran/topology.hpp"

#include <stdexcept>
#include <string>

namespace fran {

Topology::Topology(int k, int d) : k_(k), d_(d) {
    if (k < 1) {
        throw std::invalid_argument("topology requires k >= 1 (got k=" + std::to_string(k) + ")");
    }
    if (d < 1) {
        throw std::invalid_argument("topology requires d >= 1 (got d=" + std::to_string(d) + ")");
    }
    if (d > k) {
        throw std::invalid_argument("topology requires d <= k (got d=" + std::to_string(d) +
                                    ", k=" + std::to_string(k) + ")");
    }
}

int Topology::wrap(long long index) const {
    const long long m = (index - 1) % k_;
    return static_cast<int>(m < 0 ? m + k_ + 1 : m + 1);
}

int Topology::check_index(int index, const char* what) const {
    if (index < 1 || index > k_) {
        throw std::out_of_range(std::string(what) + " index " + std::to_string(index) +
                                " outside {1, ..., " + std::to_string(k_) + "}");
    }
    return index;
}

std::vector<int> Topology::receivers(int en) const {
    check_index(en, "EN");
    std::vector<int> out;
    out.reserve(d_);
    for (int offset = 0; offset < d_; ++offset) {
        out.push_back(wrap(static_cast<long long>(en) + offset));
    }
    return out;
}

std::vector<int> Topology::transmitters(int ue) const {
    check_index(ue, "user");
    std::vector<int> out;
    out.reserve(d_);
    for (int offset = d_ - 1; offset >= 0; --offset) {
        out.push_back(wrap(static_cast<long long>(ue) - offset));
    }
    return out;
}

bool Topology::connects(int en, int ue) const {
    check_index(en, "EN");
    check_index(ue, "user");
    const int gap = (ue - en) % k_ < 0 ? (ue - en) % k_ + k_ : (ue - en) % k_;
    return gap < d_;
}

}  // namespace fran
