#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stiefel/cohomology.hpp"

namespace stiefel {

/// A formal total Stiefel-Whitney class: one homogeneous class per degree
/// 1..top_degree, with w_0 = 1 and w_d = 0 above the top degree.
class CharClassSystem {
public:
    explicit CharClassSystem(StiefelRing ring);

    const StiefelRing& ring() const noexcept { return ring_; }

    const CohomologyClass& w(std::int64_t degree) const;
    void set(std::int64_t degree, CohomologyClass value);

    bool is_trivial() const noexcept;

    friend bool operator==(const CharClassSystem& a, const CharClassSystem& b) {
        return a.ring_ == b.ring_ && a.classes_ == b.classes_;
    }

private:
    StiefelRing ring_;
    std::vector<CohomologyClass> classes_;  // index = degree, [0] is the unit
};

struct WuViolation {
    std::int64_t i = 0;
    std::int64_t j = 0;
    CohomologyClass lhs;  // Sq^i(w_j)
    CohomologyClass rhs;  // Wu's formula
};

struct WuCheck {
    bool consistent = true;
    std::vector<WuViolation> violations;
};

/// Right-hand side of Wu's formula for Sq^i(w_j), 1 <= i <= j:
///   sum_{r=0}^{i} C(j-i+r-1, r) w_{i-r} w_{j+r}.
CohomologyClass wu_rhs(const CharClassSystem& system, std::int64_t i, std::int64_t j);

/// Checks Sq^i(w_j) against wu_rhs for every 1 <= i <= j <= top_degree and
/// reports every failing pair.
WuCheck is_wu_consistent(const CharClassSystem& system);

std::optional<std::int64_t> first_nonzero_degree(const CharClassSystem& system);

/// w_i = 0 for every i <= n-1 other than 2^phi(n-k-1). Needs n >= 2k.
bool satisfies_cor22(const CharClassSystem& system);

}  // namespace stiefel
