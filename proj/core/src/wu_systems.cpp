#include "stiefel/wu_systems.hpp"

#include <algorithm>

#include "stiefel/parity.hpp"
#include "stiefel/steenrod.hpp"
#include "stiefel/stunted.hpp"

namespace stiefel {

namespace {
const CohomologyClass kZero{};
}

CharClassSystem::CharClassSystem(StiefelRing ring) : ring_(std::move(ring)) {
    classes_.resize(static_cast<std::size_t>(ring_.top_degree() + 1));
    classes_[0] = CohomologyClass::unit();
}

const CohomologyClass& CharClassSystem::w(std::int64_t degree) const {
    if (degree < 0) throw ParameterError("negative Stiefel-Whitney degree");
    if (degree > ring_.top_degree()) return kZero;
    return classes_[static_cast<std::size_t>(degree)];
}

void CharClassSystem::set(std::int64_t degree, CohomologyClass value) {
    if (degree < 1 || degree > ring_.top_degree()) {
        throw ParameterError("w_" + std::to_string(degree) + " is outside [1," +
                             std::to_string(ring_.top_degree()) + "]");
    }
    if (!ring_.is_homogeneous(value, degree)) {
        throw ParameterError("w_" + std::to_string(degree) + " = " + format(ring_, value) +
                             " is not homogeneous of degree " + std::to_string(degree));
    }
    classes_[static_cast<std::size_t>(degree)] = std::move(value);
}

bool CharClassSystem::is_trivial() const noexcept {
    return std::all_of(classes_.begin() + 1, classes_.end(),
                       [](const CohomologyClass& c) { return c.is_zero(); });
}

CohomologyClass wu_rhs(const CharClassSystem& system, std::int64_t i, std::int64_t j) {
    if (i < 1 || i > j) {
        throw ParameterError("Wu's formula is used for 1 <= i <= j, got i=" + std::to_string(i) +
                             " j=" + std::to_string(j));
    }
    const StiefelRing& ring = system.ring();
    CohomologyClass out;
    for (std::int64_t r = 0; r <= i; ++r) {
        if (!is_odd(binom_parity(j - i + r - 1, r))) continue;
        const CohomologyClass& low = system.w(i - r);
        const CohomologyClass& high = system.w(j + r);
        if (low.is_zero() || high.is_zero()) continue;
        out += multiply(ring, low, high);
    }
    return out;
}

WuCheck is_wu_consistent(const CharClassSystem& system) {
    WuCheck check;
    const std::int64_t top = system.ring().top_degree();
    for (std::int64_t j = 1; j <= top; ++j) {
        for (std::int64_t i = 1; i <= j; ++i) {
            CohomologyClass lhs = sq(system.ring(), i, system.w(j));
            CohomologyClass rhs = wu_rhs(system, i, j);
            if (lhs != rhs) {
                check.consistent = false;
                check.violations.push_back({i, j, std::move(lhs), std::move(rhs)});
            }
        }
    }
    return check;
}

std::optional<std::int64_t> first_nonzero_degree(const CharClassSystem& system) {
    const std::int64_t top = system.ring().top_degree();
    for (std::int64_t d = 1; d <= top; ++d) {
        if (!system.w(d).is_zero()) return d;
    }
    return std::nullopt;
}

bool satisfies_cor22(const CharClassSystem& system) {
    const StiefelRing& ring = system.ring();
    const AdmissibleSet allowed =
        admissible_degrees(ring.n(), ring.k(), AdmissibleMode::corollary22);
    const std::int64_t hi = std::min<std::int64_t>(allowed.range_hi, ring.top_degree());
    for (std::int64_t d = 1; d <= hi; ++d) {
        if (!allowed.contains(d) && !system.w(d).is_zero()) return false;
    }
    return true;
}

}  // namespace stiefel
