#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stiefel/cohomology.hpp"

namespace stiefel {

/// Sq^i(a_j) = C(j,i) a_{j+i} when j+i <= n-1 and zero otherwise.
CohomologyClass sq_gen(const StiefelRing& ring, std::int64_t i, int j);

/// Cartan expansion over compositions l_1 + ... + l_p = i. Branches where a
/// factor is killed are pruned before the product is formed; collisions
/// between factors are left to the ring's multiplication.
CohomologyClass sq(const StiefelRing& ring, std::int64_t i, Monomial x);
CohomologyClass sq(const StiefelRing& ring, std::int64_t i, const CohomologyClass& x);

struct AxiomTally {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
};

struct AxiomFailure {
    std::string axiom;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomTally> tallies;
    std::vector<AxiomFailure> failures;  // first few only

    bool ok() const noexcept;
};

// Sq^0, instability, squaring, Cartan and Adem over every basis class of the ring.
AxiomReport verify_axioms(const StiefelRing& ring, std::size_t max_failures_kept = 16);

}  // namespace stiefel
