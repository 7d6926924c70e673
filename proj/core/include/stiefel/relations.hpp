#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "stiefel/wu_systems.hpp"

namespace stiefel {

enum class Verdict { forced_zero, free_generator, forced_product };

std::string_view to_string(Verdict v) noexcept;

struct Relation {
    std::int64_t degree = 0;
    Verdict verdict = Verdict::forced_zero;
    // forced_product: the powers of two 2^{q+t_1} < ... < 2^{q+t_m} summing to degree
    std::vector<std::int64_t> factors;
};

struct RelationTable {
    int n = 0;
    int k = 0;
    int q = 0;
    std::vector<Relation> relations;  // degrees 1..top in order

    const Relation& at(std::int64_t degree) const;
};

// n > k(k+4)/4, compared exactly as 4n > k(k+4).
bool product_theorem_applies(int n, int k) noexcept;

/// Per-degree verdicts for a system whose first nonzero class sits in
/// degree 2^q. Throws HypothesisError when n <= k(k+4)/4.
RelationTable derive_relations(const StiefelRing& ring, int q);

struct RelationViolation {
    std::int64_t degree = 0;
    Verdict verdict = Verdict::forced_zero;
    CohomologyClass expected;
    CohomologyClass actual;
};

struct RelationCheck {
    bool ok = true;
    std::vector<RelationViolation> violations;
};

/// Compares a system against derive_relations(ring, q). Forced products
/// are evaluated with the ring multiplication. Throws HypothesisError when
/// the ring fails the hypothesis or the first nonzero degree is not 2^q.
RelationCheck check_theorem2(const CharClassSystem& system, int q);

}  // namespace stiefel
