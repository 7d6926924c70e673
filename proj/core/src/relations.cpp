#include "stiefel/relations.hpp"

#include <bit>

namespace stiefel {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::forced_zero:
            return "forced_zero";
        case Verdict::free_generator:
            return "free_generator";
        case Verdict::forced_product:
            return "forced_product";
    }
    return "unknown";
}

const Relation& RelationTable::at(std::int64_t degree) const {
    if (degree < 1 || degree > static_cast<std::int64_t>(relations.size())) {
        throw ParameterError("no relation for degree " + std::to_string(degree));
    }
    return relations[static_cast<std::size_t>(degree - 1)];
}

bool product_theorem_applies(int n, int k) noexcept {
    return 4 * static_cast<std::int64_t>(n) > static_cast<std::int64_t>(k) * (k + 4);
}

RelationTable derive_relations(const StiefelRing& ring, int q) {
    if (q < 0) throw ParameterError("q must be non-negative");
    if (!product_theorem_applies(ring.n(), ring.k())) {
        throw HypothesisError("product relations need n > k(k+4)/4, got n=" +
                              std::to_string(ring.n()) + " k=" + std::to_string(ring.k()));
    }
    RelationTable table{ring.n(), ring.k(), q, {}};
    const std::int64_t top = ring.top_degree();
    table.relations.reserve(static_cast<std::size_t>(top));
    // 2^q beyond 62 bits exceeds any representable top degree.
    const bool huge = q >= 62;
    const std::uint64_t unit = huge ? 0 : std::uint64_t{1} << q;

    for (std::int64_t i = 1; i <= top; ++i) {
        Relation rel{i, Verdict::forced_zero, {}};
        const auto ui = static_cast<std::uint64_t>(i);
        if (!huge && ui >= unit && ui % unit == 0) {
            if (std::has_single_bit(ui)) {
                rel.verdict = Verdict::free_generator;
            } else {
                rel.verdict = Verdict::forced_product;
                for (std::uint64_t bits = ui; bits != 0; bits &= bits - 1) {
                    rel.factors.push_back(static_cast<std::int64_t>(bits & (~bits + 1)));
                }
            }
        }
        table.relations.push_back(std::move(rel));
    }
    return table;
}

RelationCheck check_theorem2(const CharClassSystem& system, int q) {
    const StiefelRing& ring = system.ring();
    const RelationTable table = derive_relations(ring, q);
    const auto first = first_nonzero_degree(system);
    if (!first || q >= 62 || *first != (std::int64_t{1} << q)) {
        throw HypothesisError("first nonzero class is in degree " +
                              (first ? std::to_string(*first) : std::string("none")) +
                              ", not 2^" + std::to_string(q));
    }

    RelationCheck check;
    for (const Relation& rel : table.relations) {
        const CohomologyClass& actual = system.w(rel.degree);
        CohomologyClass expected;
        switch (rel.verdict) {
            case Verdict::free_generator:
                continue;
            case Verdict::forced_zero:
                break;
            case Verdict::forced_product:
                expected = CohomologyClass::unit();
                for (std::int64_t f : rel.factors) {
                    expected = multiply(ring, expected, system.w(f));
                }
                break;
        }
        if (actual != expected) {
            check.ok = false;
            check.violations.push_back({rel.degree, rel.verdict, std::move(expected), actual});
        }
    }
    return check;
}

}  // namespace stiefel
