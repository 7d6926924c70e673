#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "stiefel/enumerate.hpp"
#include "stiefel/relations.hpp"
#include "stiefel/steenrod.hpp"

using namespace stiefel;

namespace {

CohomologyClass gen(const StiefelRing& ring, int i) { return CohomologyClass(ring.generator(i)); }

CohomologyClass mono(const StiefelRing& ring, std::vector<int> indices) {
    return CohomologyClass(ring.from_indices(indices));
}

// Every raw assignment of the ring, degree 1 most significant.
std::vector<CharClassSystem> all_systems(const StiefelRing& ring) {
    std::vector<std::int64_t> degrees;
    std::vector<std::size_t> dims;
    std::size_t bits = 0;
    for (std::int64_t d = 1; d <= ring.top_degree(); ++d) {
        if (ring.dimension(d) == 0) continue;
        degrees.push_back(d);
        dims.push_back(ring.dimension(d));
        bits += ring.dimension(d);
    }
    std::vector<CharClassSystem> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        CharClassSystem s(ring);
        std::size_t shift = bits;
        for (std::size_t t = 0; t < degrees.size(); ++t) {
            shift -= dims[t];
            const std::uint64_t value = (code >> shift) & ((std::uint64_t{1} << dims[t]) - 1);
            CohomologyClass c;
            for (std::size_t b = 0; b < dims[t]; ++b) {
                if ((value >> b) & 1U) c.toggle(basis(ring, degrees[t])[b]);
            }
            s.set(degrees[t], c);
        }
        out.push_back(std::move(s));
    }
    return out;
}

// Wu's formula evaluated with a Pascal table, independent of wu_rhs.
bool wu_oracle(const CharClassSystem& s, const oracle::PascalMod2& pascal) {
    const StiefelRing& ring = s.ring();
    const auto top = ring.top_degree();
    for (std::int64_t j = 1; j <= top; ++j) {
        for (std::int64_t i = 1; i <= j; ++i) {
            CohomologyClass rhs;
            for (std::int64_t r = 0; r <= i; ++r) {
                const bool odd = (j - i + r - 1 < 0) ? r == 0
                                                     : pascal.odd(static_cast<int>(j - i + r - 1),
                                                                  static_cast<int>(r));
                if (odd) rhs += multiply(ring, s.w(i - r), s.w(j + r));
            }
            if (sq(ring, i, s.w(j)) != rhs) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("CharClassSystem basics") {
    const auto r = make_ring(7, 3);
    CharClassSystem s(r);
    CHECK(s.is_trivial());
    CHECK(s.w(0) == CohomologyClass::unit());
    CHECK(s.w(100).is_zero());
    s.set(4, gen(r, 4));
    CHECK_FALSE(s.is_trivial());
    CHECK_THROWS_AS(s.set(5, gen(r, 4)), ParameterError);
    CHECK_THROWS_AS(s.set(0, CohomologyClass::unit()), ParameterError);
    CHECK_THROWS_AS(s.set(16, CohomologyClass{}), ParameterError);
    CHECK_THROWS_AS(s.w(-1), ParameterError);
}

TEST_CASE("first_nonzero_degree") {
    CHECK_FALSE(first_nonzero_degree(CharClassSystem(make_ring(7, 3))).has_value());
    CharClassSystem s(make_ring(7, 3));
    s.set(4, gen(s.ring(), 4));
    CHECK(first_nonzero_degree(s) == 4);
    CharClassSystem t(make_ring(5, 3));
    t.set(2, gen(t.ring(), 2));
    t.set(4, gen(t.ring(), 4));
    CHECK(first_nonzero_degree(t) == 2);
}

TEST_CASE("wu_rhs selects the odd binomial weights") {
    // Generators a1..a8; w4 w8 + w12 survive, w3 w9, w2 w10, w1 w11 carry even weights.
    const auto r = make_ring(9, 8);
    CharClassSystem s(r);
    for (int d = 1; d <= 8; ++d) s.set(d, gen(r, d));
    s.set(9, mono(r, {1, 8}));
    s.set(10, mono(r, {2, 8}));
    s.set(11, mono(r, {3, 8}));
    s.set(12, mono(r, {5, 7}));
    CHECK_FALSE(multiply(r, s.w(3), s.w(9)).is_zero());
    CHECK_FALSE(multiply(r, s.w(2), s.w(10)).is_zero());
    CHECK(wu_rhs(s, 4, 8) == mono(r, {4, 8}) + mono(r, {5, 7}));
    CHECK(wu_rhs(s, 4, 8) == multiply(r, s.w(4), s.w(8)) + s.w(12));
}

TEST_CASE("wu_rhs on the diagonal is the square") {
    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 3}, {5, 3}}) {
        for (const auto& s : all_systems(make_ring(n, k))) {
            for (std::int64_t i = 1; i <= s.ring().top_degree(); ++i) {
                CHECK(wu_rhs(s, i, i) == multiply(s.ring(), s.w(i), s.w(i)));
            }
        }
    }
}

TEST_CASE("wu_rhs on the trivial system and bad arguments") {
    const CharClassSystem s(make_ring(7, 3));
    for (std::int64_t j = 1; j <= 15; ++j) {
        for (std::int64_t i = 1; i <= j; ++i) CHECK(wu_rhs(s, i, j).is_zero());
    }
    CHECK_THROWS_AS(wu_rhs(s, 3, 2), ParameterError);
    CHECK_THROWS_AS(wu_rhs(s, 0, 2), ParameterError);
}

TEST_CASE("is_wu_consistent examples") {
    CHECK(is_wu_consistent(CharClassSystem(make_ring(7, 3))).consistent);
    // On a sphere, w_{n-1} survives Wu's formula only in degree 2^q.
    const oracle::PascalMod2 pascal(64);
    for (int n = 2; n <= 18; ++n) {
        const auto r = make_ring(n, 1);
        CharClassSystem s(r);
        CHECK(is_wu_consistent(s).consistent);
        s.set(n - 1, gen(r, n - 1));
        CHECK(is_wu_consistent(s).consistent == wu_oracle(s, pascal));
        CHECK(wu_oracle(s, pascal) == std::has_single_bit(static_cast<unsigned>(n - 1)));
    }
    const auto r = make_ring(5, 2);
    CharClassSystem s(r);
    s.set(3, gen(r, 3));
    const WuCheck check = is_wu_consistent(s);
    CHECK_FALSE(check.consistent);
    auto it = std::find_if(check.violations.begin(), check.violations.end(),
                           [](const WuViolation& v) { return v.i == 1 && v.j == 3; });
    REQUIRE(it != check.violations.end());
    CHECK(it->lhs == gen(r, 4));
    CHECK(it->rhs.is_zero());
}

TEST_CASE("enumeration examples") {
    EnumerateOptions wu;
    wu.require_wu = true;
    for (int n = 2; n <= 18; ++n) {
        const std::uint64_t expected = std::has_single_bit(static_cast<unsigned>(n - 1)) ? 2 : 1;
        CHECK(enumerate_systems(make_ring(n, 1), wu, [](const CharClassSystem&) {}) == expected);
    }
    EnumerateOptions first1 = wu;
    first1.first_nonzero = 1;
    for (auto [n, k] : {std::pair{4, 2}, {7, 3}, {9, 4}}) {
        CHECK(enumerate_systems(make_ring(n, k), first1, [](const CharClassSystem&) {}) == 0);
    }
    // Brute force over the 2^3 raw assignments of V_2(R^4): trivial and w2 = a2.
    const auto r42 = make_ring(4, 2);
    const oracle::PascalMod2 pascal(64);
    int oracle_count = 0;
    for (const auto& s : all_systems(r42)) oracle_count += wu_oracle(s, pascal);
    CHECK(oracle_count == 2);
    const auto got = collect_systems(r42, wu);
    REQUIRE(got.size() == 2);
    CHECK(got[0].is_trivial());
    CHECK(got[1].w(2) == gen(r42, 2));
}

TEST_CASE("pruned enumeration equals the filtered brute-force set") {
    const oracle::PascalMod2 pascal(64);
    for (int k = 1; k <= 3; ++k) {
        for (int n = k + 1; n <= 8; ++n) {
            const auto r = make_ring(n, k);
            const auto raw = all_systems(r);
            for (bool cor22 : {false, true}) {
                if (cor22 && n < 2 * k) continue;
                EnumerateOptions opts;
                opts.require_wu = true;
                opts.require_cor22 = cor22;
                std::vector<CharClassSystem> expected;
                for (const auto& s : raw) {
                    if (!wu_oracle(s, pascal)) continue;
                    if (cor22 && !satisfies_cor22(s)) continue;
                    expected.push_back(s);
                }
                CHECK(collect_systems(r, opts) == expected);
                opts.prune = false;
                CHECK(collect_systems(r, opts) == expected);
            }
            EnumerateOptions none;
            CHECK(collect_systems(r, none) == raw);
        }
    }
}

TEST_CASE("first_nonzero filter") {
    const auto r = make_ring(6, 3);
    EnumerateOptions opts;
    opts.first_nonzero = 4;
    const auto systems = collect_systems(r, opts);
    CHECK_FALSE(systems.empty());
    for (const auto& s : systems) CHECK(first_nonzero_degree(s) == 4);
    opts.prune = false;
    CHECK(collect_systems(r, opts) == systems);
    opts.first_nonzero = 0;
    CHECK_THROWS_AS(collect_systems(r, opts), ParameterError);
}

TEST_CASE("parallel enumeration returns the sequential result") {
    for (auto [n, k] : {std::pair{6, 3}, {9, 4}, {8, 4}}) {
        const auto r = make_ring(n, k);
        for (bool wu : {false, true}) {
            EnumerateOptions opts;
            opts.require_wu = wu;
            CHECK(collect_systems(r, opts, 4) == collect_systems(r, opts, 1));
        }
    }
}

TEST_CASE("enumeration guards") {
    const auto big = make_ring(9, 5);
    CHECK(state_space_size(big) == BigInt(1) << 31);
    EnumerateOptions opts;
    try {
        enumerate_systems(big, opts, [](const CharClassSystem&) {});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.state_space() == BigInt(1) << 31);
    }
    opts.require_cor22 = true;
    CHECK_THROWS_AS(enumerate_systems(make_ring(5, 3), opts, [](const CharClassSystem&) {}),
                    HypothesisError);
}

TEST_CASE("first nonzero class of a Wu-consistent system sits in a power-of-two degree") {
    EnumerateOptions opts;
    opts.require_wu = true;
    for (int k = 1; k <= 3; ++k) {
        for (int n = k + 1; n <= 9; ++n) {
            enumerate_systems(make_ring(n, k), opts, [](const CharClassSystem& s) {
                if (auto d = first_nonzero_degree(s)) {
                    CHECK(std::has_single_bit(static_cast<std::uint64_t>(*d)));
                }
            });
        }
    }
}

TEST_CASE("derive_relations examples") {
    const auto r = make_ring(7, 3);
    const RelationTable t = derive_relations(r, 2);
    REQUIRE(t.relations.size() == 15);
    CHECK(t.at(4).verdict == Verdict::free_generator);
    CHECK(t.at(8).verdict == Verdict::free_generator);
    CHECK(t.at(12).verdict == Verdict::forced_product);
    CHECK(t.at(12).factors == std::vector<std::int64_t>{4, 8});
    for (int d : {1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15}) {
        CHECK(t.at(d).verdict == Verdict::forced_zero);
    }
    for (const auto& rel : derive_relations(r, 5).relations) CHECK(rel.verdict == Verdict::forced_zero);
    for (const auto& rel : derive_relations(r, 70).relations) CHECK(rel.verdict == Verdict::forced_zero);

    const RelationTable q0 = derive_relations(make_ring(9, 4), 0);
    CHECK(q0.at(1).verdict == Verdict::free_generator);
    CHECK(q0.at(7).factors == std::vector<std::int64_t>{1, 2, 4});
    CHECK(q0.at(26).factors == std::vector<std::int64_t>{2, 8, 16});

    CHECK_THROWS_AS(derive_relations(make_ring(5, 3), 1), HypothesisError);
    CHECK_THROWS_AS(derive_relations(r, -1), ParameterError);
}

TEST_CASE("derive_relations invariants and determinism") {
    for (int k = 1; k <= 6; ++k) {
        for (int n = k + 1; n <= 20; ++n) {
            if (!product_theorem_applies(n, k)) {
                CHECK_THROWS_AS(derive_relations(make_ring(n, k), 0), HypothesisError);
                continue;
            }
            const auto r = make_ring(n, k);
            for (int q = 0; q <= 7; ++q) {
                const RelationTable t = derive_relations(r, q);
                const std::int64_t unit = std::int64_t{1} << q;
                for (const auto& rel : t.relations) {
                    if (rel.degree < unit || rel.degree % unit != 0) {
                        CHECK(rel.verdict == Verdict::forced_zero);
                    } else if (std::has_single_bit(static_cast<std::uint64_t>(rel.degree))) {
                        CHECK(rel.verdict == Verdict::free_generator);
                    } else {
                        REQUIRE(rel.verdict == Verdict::forced_product);
                        std::int64_t sum = 0;
                        for (std::size_t f = 0; f < rel.factors.size(); ++f) {
                            CHECK(rel.factors[f] >= unit);
                            CHECK(std::has_single_bit(static_cast<std::uint64_t>(rel.factors[f])));
                            if (f > 0) CHECK(rel.factors[f] > rel.factors[f - 1]);
                            sum += rel.factors[f];
                        }
                        CHECK(sum == rel.degree);
                    }
                }
                const RelationTable again = derive_relations(r, q);
                CHECK(again.relations.size() == t.relations.size());
                for (std::size_t i = 0; i < t.relations.size(); ++i) {
                    CHECK(again.relations[i].verdict == t.relations[i].verdict);
                    CHECK(again.relations[i].factors == t.relations[i].factors);
                }
            }
        }
    }
}

TEST_CASE("check_theorem2") {
    SUBCASE("single generator class") {
        const auto r = make_ring(7, 3);
        CharClassSystem s(r);
        s.set(4, gen(r, 4));
        const RelationCheck c = check_theorem2(s, 2);
        CHECK(c.ok);
        CHECK(c.violations.empty());
    }
    SUBCASE("forced product holds") {
        // V_3(R^6): w4 = a4, w8 = a3a5, w12 = a3a4a5 = w4 w8
        const auto r = make_ring(6, 3);
        CharClassSystem s(r);
        s.set(4, gen(r, 4));
        s.set(8, mono(r, {3, 5}));
        s.set(12, mono(r, {3, 4, 5}));
        CHECK(check_theorem2(s, 2).ok);
    }
    SUBCASE("hand-built violations") {
        const auto r = make_ring(6, 3);
        CharClassSystem s(r);
        s.set(4, gen(r, 4));
        s.set(12, mono(r, {3, 4, 5}));
        RelationCheck c = check_theorem2(s, 2);
        CHECK_FALSE(c.ok);
        REQUIRE(c.violations.size() == 1);
        CHECK(c.violations[0].degree == 12);
        CHECK(c.violations[0].expected.is_zero());

        s.set(12, CohomologyClass{});
        s.set(7, mono(r, {3, 4}));
        c = check_theorem2(s, 2);
        CHECK_FALSE(c.ok);
        REQUIRE(c.violations.size() == 1);
        CHECK(c.violations[0].degree == 7);
        CHECK(c.violations[0].verdict == Verdict::forced_zero);
    }
    SUBCASE("hypothesis errors") {
        const auto r = make_ring(7, 3);
        CharClassSystem s(r);
        CHECK_THROWS_AS(check_theorem2(s, 2), HypothesisError);
        s.set(4, gen(r, 4));
        CHECK_THROWS_AS(check_theorem2(s, 1), HypothesisError);
        CharClassSystem t(make_ring(5, 3));
        t.set(2, gen(t.ring(), 2));
        CHECK_THROWS_AS(check_theorem2(t, 1), HypothesisError);
    }
}
