#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stiefel/errors.hpp"

namespace stiefel {

/// Square-free product of generators, stored as a bit set relative to the
/// lowest generator a_{n-k}: bit t stands for a_{n-k+t}. The empty set is
/// the unit. A Monomial only has meaning together with its StiefelRing.
struct Monomial {
    std::uint64_t bits = 0;

    constexpr bool is_unit() const noexcept { return bits == 0; }
    int length() const noexcept;

    friend constexpr bool operator==(Monomial, Monomial) noexcept = default;
};

// Lexicographic order on ascending index lists ([2] < [2,3] < [3]).
struct MonomialLess {
    constexpr bool operator()(Monomial x, Monomial y) const noexcept {
        const std::uint64_t diff = x.bits ^ y.bits;
        if (diff == 0) return false;
        const int b = std::countr_zero(diff);
        // The side that owns bit b is smaller unless the other side stops here.
        if ((x.bits >> b) & 1U) return (y.bits >> b) != 0;
        return (x.bits >> b) == 0;
    }
};

/// GF(2) sum of monomials. Terms are kept sorted by MonomialLess and
/// unique, so equality is structural and adding a term twice cancels it.
class CohomologyClass {
public:
    CohomologyClass() = default;
    explicit CohomologyClass(Monomial m) : terms_{m} {}

    static CohomologyClass unit() { return CohomologyClass(Monomial{}); }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::span<const Monomial> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    void toggle(Monomial m);
    CohomologyClass& operator+=(const CohomologyClass& other);

    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) {
        a += b;
        return a;
    }
    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

private:
    std::vector<Monomial> terms_;
};

struct DegreeBand {
    int p = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    constexpr bool contains(std::int64_t degree) const noexcept {
        return lo <= degree && degree <= hi;
    }
    constexpr std::int64_t width() const noexcept { return hi - lo; }
};

enum class ReductionOrder { smallest_first, largest_first };

/// H*(V_k(R^n); Z_2) with generators a_{n-k}, ..., a_{n-1}. Copies share
/// the lazily filled basis cache, which is safe to read concurrently.
class StiefelRing {
public:
    // Bit-set monomials cap the generator count.
    static constexpr int max_generators = 62;

    StiefelRing(int n, int k);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int lowest_generator() const noexcept { return n_ - k_; }
    int highest_generator() const noexcept { return n_ - 1; }
    std::int64_t top_degree() const noexcept { return top_degree_; }

    bool is_generator(std::int64_t index) const noexcept {
        return index >= lowest_generator() && index <= highest_generator();
    }
    Monomial generator(int index) const;
    Monomial from_indices(std::span<const int> ascending) const;
    std::vector<int> indices(Monomial m) const;
    std::int64_t degree(Monomial m) const noexcept;
    bool contains(Monomial m) const noexcept { return (m.bits >> k_) == 0; }

    // Degree of a nonzero class whose terms share one degree.
    std::optional<std::int64_t> homogeneous_degree(const CohomologyClass& x) const;
    bool is_homogeneous(const CohomologyClass& x, std::int64_t degree) const;

    std::span<const Monomial> basis(std::int64_t degree) const;
    std::size_t dimension(std::int64_t degree) const { return basis(degree).size(); }

    friend bool operator==(const StiefelRing& a, const StiefelRing& b) noexcept {
        return a.n_ == b.n_ && a.k_ == b.k_;
    }

private:
    struct BasisCache;

    int n_;
    int k_;
    std::int64_t top_degree_;
    std::shared_ptr<BasisCache> cache_;
};

StiefelRing make_ring(int n, int k);

/// Square-free monomials of the given degree in lexicographic order;
/// empty for negative degrees or degrees above the top class.
std::span<const Monomial> basis(const StiefelRing& ring, std::int64_t degree);

/// Reduces a multiset of generator indices with a_i^2 = a_{2i} (2i <= n-1)
/// and a_i^2 = 0 otherwise. Returns nullopt when the product vanishes.
std::optional<Monomial> reduce_multiset(const StiefelRing& ring, std::span<const int> indices,
                                        ReductionOrder order = ReductionOrder::smallest_first);

std::optional<Monomial> multiply(const StiefelRing& ring, Monomial x, Monomial y);
CohomologyClass multiply(const StiefelRing& ring, const CohomologyClass& x,
                         const CohomologyClass& y);

DegreeBand t_band(const StiefelRing& ring, int p);

// Text form: "a4*a5", sums joined by '+', "1" for the unit and "0" for zero.
std::string format(const StiefelRing& ring, Monomial m);
std::string format(const StiefelRing& ring, const CohomologyClass& x);
CohomologyClass parse_class(const StiefelRing& ring, std::string_view text);

}  // namespace stiefel
