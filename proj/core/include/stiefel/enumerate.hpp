#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "stiefel/wu_systems.hpp"

namespace stiefel {

struct EnumerateOptions {
    bool require_wu = false;
    // Forces w_i = 0 for i <= n-1, i != 2^phi(n-k-1). Needs n >= 2k.
    bool require_cor22 = false;
    std::optional<std::int64_t> first_nonzero;
    BigInt budget = BigInt(1) << 24;
    // false: visit every raw assignment and apply the filters at the leaves.
    bool prune = true;
};

/// Number of raw assignments: the product of 2^dim H^d over 1 <= d <= top.
BigInt state_space_size(const StiefelRing& ring);

using SystemVisitor = std::function<void(const CharClassSystem&)>;

/// Streams every system passing the filters, in lexicographic order of the
/// per-degree coefficient vectors (degree 1 most significant). Returns the
/// number of systems visited. Throws BudgetExceeded before any work when
/// state_space_size exceeds options.budget.
std::uint64_t enumerate_systems(const StiefelRing& ring, const EnumerateOptions& options,
                                const SystemVisitor& visit);

/// Same set and order as enumerate_systems. With threads > 1 the search is
/// split on the first degree that has a choice, and partitions run in parallel.
std::vector<CharClassSystem> collect_systems(const StiefelRing& ring,
                                             const EnumerateOptions& options,
                                             unsigned threads = 1);

}  // namespace stiefel
