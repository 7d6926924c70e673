#include "stiefel/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "stiefel/parity.hpp"
#include "stiefel/steenrod.hpp"
#include "stiefel/stunted.hpp"

namespace stiefel {

BigInt state_space_size(const StiefelRing& ring) {
    std::uint64_t bits = 0;
    for (std::int64_t d = 1; d <= ring.top_degree(); ++d) bits += ring.dimension(d);
    return BigInt(1) << bits;
}

namespace {

// One degree's slot in the search.
struct Slot {
    std::span<const Monomial> basis;
    std::uint64_t first = 0;  // value range [first, last]
    std::uint64_t last = 0;
    // sq_table[b][i]: Sq^i of basis element b, for 1 <= i <= top - degree.
    std::vector<std::vector<CohomologyClass>> sq_table;
    // Wu pairs (i, j) with i + j equal to this degree.
    std::vector<std::pair<std::int64_t, std::int64_t>> wu_pairs;
};

class Search {
public:
    Search(const StiefelRing& ring, const EnumerateOptions& options)
        : ring_(ring), options_(options), system_(ring) {
        const std::int64_t top = ring.top_degree();
        slots_.resize(static_cast<std::size_t>(top + 1));
        values_.assign(slots_.size(), 0);

        std::optional<AdmissibleSet> cor22;
        if (options.require_cor22) {
            cor22 = admissible_degrees(ring.n(), ring.k(), AdmissibleMode::corollary22);
        }

        for (std::int64_t d = 1; d <= top; ++d) {
            Slot& slot = slots_[static_cast<std::size_t>(d)];
            slot.basis = ring.basis(d);
            const std::size_t dim = slot.basis.size();
            slot.last = dim == 0 ? 0 : (std::uint64_t{1} << dim) - 1;
            if (!options.prune) continue;

            const bool zero_by_cor22 = cor22 && d <= cor22->range_hi && !cor22->contains(d);
            const bool zero_by_first = options.first_nonzero && d < *options.first_nonzero;
            if (zero_by_cor22 || zero_by_first) slot.last = 0;
            if (options.first_nonzero && d == *options.first_nonzero) slot.first = 1;

            if (options.require_wu) {
                slot.sq_table.resize(dim);
                for (std::size_t b = 0; b < dim; ++b) {
                    auto& row = slot.sq_table[b];
                    row.resize(static_cast<std::size_t>(top - d + 1));
                    for (std::int64_t i = 1; i <= top - d; ++i) {
                        row[static_cast<std::size_t>(i)] = sq(ring, i, slot.basis[b]);
                    }
                }
                // Pairs with i + j > top compare zero with zero.
                for (std::int64_t i = 1; 2 * i <= d; ++i) slot.wu_pairs.emplace_back(i, d - i);
            }
        }
    }

    bool infeasible() const {
        return std::any_of(slots_.begin() + 1, slots_.end(),
                           [](const Slot& s) { return s.first > s.last; });
    }

    // First degree with more than one candidate value, or 0.
    std::int64_t split_degree() const {
        for (std::size_t d = 1; d < slots_.size(); ++d) {
            if (slots_[d].last > slots_[d].first) return static_cast<std::int64_t>(d);
        }
        return 0;
    }

    std::pair<std::uint64_t, std::uint64_t> range(std::int64_t d) const {
        const Slot& s = slots_[static_cast<std::size_t>(d)];
        return {s.first, s.last};
    }

    void pin(std::int64_t d, std::uint64_t value) {
        Slot& s = slots_[static_cast<std::size_t>(d)];
        s.first = s.last = value;
    }

    std::uint64_t run(const SystemVisitor& visit) {
        if (infeasible()) return 0;
        visited_ = 0;
        descend(1, visit);
        return visited_;
    }

private:
    CohomologyClass class_of(const Slot& slot, std::uint64_t value) const {
        CohomologyClass c;
        for (std::size_t b = 0; b < slot.basis.size(); ++b) {
            if ((value >> b) & 1U) c.toggle(slot.basis[b]);
        }
        return c;
    }

    CohomologyClass sq_of(std::int64_t i, std::int64_t j) const {
        const Slot& slot = slots_[static_cast<std::size_t>(j)];
        const std::uint64_t value = values_[static_cast<std::size_t>(j)];
        CohomologyClass out;
        for (std::size_t b = 0; b < slot.basis.size(); ++b) {
            if ((value >> b) & 1U) out += slot.sq_table[b][static_cast<std::size_t>(i)];
        }
        return out;
    }

    bool wu_holds_at(std::int64_t d) const {
        for (auto [i, j] : slots_[static_cast<std::size_t>(d)].wu_pairs) {
            if (sq_of(i, j) != wu_rhs(system_, i, j)) return false;
        }
        return true;
    }

    bool leaf_accepts() const {
        if (options_.prune) return true;
        if (options_.first_nonzero && first_nonzero_degree(system_) != options_.first_nonzero) {
            return false;
        }
        if (options_.require_cor22 && !satisfies_cor22(system_)) return false;
        if (options_.require_wu && !is_wu_consistent(system_).consistent) return false;
        return true;
    }

    void descend(std::int64_t d, const SystemVisitor& visit) {
        if (d > ring_.top_degree()) {
            if (leaf_accepts()) {
                ++visited_;
                visit(system_);
            }
            return;
        }
        const Slot& slot = slots_[static_cast<std::size_t>(d)];
        for (std::uint64_t v = slot.first;; ++v) {
            values_[static_cast<std::size_t>(d)] = v;
            system_.set(d, class_of(slot, v));
            if (!options_.prune || !options_.require_wu || wu_holds_at(d)) descend(d + 1, visit);
            if (v == slot.last) break;
        }
        system_.set(d, CohomologyClass{});
    }

    const StiefelRing& ring_;
    const EnumerateOptions& options_;
    std::vector<Slot> slots_;
    std::vector<std::uint64_t> values_;
    CharClassSystem system_;
    std::uint64_t visited_ = 0;
};

void validate(const StiefelRing& ring, const EnumerateOptions& options) {
    if (options.require_cor22 && ring.n() < 2 * ring.k()) {
        throw HypothesisError("the degree constraint needs n >= 2k, got n=" +
                              std::to_string(ring.n()) + " k=" + std::to_string(ring.k()));
    }
    if (options.first_nonzero && *options.first_nonzero < 1) {
        throw ParameterError("first_nonzero must be positive");
    }
    BigInt size = state_space_size(ring);
    if (size > options.budget) throw BudgetExceeded(std::move(size), options.budget);
}

}  // namespace

std::uint64_t enumerate_systems(const StiefelRing& ring, const EnumerateOptions& options,
                                const SystemVisitor& visit) {
    validate(ring, options);
    Search search(ring, options);
    return search.run(visit);
}

std::vector<CharClassSystem> collect_systems(const StiefelRing& ring,
                                             const EnumerateOptions& options, unsigned threads) {
    validate(ring, options);
    std::vector<CharClassSystem> out;
    auto append = [&out](const CharClassSystem& s) { out.push_back(s); };

    Search probe(ring, options);
    const std::int64_t split = probe.split_degree();
    if (threads <= 1 || split == 0 || probe.infeasible()) {
        probe.run(append);
        return out;
    }

    const auto [first, last] = probe.range(split);
    const std::uint64_t parts = last - first + 1;
    std::vector<std::vector<CharClassSystem>> results(parts);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t p = next++; p < parts; p = next++) {
            Search search(ring, options);
            search.pin(split, first + p);
            search.run([&results, p](const CharClassSystem& s) { results[p].push_back(s); });
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(std::min<std::uint64_t>(threads, parts));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (auto& part : results) {
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace stiefel
