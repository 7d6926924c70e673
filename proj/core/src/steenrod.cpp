#include "stiefel/steenrod.hpp"

#include <algorithm>

#include "stiefel/parity.hpp"

namespace stiefel {

CohomologyClass sq_gen(const StiefelRing& ring, std::int64_t i, int j) {
    if (i < 0) throw ParameterError("Sq^i requires i >= 0");
    const Monomial a = ring.generator(j);
    if (i == 0) return CohomologyClass(a);
    if (j + i > ring.highest_generator() || !is_odd(binom_parity(j, i))) return {};
    return CohomologyClass(ring.generator(static_cast<int>(j + i)));
}

namespace {

struct CartanExpansion {
    const StiefelRing& ring;
    std::vector<int> factors;
    std::vector<std::int64_t> headroom;  // suffix sums of n-1-i_t
    std::vector<int> targets;
    CohomologyClass result;

    void run(std::size_t pos, std::int64_t remaining) {
        if (pos == factors.size()) {
            if (auto m = reduce_multiset(ring, targets)) result.toggle(*m);
            return;
        }
        if (remaining > headroom[pos]) return;
        const int j = factors[pos];
        const bool last = pos + 1 == factors.size();
        const std::int64_t lo = last ? remaining : 0;
        for (std::int64_t l = lo; l <= remaining; ++l) {
            if (l > 0 && (j + l > ring.highest_generator() || !is_odd(binom_parity(j, l)))) {
                if (j + l > ring.highest_generator()) break;
                continue;
            }
            targets[pos] = static_cast<int>(j + l);
            run(pos + 1, remaining - l);
        }
    }
};

}  // namespace

CohomologyClass sq(const StiefelRing& ring, std::int64_t i, Monomial x) {
    if (i < 0) throw ParameterError("Sq^i requires i >= 0");
    if (!ring.contains(x)) throw ParameterError("monomial uses an index outside the generator range");
    if (i == 0) return CohomologyClass(x);
    if (x.is_unit()) return {};

    CartanExpansion cartan{ring, ring.indices(x), {}, {}, {}};
    const std::size_t p = cartan.factors.size();
    cartan.headroom.assign(p + 1, 0);
    for (std::size_t t = p; t-- > 0;) {
        cartan.headroom[t] = cartan.headroom[t + 1] + (ring.highest_generator() - cartan.factors[t]);
    }
    cartan.targets.assign(p, 0);
    cartan.run(0, i);
    return std::move(cartan.result);
}

CohomologyClass sq(const StiefelRing& ring, std::int64_t i, const CohomologyClass& x) {
    CohomologyClass out;
    for (Monomial m : x.terms()) out += sq(ring, i, m);
    return out;
}

bool AxiomReport::ok() const noexcept {
    return std::all_of(tallies.begin(), tallies.end(),
                       [](const AxiomTally& t) { return t.failed == 0; });
}

AxiomReport verify_axioms(const StiefelRing& ring, std::size_t max_failures_kept) {
    AxiomReport report;
    report.tallies = {{"sq0_identity"}, {"instability"}, {"squaring"}, {"cartan"}, {"adem"}};
    auto record = [&](std::size_t which, bool holds, auto&& describe) {
        AxiomTally& tally = report.tallies[which];
        ++tally.checked;
        if (holds) return;
        ++tally.failed;
        if (report.failures.size() < max_failures_kept) {
            report.failures.push_back({tally.name, describe()});
        }
    };

    const std::int64_t top = ring.top_degree();
    std::vector<std::pair<Monomial, std::int64_t>> all;
    for (std::int64_t d = 0; d <= top; ++d) {
        for (Monomial m : ring.basis(d)) all.emplace_back(m, d);
    }

    for (auto [x, d] : all) {
        const std::string xs = format(ring, x);
        const CohomologyClass cx(x);
        record(0, sq(ring, 0, x) == cx, [&] { return "Sq^0(" + xs + ")"; });
        for (std::int64_t i = d + 1; i <= top; ++i) {
            record(1, sq(ring, i, x).is_zero(),
                   [&] { return "Sq^" + std::to_string(i) + "(" + xs + ") != 0"; });
        }
        record(2, sq(ring, d, x) == multiply(ring, cx, cx),
               [&] { return "Sq^" + std::to_string(d) + "(" + xs + ") != square"; });
    }

    for (auto [x, dx] : all) {
        for (auto [y, dy] : all) {
            if (dx + dy > top) continue;
            const CohomologyClass xy = multiply(ring, CohomologyClass(x), CohomologyClass(y));
            for (std::int64_t i = 0; i <= dx + dy; ++i) {
                CohomologyClass rhs;
                for (std::int64_t a = 0; a <= i; ++a) {
                    rhs += multiply(ring, sq(ring, a, x), sq(ring, i - a, y));
                }
                record(3, sq(ring, i, xy) == rhs, [&] {
                    return "Sq^" + std::to_string(i) + "(" + format(ring, x) + " * " +
                           format(ring, y) + ")";
                });
            }
        }
    }

    for (auto [x, dx] : all) {
        for (std::int64_t b = 1; b <= top; ++b) {
            const CohomologyClass sqb = sq(ring, b, x);
            for (std::int64_t a = 1; a < 2 * b && a + b <= top; ++a) {
                const CohomologyClass lhs = sq(ring, a, sqb);
                CohomologyClass rhs;
                for (std::int64_t c = 0; 2 * c <= a; ++c) {
                    if (is_odd(binom_parity(b - c - 1, a - 2 * c))) {
                        rhs += sq(ring, a + b - c, sq(ring, c, x));
                    }
                }
                record(4, lhs == rhs, [&] {
                    return "Sq^" + std::to_string(a) + "Sq^" + std::to_string(b) + "(" +
                           format(ring, x) + ")";
                });
            }
        }
    }
    return report;
}

}  // namespace stiefel
