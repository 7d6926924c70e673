#include "stiefel/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <iterator>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace stiefel {

int Monomial::length() const noexcept { return std::popcount(bits); }

void CohomologyClass::toggle(Monomial m) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, MonomialLess{});
    if (it != terms_.end() && *it == m) {
        terms_.erase(it);
    } else {
        terms_.insert(it, m);
    }
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& other) {
    if (other.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = other.terms_;
        return *this;
    }
    std::vector<Monomial> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(out), MonomialLess{});
    terms_ = std::move(out);
    return *this;
}

struct StiefelRing::BasisCache {
    std::shared_mutex mutex;
    std::unordered_map<std::int64_t, std::unique_ptr<const std::vector<Monomial>>> by_degree;
};

namespace {

void collect_subsets(int base, int k, int t, std::int64_t remaining, std::int64_t tail_sum,
                     std::uint64_t bits, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(Monomial{bits});
        return;
    }
    // tail_sum: sum of generators t..k-1
    for (; t < k; ++t) {
        const std::int64_t g = base + t;
        if (g > remaining || tail_sum < remaining) return;
        collect_subsets(base, k, t + 1, remaining - g, tail_sum - g, bits | (1ULL << t), out);
        tail_sum -= g;
    }
}

}  // namespace

StiefelRing::StiefelRing(int n, int k) : n_(n), k_(k), top_degree_(0) {
    if (k < 1 || n <= k) {
        throw ParameterError("ring requires n > k >= 1, got n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
    }
    if (k > max_generators) {
        throw ParameterError("ring supports at most " + std::to_string(max_generators) +
                             " generators, got k=" + std::to_string(k));
    }
    for (int i = n - k; i <= n - 1; ++i) top_degree_ += i;
    cache_ = std::make_shared<BasisCache>();
}

Monomial StiefelRing::generator(int index) const {
    if (!is_generator(index)) {
        throw ParameterError("a" + std::to_string(index) + " is not a generator of V_" +
                             std::to_string(k_) + "(R^" + std::to_string(n_) + ")");
    }
    return Monomial{1ULL << (index - lowest_generator())};
}

Monomial StiefelRing::from_indices(std::span<const int> ascending) const {
    Monomial m;
    int previous = -1;
    for (int index : ascending) {
        if (index <= previous) throw ParameterError("monomial indices must be strictly increasing");
        m.bits |= generator(index).bits;
        previous = index;
    }
    return m;
}

std::vector<int> StiefelRing::indices(Monomial m) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m.length()));
    for (std::uint64_t bits = m.bits; bits != 0; bits &= bits - 1) {
        out.push_back(lowest_generator() + std::countr_zero(bits));
    }
    return out;
}

std::int64_t StiefelRing::degree(Monomial m) const noexcept {
    std::int64_t d = 0;
    for (std::uint64_t bits = m.bits; bits != 0; bits &= bits - 1) {
        d += lowest_generator() + std::countr_zero(bits);
    }
    return d;
}

std::optional<std::int64_t> StiefelRing::homogeneous_degree(const CohomologyClass& x) const {
    if (x.is_zero()) return std::nullopt;
    const std::int64_t d = degree(x.terms().front());
    for (Monomial m : x.terms()) {
        if (degree(m) != d) return std::nullopt;
    }
    return d;
}

bool StiefelRing::is_homogeneous(const CohomologyClass& x, std::int64_t d) const {
    return std::all_of(x.terms().begin(), x.terms().end(),
                       [&](Monomial m) { return contains(m) && degree(m) == d; });
}

std::span<const Monomial> StiefelRing::basis(std::int64_t d) const {
    if (d < 0 || d > top_degree_) return {};
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->by_degree.find(d);
        if (it != cache_->by_degree.end()) return *it->second;
    }
    auto fresh = std::make_unique<std::vector<Monomial>>();
    collect_subsets(lowest_generator(), k_, 0, d, top_degree_, 0, *fresh);
    std::sort(fresh->begin(), fresh->end(), MonomialLess{});

    std::unique_lock lock(cache_->mutex);
    auto [it, inserted] = cache_->by_degree.try_emplace(d, std::move(fresh));
    return *it->second;
}

StiefelRing make_ring(int n, int k) { return StiefelRing(n, k); }

std::span<const Monomial> basis(const StiefelRing& ring, std::int64_t degree) {
    return ring.basis(degree);
}

std::optional<Monomial> reduce_multiset(const StiefelRing& ring, std::span<const int> indices,
                                        ReductionOrder order) {
    const int base = ring.lowest_generator();
    std::vector<int> counts(static_cast<std::size_t>(ring.k()), 0);
    for (int index : indices) {
        if (!ring.is_generator(index)) {
            throw ParameterError("index " + std::to_string(index) + " is not a generator");
        }
        ++counts[static_cast<std::size_t>(index - base)];
    }
    const int k = ring.k();
    for (;;) {
        int dup = -1;
        if (order == ReductionOrder::smallest_first) {
            for (int t = 0; t < k && dup < 0; ++t) {
                if (counts[static_cast<std::size_t>(t)] >= 2) dup = t;
            }
        } else {
            for (int t = k - 1; t >= 0 && dup < 0; --t) {
                if (counts[static_cast<std::size_t>(t)] >= 2) dup = t;
            }
        }
        if (dup < 0) break;
        const int doubled = 2 * (base + dup);
        if (doubled > ring.highest_generator()) return std::nullopt;
        counts[static_cast<std::size_t>(dup)] -= 2;
        ++counts[static_cast<std::size_t>(doubled - base)];
    }
    Monomial out;
    for (int t = 0; t < k; ++t) {
        if (counts[static_cast<std::size_t>(t)] == 1) out.bits |= 1ULL << t;
    }
    return out;
}

std::optional<Monomial> multiply(const StiefelRing& ring, Monomial x, Monomial y) {
    if (!ring.contains(x) || !ring.contains(y)) {
        throw ParameterError("monomial uses an index outside the generator range");
    }
    if ((x.bits & y.bits) == 0) return Monomial{x.bits | y.bits};
    std::vector<int> merged = ring.indices(x);
    const std::vector<int> rhs = ring.indices(y);
    merged.insert(merged.end(), rhs.begin(), rhs.end());
    return reduce_multiset(ring, merged, ReductionOrder::smallest_first);
}

CohomologyClass multiply(const StiefelRing& ring, const CohomologyClass& x,
                         const CohomologyClass& y) {
    CohomologyClass out;
    for (Monomial a : x.terms()) {
        for (Monomial b : y.terms()) {
            if (auto p = multiply(ring, a, b)) out.toggle(*p);
        }
    }
    return out;
}

DegreeBand t_band(const StiefelRing& ring, int p) {
    if (p < 0 || p > ring.k()) {
        throw ParameterError("band index p must lie in [0," + std::to_string(ring.k()) +
                             "], got " + std::to_string(p));
    }
    const std::int64_t pp = p;
    const std::int64_t tri = pp * (pp - 1) / 2;
    return DegreeBand{p, pp * ring.lowest_generator() + tri, pp * ring.highest_generator() - tri};
}

std::string format(const StiefelRing& ring, Monomial m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (int index : ring.indices(m)) {
        if (!out.empty()) out += '*';
        out += 'a';
        out += std::to_string(index);
    }
    return out;
}

std::string format(const StiefelRing& ring, const CohomologyClass& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (Monomial m : x.terms()) {
        if (!out.empty()) out += '+';
        out += format(ring, m);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<Monomial> parse_monomial(const StiefelRing& ring, std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty term");
    if (text == "1") return Monomial{};
    if (text == "0") return std::nullopt;
    std::vector<int> factors;
    while (true) {
        const auto star = text.find('*');
        std::string_view factor = trim(text.substr(0, star));
        if (factor.size() < 2 || factor.front() != 'a') {
            throw ParseError("expected a generator like a4, got '" + std::string(factor) + "'");
        }
        int index = 0;
        const char* first = factor.data() + 1;
        const char* last = factor.data() + factor.size();
        auto [ptr, ec] = std::from_chars(first, last, index);
        if (ec != std::errc{} || ptr != last) {
            throw ParseError("bad generator index in '" + std::string(factor) + "'");
        }
        if (!ring.is_generator(index)) {
            throw ParseError("a" + std::to_string(index) + " is not a generator (range a" +
                             std::to_string(ring.lowest_generator()) + "..a" +
                             std::to_string(ring.highest_generator()) + ")");
        }
        factors.push_back(index);
        if (star == std::string_view::npos) break;
        text.remove_prefix(star + 1);
    }
    return reduce_multiset(ring, factors);
}

}  // namespace

CohomologyClass parse_class(const StiefelRing& ring, std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty class");
    CohomologyClass out;
    while (true) {
        const auto plus = text.find('+');
        if (auto m = parse_monomial(ring, text.substr(0, plus))) out.toggle(*m);
        if (plus == std::string_view::npos) break;
        text.remove_prefix(plus + 1);
    }
    return out;
}

}  // namespace stiefel
