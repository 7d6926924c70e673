#include "stiefel/parity.hpp"

#include <string>

namespace stiefel {

std::string_view to_string(Parity p) noexcept { return is_odd(p) ? "odd" : "even"; }

std::string_view to_string(PhiComparison c) noexcept {
    return c == PhiComparison::equal ? "equal" : "strict";
}

Parity binom_parity(std::int64_t a, std::int64_t b) {
    if (b < 0) {
        throw ParameterError("binom_parity: bottom must be non-negative, got " + std::to_string(b));
    }
    if (a < -1 || (a == -1 && b > 0)) {
        throw ParameterError("binom_parity: C(" + std::to_string(a) + "," + std::to_string(b) +
                             ") is outside the supported range");
    }
    if (b == 0) return Parity::odd;
    const auto top = static_cast<std::uint64_t>(a);
    const auto bottom = static_cast<std::uint64_t>(b);
    return (top & bottom) == bottom ? Parity::odd : Parity::even;
}

PhiValue phi(std::uint64_t m) {
    PhiValue out;
    out.m = m;
    for (std::uint64_t l = 1; l <= m; ++l) {
        switch (l % 8) {
            case 0:
            case 1:
            case 2:
            case 4:
                ++out.phi;
                break;
            default:
                break;
        }
    }
    out.power = BigInt(1) << out.phi;
    return out;
}

std::uint64_t phi_closed_form(std::uint64_t m) noexcept {
    switch (m % 8) {
        case 1:
        case 2:
        case 3:
        case 4:
        case 5:
            return m / 2 + 1;
        default:
            return m / 2;
    }
}

PhiComparison equality_classifier(std::uint64_t m) {
    if (m == 0) throw ParameterError("equality_classifier: m must be positive");
    const PhiValue v = phi(m - 1);
    // 2^phi(m-1) >= m always; a "less" outcome would be a bug in phi.
    if (v.power < m) throw Error("equality_classifier: 2^phi(m-1) < m at m = " + std::to_string(m));
    return v.power == m ? PhiComparison::equal : PhiComparison::strict;
}

}  // namespace stiefel
