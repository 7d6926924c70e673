#pragma once

#include <cstdint>
#include <string_view>

#include "stiefel/errors.hpp"

namespace stiefel {

// An element of GF(2).
enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr Parity operator*(Parity a, Parity b) noexcept {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) & static_cast<std::uint8_t>(b));
}

constexpr bool is_odd(Parity p) noexcept { return p == Parity::odd; }

std::string_view to_string(Parity p) noexcept;

/// Parity of the binomial coefficient C(a, b) by Lucas' theorem.
///
/// C(a, 0) is odd for every a >= -1 and C(a, b) is even when 0 <= a < b.
/// The single negative top allowed is a = -1 with b = 0, which is the
/// r = 0 term of Wu's formula when i = j. Anything else with a < 0 throws
/// ParameterError, as does b < 0.
Parity binom_parity(std::int64_t a, std::int64_t b);

struct PhiValue {
    std::uint64_t m = 0;
    std::uint64_t phi = 0;
    BigInt power = 1;  // 2^phi
};

/// Counts 0 < l <= m with l = 0, 1, 2, 4 (mod 8).
PhiValue phi(std::uint64_t m);

// [m/2] + 1 for m = 1..5 (mod 8), [m/2] otherwise. Cross-check only.
std::uint64_t phi_closed_form(std::uint64_t m) noexcept;

enum class PhiComparison { strict, equal };

std::string_view to_string(PhiComparison c) noexcept;

/// Compares 2^phi(m-1) with m (m >= 1). Equality holds exactly at 1, 2, 4, 8.
PhiComparison equality_classifier(std::uint64_t m);

}  // namespace stiefel
