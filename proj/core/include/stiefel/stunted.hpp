#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stiefel/errors.hpp"

namespace stiefel {

/// Element of Z_2[t]/(t^N), the mod-2 cohomology of RP^{N-1}.
class TruncatedPoly {
public:
    static constexpr std::int64_t max_modulus = std::int64_t{1} << 16;

    explicit TruncatedPoly(std::int64_t modulus);

    static TruncatedPoly one(std::int64_t modulus);
    // 1 + t^e (just 1 when e >= N)
    static TruncatedPoly one_plus_power(std::int64_t modulus, std::int64_t exponent);

    std::int64_t modulus() const noexcept { return modulus_; }
    bool coefficient(std::int64_t exponent) const;
    void set(std::int64_t exponent, bool value);
    std::vector<std::int64_t> nonzero_exponents() const;

    TruncatedPoly& operator+=(const TruncatedPoly& other);
    TruncatedPoly& operator*=(const TruncatedPoly& other);
    friend TruncatedPoly operator*(TruncatedPoly a, const TruncatedPoly& b) {
        a *= b;
        return a;
    }
    friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) {
        a += b;
        return a;
    }
    friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

    // "1 + t + t^4"; zero prints "0".
    std::string to_string() const;

private:
    void check_compatible(const TruncatedPoly& other) const;

    std::int64_t modulus_;
    std::vector<std::uint8_t> coeffs_;
};

/// Total Stiefel-Whitney class (1+t)^m of m copies of the canonical line
/// bundle over RP^{N-1}, coefficientwise by binomial parity.
TruncatedPoly total_sw_multiple_gamma(std::int64_t modulus, std::uint64_t m);
// Multiples past 64 bits; only the low bits of m reach exponents below N.
TruncatedPoly total_sw_multiple_gamma(std::int64_t modulus, const BigInt& m);

/// 2^phi(n-k-1): the generator multiple of the canonical line bundle in
/// the image of KO(P_{n,k}) -> KO(RP^{n-1}).
BigInt image_multiple(int n, int k);

enum class AdmissibleMode { theorem1, corollary22 };

std::string_view to_string(AdmissibleMode mode) noexcept;

/// Degrees in [1, range_hi] where a Stiefel-Whitney class of a bundle over
/// V_k(R^n) is not forced to vanish. Permitted, not realized.
struct AdmissibleSet {
    int n = 0;
    int k = 0;
    AdmissibleMode mode = AdmissibleMode::theorem1;
    std::int64_t range_hi = 0;
    std::vector<std::int64_t> degrees;

    bool contains(std::int64_t degree) const;
};

/// theorem1: range [1, 2(n-k)], degrees {n-k, 2(n-k)} when n-k is 1, 2, 4
/// or 8 and {2^phi(n-k-1)} clipped to the range otherwise.
/// corollary22: range [1, n-1], degrees {2^phi(n-k-1)} clipped to the
/// range; requires n >= 2k (HypothesisError otherwise).
AdmissibleSet admissible_degrees(int n, int k, AdmissibleMode mode);

}  // namespace stiefel
