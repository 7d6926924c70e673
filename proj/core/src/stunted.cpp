#include "stiefel/stunted.hpp"

#include <algorithm>
#include <cstdint>

#include "stiefel/parity.hpp"

namespace stiefel {

namespace {

void check_pair(int n, int k) {
    if (k < 1 || n <= k) {
        throw ParameterError("requires n > k >= 1, got n=" + std::to_string(n) +
                             " k=" + std::to_string(k));
    }
}

}  // namespace

TruncatedPoly::TruncatedPoly(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 1 || modulus > max_modulus) {
        throw ParameterError("truncation modulus must lie in [1," + std::to_string(max_modulus) +
                             "], got " + std::to_string(modulus));
    }
    coeffs_.assign(static_cast<std::size_t>(modulus), 0);
}

TruncatedPoly TruncatedPoly::one(std::int64_t modulus) {
    TruncatedPoly p(modulus);
    p.coeffs_[0] = 1;
    return p;
}

TruncatedPoly TruncatedPoly::one_plus_power(std::int64_t modulus, std::int64_t exponent) {
    TruncatedPoly p = one(modulus);
    if (exponent < 0) throw ParameterError("negative exponent");
    if (exponent < modulus) p.coeffs_[static_cast<std::size_t>(exponent)] ^= 1;
    return p;
}

bool TruncatedPoly::coefficient(std::int64_t exponent) const {
    if (exponent < 0) throw ParameterError("negative exponent");
    if (exponent >= modulus_) return false;
    return coeffs_[static_cast<std::size_t>(exponent)] != 0;
}

void TruncatedPoly::set(std::int64_t exponent, bool value) {
    if (exponent < 0) throw ParameterError("negative exponent");
    if (exponent >= modulus_) return;
    coeffs_[static_cast<std::size_t>(exponent)] = value ? 1 : 0;
}

std::vector<std::int64_t> TruncatedPoly::nonzero_exponents() const {
    std::vector<std::int64_t> out;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e]) out.push_back(static_cast<std::int64_t>(e));
    }
    return out;
}

void TruncatedPoly::check_compatible(const TruncatedPoly& other) const {
    if (other.modulus_ != modulus_) {
        throw ParameterError("truncated polynomials over different moduli");
    }
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& other) {
    check_compatible(other);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] ^= other.coeffs_[e];
    return *this;
}

TruncatedPoly& TruncatedPoly::operator*=(const TruncatedPoly& other) {
    check_compatible(other);
    std::vector<std::uint8_t> out(coeffs_.size(), 0);
    const std::size_t size = coeffs_.size();
    for (std::size_t a = 0; a < size; ++a) {
        if (!coeffs_[a]) continue;
        for (std::size_t b = 0; a + b < size; ++b) out[a + b] ^= other.coeffs_[b];
    }
    coeffs_ = std::move(out);
    return *this;
}

std::string TruncatedPoly::to_string() const {
    std::string out;
    for (std::int64_t e : nonzero_exponents()) {
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += "1";
        } else if (e == 1) {
            out += "t";
        } else {
            out += "t^" + std::to_string(e);
        }
    }
    return out.empty() ? "0" : out;
}

TruncatedPoly total_sw_multiple_gamma(std::int64_t modulus, std::uint64_t m) {
    if (m > static_cast<std::uint64_t>(INT64_MAX)) {
        throw ParameterError("bundle multiple too large: " + std::to_string(m));
    }
    TruncatedPoly p(modulus);
    const auto top = static_cast<std::int64_t>(m);
    for (std::int64_t j = 0; j < modulus; ++j) {
        p.set(j, is_odd(binom_parity(top, j)));
    }
    return p;
}

TruncatedPoly total_sw_multiple_gamma(std::int64_t modulus, const BigInt& m) {
    if (m < 0) throw ParameterError("bundle multiple must be non-negative");
    // Exponents stay below 2^16, so C(m, j) mod 2 depends on m mod 2^32 only.
    const BigInt low = m & BigInt(0xFFFFFFFFULL);
    return total_sw_multiple_gamma(modulus, static_cast<std::uint64_t>(low));
}

BigInt image_multiple(int n, int k) {
    check_pair(n, k);
    return phi(static_cast<std::uint64_t>(n - k - 1)).power;
}

std::string_view to_string(AdmissibleMode mode) noexcept {
    return mode == AdmissibleMode::theorem1 ? "theorem1" : "corollary22";
}

bool AdmissibleSet::contains(std::int64_t degree) const {
    return std::binary_search(degrees.begin(), degrees.end(), degree);
}

AdmissibleSet admissible_degrees(int n, int k, AdmissibleMode mode) {
    check_pair(n, k);
    AdmissibleSet out;
    out.n = n;
    out.k = k;
    out.mode = mode;
    const std::int64_t gap = n - k;
    const BigInt power = image_multiple(n, k);

    if (mode == AdmissibleMode::corollary22) {
        if (n < 2 * k) {
            throw HypothesisError("corollary22 mode requires n >= 2k, got n=" + std::to_string(n) +
                                  " k=" + std::to_string(k));
        }
        out.range_hi = n - 1;
        if (power <= out.range_hi) out.degrees.push_back(static_cast<std::int64_t>(power));
        return out;
    }

    out.range_hi = 2 * gap;
    if (gap == 1 || gap == 2 || gap == 4 || gap == 8) {
        out.degrees = {gap, 2 * gap};
    } else if (power <= out.range_hi) {
        out.degrees.push_back(static_cast<std::int64_t>(power));
    }
    return out;
}

}  // namespace stiefel
