#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace intcay {

using BigInt = mpz_class;

/// Square root of `v` when it is a perfect square (v >= 0), empty otherwise.
inline std::optional<BigInt> exact_sqrt(const BigInt& v) {
    if (sgn(v) < 0) return std::nullopt;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    if (root * root != v) return std::nullopt;
    return root;
}

/// mpz_class has no long long constructor; long is 64-bit on the targets we build for.
inline BigInt big(long long v) {
    static_assert(sizeof(long) == sizeof(long long));
    return BigInt(static_cast<long>(v));
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigInt divexact(const BigInt& num, const BigInt& den) {
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

}  // namespace intcay
