#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "intcay/bigint.hpp"
#include "intcay/polynomial.hpp"

namespace intcay {

/// Phi_m, obtained by dividing x^m - 1 by Phi_d for every proper divisor d.
IntPolynomial cyclotomic_poly(unsigned m);

unsigned euler_phi(unsigned m);

/// Z[zeta_m] in the power basis 1, zeta, ..., zeta^{phi(m)-1}. Holds Phi_m and
/// the reduced form of every power zeta^t, 0 <= t < m.
class CycContext {
public:
    static std::shared_ptr<const CycContext> make(unsigned m);

    unsigned m() const noexcept { return m_; }
    unsigned phi() const noexcept { return phi_; }
    const IntPolynomial& modulus() const noexcept { return modulus_; }
    /// Power-basis coefficients of zeta^t (t taken mod m).
    const std::vector<BigInt>& root_power(long long t) const;

private:
    explicit CycContext(unsigned m);

    unsigned m_;
    unsigned phi_;
    IntPolynomial modulus_;
    std::vector<std::vector<BigInt>> powers_;
};

using CycContextPtr = std::shared_ptr<const CycContext>;

/// Element of Z[zeta_m], always kept reduced mod Phi_m so that equality is
/// coefficient equality.
class CycInt {
public:
    explicit CycInt(CycContextPtr ctx);  // zero
    CycInt(CycContextPtr ctx, std::vector<BigInt> coeffs);  // reduces

    static CycInt from_integer(CycContextPtr ctx, const BigInt& c);
    static CycInt from_root_power(CycContextPtr ctx, long long t);

    const CycContextPtr& context() const noexcept { return ctx_; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const;

    /// c0 when every non-constant coefficient vanishes. A rational algebraic
    /// integer is a rational integer, so this is the rationality test.
    std::optional<BigInt> as_rational_integer() const;

    /// Image under zeta -> zeta^{-1} (complex conjugation).
    CycInt conjugate() const;
    bool is_self_conjugate() const { return conjugate() == *this; }

    /// Real part of the complex value; used only for display ordering.
    double approx_real() const;

    CycInt& operator+=(const CycInt& other);
    CycInt& operator-=(const CycInt& other);
    CycInt& operator*=(const CycInt& other);
    CycInt& add_scaled_power(long long t, const BigInt& c);  // += c * zeta^t
    CycInt operator-() const;
    friend CycInt operator+(CycInt x, const CycInt& y) { return x += y; }
    friend CycInt operator-(CycInt x, const CycInt& y) { return x -= y; }
    friend CycInt operator*(const CycInt& x, const CycInt& y);
    friend CycInt operator*(CycInt x, const BigInt& c);

    friend bool operator==(const CycInt& x, const CycInt& y);

    /// "c0 + c1*z + c2*z^2 ...", z = zeta_m.
    std::string to_string() const;

private:
    void check_same(const CycInt& other) const;

    CycContextPtr ctx_;
    std::vector<BigInt> coeffs_;
};

CycInt from_root_power(const CycContextPtr& ctx, long long t);
CycInt add(const CycInt& a, const CycInt& b);
CycInt mul(const CycInt& a, const CycInt& b);
CycInt negate(const CycInt& a);
std::optional<BigInt> as_rational_integer(const CycInt& a);

}  // namespace intcay
