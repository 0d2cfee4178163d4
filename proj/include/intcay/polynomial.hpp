#pragma once

#include <string>
#include <utility>
#include <vector>

#include "intcay/bigint.hpp"

namespace intcay {

/// Dense integer polynomial, coefficients stored low degree first and trimmed
/// so the leading coefficient is non-zero (the zero polynomial is empty).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(std::size_t degree, const BigInt& c = 1);

    /// -1 for the zero polynomial.
    long long degree() const noexcept { return static_cast<long long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
    BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    BigInt evaluate(const BigInt& x) const;

    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
    bool operator==(const IntPolynomial&) const = default;

    /// Human-readable form, e.g. "x^3 - 3*x - 2".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Quotient and remainder of division by a monic polynomial.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& num, const IntPolynomial& den);

/// Divides p by (x - r) when r is a root; returns false (p untouched) otherwise.
bool deflate_root(IntPolynomial& p, const BigInt& r);

}  // namespace intcay
