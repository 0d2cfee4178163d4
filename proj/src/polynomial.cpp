#include "intcay/polynomial.hpp"

#include <algorithm>

#include "intcay/errors.hpp"

namespace intcay {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& c) {
    std::vector<BigInt> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()), 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()), 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] -= q.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1 && k > 0;
        if (!unit) out += mag.get_str();
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& num, const IntPolynomial& den) {
    if (!den.is_monic()) throw DomainError("divmod_monic: divisor is not monic");
    std::vector<BigInt> rem = num.coefficients();
    const auto d = static_cast<std::size_t>(den.degree());
    if (rem.size() <= d) return {IntPolynomial(), num};
    std::vector<BigInt> quot(rem.size() - d, 0);
    for (std::size_t k = rem.size(); k-- > d;) {
        const BigInt c = rem[k];
        if (sgn(c) == 0) continue;
        quot[k - d] = c;
        for (std::size_t j = 0; j <= d; ++j) rem[k - d + j] -= c * den.coefficients()[j];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool deflate_root(IntPolynomial& p, const BigInt& r) {
    if (p.is_zero() || p.degree() == 0) return false;
    // Synthetic division by (x - r).
    const auto& c = p.coefficients();
    std::vector<BigInt> quot(c.size() - 1, 0);
    BigInt carry = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
        carry = carry * r + c[k];
        quot[k - 1] = carry;
    }
    if (carry * r + c[0] != 0) return false;
    p = IntPolynomial(std::move(quot));
    return true;
}

}  // namespace intcay
