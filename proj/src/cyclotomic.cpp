#include "intcay/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "intcay/errors.hpp"

namespace intcay {

namespace {

IntPolynomial cyclotomic_memo(unsigned m, std::map<unsigned, IntPolynomial>& memo) {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    // x^m - 1
    IntPolynomial result = IntPolynomial::monomial(m) - IntPolynomial::constant(1);
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [quot, rem] = divmod_monic(result, cyclotomic_memo(d, memo));
        if (!rem.is_zero()) throw InconsistencyError("Phi_d does not divide x^m - 1");
        result = std::move(quot);
    }
    memo.emplace(m, result);
    return result;
}

// In-place reduction of a coefficient vector modulo the monic Phi_m.
void reduce_mod(std::vector<BigInt>& c, const IntPolynomial& modulus) {
    const auto d = static_cast<std::size_t>(modulus.degree());
    const auto& phi = modulus.coefficients();
    for (std::size_t k = c.size(); k-- > d;) {
        if (sgn(c[k]) == 0) continue;
        const BigInt lead = c[k];
        for (std::size_t j = 0; j <= d; ++j) c[k - d + j] -= lead * phi[j];
    }
    c.resize(d, 0);
}

}  // namespace

IntPolynomial cyclotomic_poly(unsigned m) {
    if (m == 0) throw DomainError("cyclotomic_poly: m must be >= 1");
    std::map<unsigned, IntPolynomial> memo;
    return cyclotomic_memo(m, memo);
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned rest = m;
    for (unsigned p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        result -= result / p;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

// ---------------------------------------------------------------------------

CycContext::CycContext(unsigned m) : m_(m), phi_(euler_phi(m)), modulus_(cyclotomic_poly(m)) {
    if (static_cast<long long>(phi_) != modulus_.degree()) throw InconsistencyError("deg Phi_m != phi(m)");
    powers_.reserve(m_);
    std::vector<BigInt> current(phi_, 0);
    current[0] = 1;
    for (unsigned t = 0; t < m_; ++t) {
        powers_.push_back(current);
        // Multiply by x and reduce.
        std::vector<BigInt> next(phi_ + 1, 0);
        for (unsigned k = 0; k < phi_; ++k) next[k + 1] = current[k];
        reduce_mod(next, modulus_);
        current = std::move(next);
    }
}

std::shared_ptr<const CycContext> CycContext::make(unsigned m) {
    if (m == 0) throw DomainError("cyclotomic context: m must be >= 1");
    return std::shared_ptr<const CycContext>(new CycContext(m));
}

const std::vector<BigInt>& CycContext::root_power(long long t) const {
    const long long mm = m_;
    return powers_[static_cast<std::size_t>(((t % mm) + mm) % mm)];
}

// ---------------------------------------------------------------------------

CycInt::CycInt(CycContextPtr ctx) : ctx_(std::move(ctx)), coeffs_(ctx_->phi(), 0) {}

CycInt::CycInt(CycContextPtr ctx, std::vector<BigInt> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < ctx_->phi()) coeffs_.resize(ctx_->phi(), 0);
    reduce_mod(coeffs_, ctx_->modulus());
}

CycInt CycInt::from_integer(CycContextPtr ctx, const BigInt& c) {
    CycInt out(std::move(ctx));
    out.coeffs_[0] = c;
    return out;
}

CycInt CycInt::from_root_power(CycContextPtr ctx, long long t) {
    CycInt out(ctx);
    out.coeffs_ = ctx->root_power(t);
    return out;
}

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

std::optional<BigInt> CycInt::as_rational_integer() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) return std::nullopt;
    }
    return coeffs_[0];
}

CycInt CycInt::conjugate() const {
    CycInt out(ctx_);
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (sgn(coeffs_[t]) != 0) out.add_scaled_power(-static_cast<long long>(t), coeffs_[t]);
    }
    return out;
}

double CycInt::approx_real() const {
    double sum = 0.0;
    const double m = ctx_->m();
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        sum += coeffs_[t].get_d() * std::cos(2.0 * std::numbers::pi * static_cast<double>(t) / m);
    }
    return sum;
}

void CycInt::check_same(const CycInt& other) const {
    if (ctx_->m() != other.ctx_->m()) {
        throw DomainError("cyclotomic context mismatch: zeta_" + std::to_string(ctx_->m()) + " vs zeta_" +
                          std::to_string(other.ctx_->m()));
    }
}

CycInt& CycInt::operator+=(const CycInt& other) {
    check_same(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
    check_same(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& other) { return *this = *this * other; }

CycInt& CycInt::add_scaled_power(long long t, const BigInt& c) {
    const auto& p = ctx_->root_power(t);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(p[k]) != 0) coeffs_[k] += c * p[k];
    }
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycInt operator*(const CycInt& x, const CycInt& y) {
    x.check_same(y);
    const std::size_t n = x.coeffs_.size();
    std::vector<BigInt> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y.coeffs_[j]) != 0) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return CycInt(x.ctx_, std::move(prod));
}

CycInt operator*(CycInt x, const BigInt& c) {
    for (auto& v : x.coeffs_) v *= c;
    return x;
}

bool operator==(const CycInt& x, const CycInt& y) {
    return x.ctx_->m() == y.ctx_->m() && x.coeffs_ == y.coeffs_;
}

std::string CycInt::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "z";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

CycInt from_root_power(const CycContextPtr& ctx, long long t) { return CycInt::from_root_power(ctx, t); }
CycInt add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }
CycInt negate(const CycInt& a) { return -a; }
std::optional<BigInt> as_rational_integer(const CycInt& a) { return a.as_rational_integer(); }

}  // namespace intcay
