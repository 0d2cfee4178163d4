#include "intcay/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "intcay/errors.hpp"

namespace intcay {

namespace {

BigInt max_abs(const IntMatrix& m) {
    BigInt best = 0;
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (abs(m(r, c)) > best) best = abs(m(r, c));
        }
    }
    return best;
}

}  // namespace

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = r + 1; c < n_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) return false;
        }
    }
    return true;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y, Execution exec) {
    if (x.size() != y.size()) throw DomainError("multiply: dimension mismatch");
    const std::size_t n = x.size();
    IntMatrix out(n);
    const BigInt bound = max_abs(x) * max_abs(y) * static_cast<unsigned long>(n);
    if (bound < BigInt(1) << 62) {
        std::vector<std::int64_t> a(n * n), b(n * n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                a[r * n + c] = x(r, c).get_si();
                b[r * n + c] = y(r, c).get_si();
            }
        }
        for_each_index(n, exec, [&](std::size_t r) {
            std::vector<std::int64_t> row(n, 0);
            for (std::size_t k = 0; k < n; ++k) {
                const std::int64_t v = a[r * n + k];
                if (v == 0) continue;
                for (std::size_t c = 0; c < n; ++c) row[c] += v * b[k * n + c];
            }
            for (std::size_t c = 0; c < n; ++c) out(r, c) = static_cast<long>(row[c]);
        });
        return out;
    }
    for_each_index(n, exec, [&](std::size_t r) {
        for (std::size_t c = 0; c < n; ++c) {
            BigInt acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += x(r, k) * y(k, c);
            out(r, c) = acc;
        }
    });
    return out;
}

IntMatrix adjacency_matrix(const GroupSpec& spec, const GMultiset& s) {
    validate_support(spec, s);
    const MultiplicationTable& table = multiplication_table(spec);
    const std::size_t n = table.size();
    std::vector<BigInt> mu(n, 0);
    for (const auto& [g, m] : s.entries()) mu[spec.index_of(g)] = m;
    IntMatrix a(n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) a(g, h) = mu[table.product(g, table.inverse(h))];
    }
    return a;
}

BigInt determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(m(swap_row, k)) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
            sign = -sign;
        }
        const BigInt pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                BigInt v = m(i, j) * pivot - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = pivot;
    }
    return sign * m(n - 1, n - 1);
}

std::vector<BigInt> default_evaluation_points(std::size_t count) {
    std::vector<BigInt> pts;
    pts.reserve(count);
    for (long k = 0; pts.size() < count; ++k) {
        if (k == 0) {
            pts.emplace_back(0);
            continue;
        }
        pts.emplace_back(k);
        if (pts.size() < count) pts.emplace_back(-k);
    }
    return pts;
}

IntPolynomial char_poly(const IntMatrix& m, Execution exec) {
    return char_poly(m, default_evaluation_points(m.size() + 1), exec);
}

IntPolynomial char_poly(const IntMatrix& m, const std::vector<BigInt>& points, Execution exec) {
    const std::size_t n = m.size();
    if (points.size() != n + 1) throw DomainError("char_poly: need exactly n + 1 evaluation points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) throw DomainError("char_poly: evaluation points must be distinct");
        }
    }

    std::vector<BigInt> values(n + 1);
    for_each_index(n + 1, exec, [&](std::size_t idx) {
        IntMatrix shifted(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) shifted(r, c) = -m(r, c);
            shifted(r, r) += points[idx];
        }
        values[idx] = determinant(std::move(shifted));
    });

    // Divided differences of an integer polynomial at integer nodes are
    // integers, so every division below is exact.
    std::vector<BigInt> dd = values;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = n; i >= k; --i) {
            dd[i] = divexact(dd[i] - dd[i - 1], points[i] - points[i - k]);
        }
    }
    IntPolynomial p = IntPolynomial::constant(dd[n]);
    for (std::size_t k = n; k-- > 0;) {
        p = p * IntPolynomial({-points[k], BigInt(1)}) + IntPolynomial::constant(dd[k]);
    }
    if (p.degree() != static_cast<long long>(n) || !p.is_monic()) {
        throw InconsistencyError("interpolated characteristic polynomial is not monic of degree n");
    }
    return p;
}

std::optional<std::map<BigInt, std::size_t>> integer_spectrum(const IntPolynomial& p, const BigInt& bound) {
    if (!p.is_monic()) throw DomainError("integer_spectrum: polynomial must be monic");
    IntPolynomial rest = p;
    std::map<BigInt, std::size_t> roots;
    for (BigInt r = -bound; r <= bound && rest.degree() > 0; ++r) {
        while (deflate_root(rest, r)) ++roots[r];
    }
    if (rest.degree() > 0) return std::nullopt;
    return roots;
}

OracleResult oracle_check(const GroupSpec& spec, const GMultiset& s, Execution exec) {
    if (!is_inverse_closed(spec, s)) throw DomainError("oracle: multiset is not inverse-closed");
    OracleResult result;
    result.charpoly = char_poly(adjacency_matrix(spec, s), exec);
    result.spectrum = integer_spectrum(result.charpoly, s.total());
    result.integral = result.spectrum.has_value();
    return result;
}

bool is_conjugation_invariant(const GroupSpec& spec, const GMultiset& t) {
    validate_support(spec, t);
    const MultiplicationTable& table = multiplication_table(spec);
    const std::size_t n = table.size();
    std::vector<BigInt> mu(n, 0);
    for (const auto& [x, m] : t.entries()) mu[spec.index_of(x)] = m;
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t x = 0; x < n; ++x) {
            if (mu[table.product(table.product(g, x), table.inverse(g))] != mu[x]) return false;
        }
    }
    return true;
}

bool commute_check(const GroupSpec& spec, const GMultiset& s, const GMultiset& t, Execution exec) {
    if (!is_conjugation_invariant(spec, t)) {
        throw DomainError("commute_check: T is not invariant under conjugation (gT != Tg for some g)");
    }
    if (!is_inverse_closed(spec, s) || !is_inverse_closed(spec, t)) {
        throw DomainError("commute_check: S and T must be inverse-closed");
    }
    const IntMatrix as = adjacency_matrix(spec, s);
    const IntMatrix at = adjacency_matrix(spec, t);
    return multiply(as, at, exec) == multiply(at, as, exec);
}

}  // namespace intcay
