#pragma once

#include <map>
#include <optional>
#include <vector>

#include "intcay/groups.hpp"
#include "intcay/parallel.hpp"
#include "intcay/polynomial.hpp"

namespace intcay {

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n = 0) : n_(n), data_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    BigInt trace() const;
    bool is_symmetric() const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<BigInt> data_;
};

/// Rows are computed independently; uses a 64-bit kernel when the entry
/// bounds guarantee no overflow.
IntMatrix multiply(const IntMatrix& x, const IntMatrix& y, Execution exec = Execution::Parallel);

/// Entry (g, h) = mu_S(g h^{-1}), rows and columns in canonical element order.
IntMatrix adjacency_matrix(const GroupSpec& spec, const GMultiset& s);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(IntMatrix m);

/// 0, 1, -1, 2, -2, ... (count points).
std::vector<BigInt> default_evaluation_points(std::size_t count);

/// det(xI - M): det(tI - M) at n + 1 distinct integers, then exact Newton
/// interpolation. Determinant evaluations are the parallel kernel.
IntPolynomial char_poly(const IntMatrix& m, Execution exec = Execution::Parallel);
IntPolynomial char_poly(const IntMatrix& m, const std::vector<BigInt>& points, Execution exec = Execution::Parallel);

/// Full deflation of a monic polynomial by integer roots in [-bound, bound].
/// Empty when some root is not an integer in that range.
std::optional<std::map<BigInt, std::size_t>> integer_spectrum(const IntPolynomial& p, const BigInt& bound);

struct OracleResult {
    bool integral = false;
    IntPolynomial charpoly;
    std::optional<std::map<BigInt, std::size_t>> spectrum;
};

/// Brute-force ground truth: adjacency matrix, characteristic polynomial,
/// integer root deflation with bound total(S).
OracleResult oracle_check(const GroupSpec& spec, const GMultiset& s, Execution exec = Execution::Parallel);

/// mu_T(g t g^{-1}) = mu_T(t) for all g, t.
bool is_conjugation_invariant(const GroupSpec& spec, const GMultiset& t);

/// A_S A_T == A_T A_S. Throws DomainError when T is not conjugation-invariant
/// or either multiset is not inverse-closed.
bool commute_check(const GroupSpec& spec, const GMultiset& s, const GMultiset& t,
                   Execution exec = Execution::Parallel);

}  // namespace intcay
