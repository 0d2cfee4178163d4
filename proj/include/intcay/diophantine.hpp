#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "intcay/groups.hpp"

namespace intcay {

/// Non-negative solution of x^2 + y^2 = p z^2.
struct Solution3 {
    long long x = 0;
    long long y = 0;
    long long z = 0;

    auto operator<=>(const Solution3&) const = default;
};

/// Non-negative solution of x^2 + y^2 + z^2 = p alpha^2.
struct Solution4 {
    long long x = 0;
    long long y = 0;
    long long z = 0;
    long long alpha = 0;

    auto operator<=>(const Solution4&) const = default;
};

/// Primitive solutions with 1 <= z <= bound, lexicographically sorted.
/// Requires p prime with p = 1 (mod 4).
std::vector<Solution3> solutions_two_squares(long long p, long long bound);

/// The first `count` primitive solutions of x^2 + y^2 = 5 z^2 up to swapping
/// x and y, normalized to y <= x, ordered by (z, x).
std::vector<Solution3> counterexample_seeds(std::size_t count);

/// Primitive solutions with 1 <= alpha <= bound (all orderings of x, y, z),
/// lexicographically sorted. Requires p >= 2.
std::vector<Solution4> solutions_three_squares(long long p, long long bound);

/// The Q8 x Z5 multiset built from a primitive (m, n, alpha) of
/// x^2 + y^2 = 5 z^2 (n <= m after swapping):
///   B_i = {a: 2m, a^2: m+n, a^3: m-n},  B_j = {a: m+n, a^4: m-n, a^3: 2m},
///   B_-i = B_i^-1, B_-j = B_j^-1, and every other B_q empty.
GMultiset build_counterexample_5(const Solution3& sol);

/// The integral-but-not-in-the-cone check: exact verdict integral, cone
/// membership fails, and the brute-force oracle agrees on integrality.
bool verify_counterexample(const GroupSpec& spec, const GMultiset& s);

/// Generic Q8 x Z_p builder. Given B'_i, B'_j, B'_k as multiplicities of
/// a^1 .. a^{p-1} (index t-1 for a^t), with B'_q and B'_q^-1 of disjoint
/// support, doubles them and pads each B_q with an inverse-closed multiset
/// so that B_q + B_-q is constant on Z_p \ {0}. lambda_hat(B_q) becomes
/// 2 lambda_hat(B'_q).
GMultiset build_padded_multiset(int p, const std::array<std::vector<long long>, 3>& reduced);

/// B'_i = m a + n a^2 + l a^3, B'_j = l a + m a^2 + n a^3,
/// B'_k = n a + l a^2 + m a^3 over Q8 x Z_q (q prime >= 7), fed to
/// build_padded_multiset.
GMultiset build_three_square_multiset(int q, const Solution4& sol);

/// Explanation printed when the x^2+y^2+z^2 = 7 alpha^2 search comes back empty.
std::string three_squares_note(long long p, long long bound, std::size_t found);

}  // namespace intcay
