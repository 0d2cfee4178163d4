#include "intcay/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "intcay/algebra.hpp"
#include "intcay/errors.hpp"
#include "intcay/oracle.hpp"
#include "intcay/spectra.hpp"

namespace intcay {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

long long isqrt(long long v) {
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

GroupElement lift(Q8 q, int t, int p) { return GroupElement{q, {((t % p) + p) % p}}; }

}  // namespace

std::vector<Solution3> solutions_two_squares(long long p, long long bound) {
    if (!is_prime(p) || p % 4 != 1) {
        throw DomainError("x^2 + y^2 = p z^2 enumeration needs a prime p = 1 (mod 4), got " + std::to_string(p));
    }
    std::vector<Solution3> out;
    for (long long z = 1; z <= bound; ++z) {
        const long long target = p * z * z;
        for (long long x = 0; x * x <= target; ++x) {
            const long long rest = target - x * x;
            const long long y = isqrt(rest);
            if (y * y != rest) continue;
            if (std::gcd(std::gcd(x, y), z) != 1) continue;
            out.push_back({x, y, z});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Solution3> counterexample_seeds(std::size_t count) {
    std::vector<Solution3> seeds;
    for (long long bound = 1; seeds.size() < count; bound *= 2) {
        seeds.clear();
        for (const auto& s : solutions_two_squares(5, bound)) {
            if (s.y <= s.x) seeds.push_back(s);
        }
        std::sort(seeds.begin(), seeds.end(), [](const Solution3& l, const Solution3& r) {
            return std::tie(l.z, l.x, l.y) < std::tie(r.z, r.x, r.y);
        });
    }
    seeds.resize(count);
    return seeds;
}

std::vector<Solution4> solutions_three_squares(long long p, long long bound) {
    if (p < 2) throw DomainError("x^2 + y^2 + z^2 = p alpha^2 enumeration needs p >= 2");
    std::vector<Solution4> out;
    for (long long alpha = 1; alpha <= bound; ++alpha) {
        const long long target = p * alpha * alpha;
        for (long long x = 0; x * x <= target; ++x) {
            for (long long y = 0; x * x + y * y <= target; ++y) {
                const long long rest = target - x * x - y * y;
                const long long z = isqrt(rest);
                if (z * z != rest) continue;
                if (std::gcd(std::gcd(std::gcd(x, y), z), alpha) != 1) continue;
                out.push_back({x, y, z, alpha});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

GMultiset build_counterexample_5(const Solution3& sol) {
    long long m = sol.x, n = sol.y;
    if (m * m + n * n != 5 * sol.z * sol.z || sol.z <= 0) {
        throw DomainError("(" + std::to_string(sol.x) + "," + std::to_string(sol.y) + "," + std::to_string(sol.z) +
                          ") does not solve x^2 + y^2 = 5 z^2");
    }
    if (std::gcd(std::gcd(m, n), sol.z) != 1) throw DomainError("counterexample needs a primitive solution");
    if (n > m) std::swap(m, n);

    constexpr int p = 5;
    GMultiset s;
    const auto add_pair = [&](Q8 q, int t, long long mult) {
        s.add(lift(q, t, p), big(mult));
        s.add(lift(q8_negate(q), -t, p), big(mult));
    };
    add_pair(Q8::I, 1, 2 * m);
    add_pair(Q8::I, 2, m + n);
    add_pair(Q8::I, 3, m - n);
    add_pair(Q8::J, 1, m + n);
    add_pair(Q8::J, 4, m - n);
    add_pair(Q8::J, 3, 2 * m);
    return s;
}

bool verify_counterexample(const GroupSpec& spec, const GMultiset& s) {
    if (!is_inverse_closed(spec, s)) return false;
    if (!is_integral(spec, s)) return false;
    if (cone_decompose(spec, s).ok()) return false;
    return oracle_check(spec, s).integral;
}

GMultiset build_padded_multiset(int p, const std::array<std::vector<long long>, 3>& reduced) {
    constexpr std::array<Q8, 3> units = {Q8::I, Q8::J, Q8::K};
    GMultiset s;
    for (std::size_t u = 0; u < 3; ++u) {
        const auto& part = reduced[u];
        if (part.size() != static_cast<std::size_t>(p - 1)) {
            throw DomainError("padded builder: expected " + std::to_string(p - 1) + " multiplicities per part");
        }
        // c(t) = 2 * (B'(a^t) + B'(a^-t)), symmetric in t.
        std::vector<long long> c(static_cast<std::size_t>(p), 0);
        for (int t = 1; t < p; ++t) {
            const long long here = part[static_cast<std::size_t>(t - 1)];
            const long long there = part[static_cast<std::size_t>(p - t - 1)];
            if (here < 0) throw DomainError("padded builder: negative multiplicity");
            if (here > 0 && there > 0) throw DomainError("padded builder: B'_q meets its inverse");
            c[static_cast<std::size_t>(t)] = 2 * (here + there);
        }
        const long long top = *std::max_element(c.begin(), c.end());
        for (int t = 1; t < p; ++t) {
            const long long mult = 2 * part[static_cast<std::size_t>(t - 1)] + (top - c[static_cast<std::size_t>(t)]) / 2;
            s.add(lift(units[u], t, p), big(mult));
            s.add(lift(q8_negate(units[u]), -t, p), big(mult));
        }
    }
    return s;
}

GMultiset build_three_square_multiset(int q, const Solution4& sol) {
    if (q < 7 || !is_prime(q)) throw DomainError("three-square builder needs a prime group order >= 7");
    std::array<std::vector<long long>, 3> parts;
    const std::array<std::array<long long, 3>, 3> coeffs = {{
        {sol.x, sol.y, sol.z},  // B'_i = m a + n a^2 + l a^3
        {sol.z, sol.x, sol.y},  // B'_j = l a + m a^2 + n a^3
        {sol.y, sol.z, sol.x},  // B'_k = n a + l a^2 + m a^3
    }};
    for (std::size_t u = 0; u < 3; ++u) {
        parts[u].assign(static_cast<std::size_t>(q - 1), 0);
        for (std::size_t t = 0; t < 3; ++t) parts[u][t] = coeffs[u][t];
    }
    return build_padded_multiset(q, parts);
}

std::string three_squares_note(long long p, long long bound, std::size_t found) {
    std::string note = "searched x^2 + y^2 + z^2 = " + std::to_string(p) + "*alpha^2 for 1 <= alpha <= " +
                       std::to_string(bound) + ": " + std::to_string(found) + " primitive solution(s)";
    if (p == 7 && found == 0) {
        note +=
            "\nnote: the claimed infinite family for p = 7 does not exist: 7*alpha^2 always has the form "
            "4^a(8b+7), which the three-square theorem excludes, so no non-trivial solution exists and no "
            "Q8xZ7 multisets are built";
    }
    return note;
}

}  // namespace intcay
