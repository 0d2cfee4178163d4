#include <doctest.h>

#include <random>

#include "intcay/errors.hpp"
#include "intcay/oracle.hpp"
#include "intcay/sampling.hpp"
#include "support.hpp"

using namespace intcay;
using testing::ms;

namespace {

IntMatrix matrix(std::size_t n, std::initializer_list<long> rows) {
    IntMatrix m(n);
    std::size_t k = 0;
    for (long v : rows) {
        m(k / n, k % n) = v;
        ++k;
    }
    return m;
}

IntMatrix naive_product(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix out(x.size());
    for (std::size_t r = 0; r < x.size(); ++r) {
        for (std::size_t c = 0; c < x.size(); ++c) {
            for (std::size_t k = 0; k < x.size(); ++k) out(r, c) += x(r, k) * y(k, c);
        }
    }
    return out;
}

// p(M) by Horner's rule.
IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& m) {
    IntMatrix acc(m.size());
    for (long long k = p.degree(); k >= 0; --k) {
        acc = naive_product(acc, m);
        for (std::size_t d = 0; d < m.size(); ++d) acc(d, d) += p.coefficient(static_cast<std::size_t>(k));
    }
    return acc;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long range) {
    IntMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            m(r, c) = static_cast<long>(rng() % static_cast<unsigned long>(2 * range + 1)) - range;
            m(c, r) = m(r, c);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("determinants") {
    CHECK(determinant(IntMatrix(0)) == 1);
    CHECK(determinant(matrix(2, {0, 1, 1, 0})) == -1);
    CHECK(determinant(matrix(3, {2, 0, 1, 1, 3, 2, 1, 1, 2})) == 6);
    CHECK(determinant(matrix(3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 0);
    CHECK(determinant(matrix(3, {0, 0, 1, 0, 1, 0, 1, 0, 0})) == -1);
    // Vandermonde on 1, 2, 3, 4: product of differences = 12
    CHECK(determinant(matrix(4, {1, 1, 1, 1, 1, 2, 4, 8, 1, 3, 9, 27, 1, 4, 16, 64})) == 12);
}

TEST_CASE("characteristic polynomial of K5") {
    const GroupSpec z5 = GroupSpec::parse("Z5");
    const IntMatrix adj = adjacency_matrix(z5, ms(z5, "1:1\n2:1\n3:1\n4:1"));
    CHECK(adj.is_symmetric());
    CHECK(adj.trace() == 0);
    const IntPolynomial p = char_poly(adj);
    CHECK(p.to_string() == "x^5 - 10*x^3 - 20*x^2 - 15*x - 4");
    CHECK(integer_spectrum(p, 4) == std::map<BigInt, std::size_t>{{4, 1}, {-1, 4}});
    CHECK_FALSE(integer_spectrum(p, 3));  // 4 is outside the bound
}

TEST_CASE("adjacency entries are mu(g h^-1)") {
    const GroupSpec spec = GroupSpec::parse("Q8xZ3");
    const GMultiset s = ms(spec, "i;(1):2\n-i;(2):2\n-1;(0):1");
    const IntMatrix adj = adjacency_matrix(spec, s);
    const auto elems = spec.elements();
    for (std::size_t g = 0; g < elems.size(); ++g) {
        for (std::size_t h = 0; h < elems.size(); ++h) {
            CHECK(adj(g, h) == s.multiplicity(mul(spec, elems[g], inv(spec, elems[h]))));
        }
    }
    CHECK(adj.is_symmetric());
}

TEST_CASE("Cayley-Hamilton and the trace/determinant coefficients") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 15; ++round) {
        const std::size_t n = 1 + rng() % 7;
        const IntMatrix m = random_symmetric(rng, n, 5);
        const IntPolynomial p = char_poly(m, Execution::Serial);
        CHECK(p.degree() == static_cast<long long>(n));
        CHECK(p.is_monic());
        CHECK(p.coefficient(n - 1) == -m.trace());
        CHECK(p.coefficient(0) == (n % 2 ? -1 : 1) * determinant(m));
        CHECK(evaluate_at(p, m) == IntMatrix(n));
        CHECK(p == char_poly(m, Execution::Parallel));
        // any n + 1 distinct points give the same interpolant
        std::vector<BigInt> points{10, -7, 3, 0, 25, -1, 4, 8};
        points.resize(n + 1);
        CHECK(p == char_poly(m, points));
    }
    CHECK_THROWS_AS(char_poly(IntMatrix(3), {BigInt(0), BigInt(1), BigInt(1), BigInt(2)}), DomainError);
}

TEST_CASE("matrix products: 64-bit path and big-integer path") {
    std::mt19937_64 rng(31);
    const IntMatrix small = random_symmetric(rng, 9, 100);
    CHECK(multiply(small, small, Execution::Serial) == naive_product(small, small));
    CHECK(multiply(small, small, Execution::Parallel) == naive_product(small, small));
    IntMatrix big_entries = small;
    big_entries(0, 0) = BigInt("123456789012345678901234567890");
    CHECK(multiply(big_entries, small) == naive_product(big_entries, small));
}

TEST_CASE("integer root deflation") {
    // (x - 1)(x + 2)(x + 3)
    CHECK(integer_spectrum(IntPolynomial(std::vector<BigInt>{-6, 1, 4, 1}), 3) ==
          std::map<BigInt, std::size_t>{{-3, 1}, {-2, 1}, {1, 1}});
    // (x - 2)^2 (x + 3)
    CHECK(integer_spectrum(IntPolynomial(std::vector<BigInt>{12, -8, -1, 1}), 3) ==
          std::map<BigInt, std::size_t>{{-3, 1}, {2, 2}});
    // x^2 - 2
    CHECK_FALSE(integer_spectrum(IntPolynomial(std::vector<BigInt>{-2, 0, 1}), 10));
}

TEST_CASE("oracle verdicts") {
    const GroupSpec z5 = GroupSpec::parse("Z5");
    CHECK(oracle_check(z5, ms(z5, "1:1\n2:1\n3:1\n4:1")).integral);
    const OracleResult cycle = oracle_check(z5, ms(z5, "1:1\n4:1"));
    CHECK_FALSE(cycle.integral);
    CHECK_FALSE(cycle.spectrum);
    CHECK(cycle.charpoly.to_string() == "x^5 - 5*x^3 + 5*x - 2");
    CHECK_THROWS_AS(oracle_check(z5, ms(z5, "1:1")), DomainError);
    CHECK(oracle_check(GroupSpec::parse("Z3"), GMultiset{}).spectrum == std::map<BigInt, std::size_t>{{0, 3}});
}

TEST_CASE("class sums commute with every Cayley matrix") {
    const GroupSpec spec = GroupSpec::parse("Q8xZ3");
    sampling::Rng rng(37);
    const GMultiset t = ms(spec, "i;(0):1\n-i;(0):1\n-1;(1):2\n-1;(2):2");
    CHECK(is_conjugation_invariant(spec, t));
    for (int k = 0; k < 10; ++k) CHECK(commute_check(spec, sampling::random_inverse_closed(spec, rng, 3), t));

    // a non-central, inverse-closed T generally does not commute
    const GMultiset not_class = ms(spec, "i;(0):1\n-i;(0):2");
    CHECK_FALSE(is_conjugation_invariant(spec, not_class));
    CHECK_THROWS_AS(commute_check(spec, t, not_class), DomainError);
    try {
        commute_check(GroupSpec::parse("Q8"), GMultiset{}, ms("Q8", "i:1"));
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("conjugation") != std::string::npos);
    }
    CHECK_THROWS_AS(commute_check(spec, ms(spec, "j;(1):1"), t), DomainError);
}
