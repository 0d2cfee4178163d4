#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "intcay/diophantine.hpp"
#include "intcay/errors.hpp"
#include "intcay/spectra.hpp"
#include "support.hpp"

using namespace intcay;
using testing::ms;

namespace {

bool contains(const std::vector<Solution3>& v, Solution3 s) { return std::find(v.begin(), v.end(), s) != v.end(); }
bool contains(const std::vector<Solution4>& v, Solution4 s) { return std::find(v.begin(), v.end(), s) != v.end(); }

GMultiset b_part(const GMultiset& s, Q8 q) {
    GMultiset out;
    for (const auto& [x, m] : s.entries()) {
        if (x.q == q) out.add(GroupElement{Q8::One, x.a}, m);
    }
    return out;
}

}  // namespace

TEST_CASE("x^2 + y^2 = p z^2") {
    const auto five = solutions_two_squares(5, 1);
    CHECK(contains(five, {2, 1, 1}));
    CHECK(contains(five, {1, 2, 1}));
    CHECK(solutions_two_squares(5, 0).empty());
    CHECK(contains(solutions_two_squares(13, 1), {3, 2, 1}));
    for (const auto& s : solutions_two_squares(5, 40)) {
        CHECK(s.x * s.x + s.y * s.y == 5 * s.z * s.z);
        CHECK(std::gcd(std::gcd(s.x, s.y), s.z) == 1);
    }
    const auto sorted = solutions_two_squares(13, 30);
    CHECK(std::is_sorted(sorted.begin(), sorted.end()));
    CHECK_THROWS_AS(solutions_two_squares(3, 5), DomainError);
    CHECK_THROWS_AS(solutions_two_squares(9, 5), DomainError);
}

TEST_CASE("counterexample seeds are the first primitive solutions up to swap") {
    // by brute force: normalize (x, y) to y <= x, drop duplicates, order by (z, x)
    std::vector<Solution3> expected;
    for (long long z = 1; expected.size() < 3; ++z) {
        std::vector<Solution3> here;
        for (long long y = 0; 2 * y * y <= 5 * z * z; ++y) {
            for (long long x = y; x * x + y * y <= 5 * z * z; ++x) {
                if (x * x + y * y == 5 * z * z && std::gcd(std::gcd(x, y), z) == 1) here.push_back({x, y, z});
            }
        }
        std::sort(here.begin(), here.end());
        expected.insert(expected.end(), here.begin(), here.end());
    }
    expected.resize(3);
    CHECK(counterexample_seeds(3) == expected);
    CHECK(expected == std::vector<Solution3>{{2, 1, 1}, {11, 2, 5}, {22, 19, 13}});
}

TEST_CASE("the (2,1,1) counterexample") {
    const GroupSpec spec = GroupSpec::parse("Q8xZ5");
    const GMultiset s = build_counterexample_5({2, 1, 1});
    CHECK(b_part(s, Q8::I) == ms("Z5", "1:4\n2:3\n3:1"));
    CHECK(b_part(s, Q8::J) == ms("Z5", "1:3\n3:4\n4:1"));
    CHECK(b_part(s, Q8::K).empty());
    CHECK(b_part(s, Q8::One).empty());
    CHECK(s.total() == 32);
    CHECK(is_inverse_closed(spec, s));
    CHECK(build_counterexample_5({1, 2, 1}) == s);

    const HamiltonianReport r = hamiltonian_conditions(spec, s);
    CHECK(r.cond_ii);
    CHECK(r.overall);
    for (const auto& c : r.characters) CHECK(*c.alpha == (c.chi.is_principal() ? 0 : 10));
    CHECK(verify_counterexample(spec, s));
    CHECK_THROWS_AS(build_counterexample_5({2, 2, 1}), DomainError);
}

TEST_CASE("verify_counterexample rejects cone members and non-integral sets") {
    const GroupSpec spec = GroupSpec::parse("Q8xZ5");
    CHECK_FALSE(verify_counterexample(spec, ms(spec, "i;(0):1\n-i;(0):1")));
    const GroupSpec z5 = GroupSpec::parse("Z5");
    CHECK_FALSE(verify_counterexample(z5, ms(z5, "1:1\n4:1")));
}

TEST_CASE("padded builder reproduces the Z5 construction") {
    // B'_i = m a + n a^2, B'_j = n a + m a^3 (halved), B'_k empty
    for (const auto& sol : counterexample_seeds(3)) {
        const long long m = sol.x;
        const long long n = sol.y;
        const GMultiset padded = build_padded_multiset(5, {{{m, n, 0, 0}, {n, 0, m, 0}, {0, 0, 0, 0}}});
        CHECK(padded == build_counterexample_5(sol));
    }
    CHECK_THROWS_AS(build_padded_multiset(5, {{{1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}}), DomainError);
    CHECK_THROWS_AS(build_padded_multiset(5, {{{1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}}), DomainError);
}

TEST_CASE("x^2 + y^2 + z^2 = p alpha^2") {
    CHECK(contains(solutions_three_squares(3, 1), {1, 1, 1, 1}));
    CHECK(contains(solutions_three_squares(6, 1), {1, 1, 2, 1}));
    CHECK(contains(solutions_three_squares(6, 1), {2, 1, 1, 1}));
    CHECK(solutions_three_squares(7, 10).empty());
    CHECK(solutions_three_squares(7, 50).empty());
    for (const auto& s : solutions_three_squares(11, 12)) {
        CHECK(s.x * s.x + s.y * s.y + s.z * s.z == 11 * s.alpha * s.alpha);
        CHECK(std::gcd(std::gcd(s.x, s.y), std::gcd(s.z, s.alpha)) == 1);
    }
    const std::string note = three_squares_note(7, 50, 0);
    CHECK(note.find("4^a(8b+7)") != std::string::npos);
    CHECK(three_squares_note(11, 5, 3).find("4^a(8b+7)") == std::string::npos);
}

TEST_CASE("three-square builder: condition (iii) arithmetic on synthetic tuples") {
    // lambda_hat(B_q) = 2 (m s1 + n s2 + l s3) rotated, s_t = z^t - z^-t, so at
    // the character a=(1) h = 4 [(m^2+n^2+l^2) sum s_t^2 + 2(mn+nl+lm) X],
    // X = s1 s2 + s2 s3 + s3 s1.
    const auto ctx = CycContext::make(7);
    const auto s = [&](long long t) { return from_root_power(ctx, t) - from_root_power(ctx, -t); };
    const CycInt squares = s(1) * s(1) + s(2) * s(2) + s(3) * s(3);
    const CycInt cross = s(1) * s(2) + s(2) * s(3) + s(3) * s(1);
    CHECK(as_rational_integer(squares) == BigInt(-7));
    CHECK_FALSE(as_rational_integer(cross));  // the sketch's cross term does not vanish

    const GroupSpec spec = GroupSpec::parse("Q8xZ7");
    for (const Solution4 tuple : {Solution4{1, 0, 0, 0}, Solution4{2, 1, 0, 0}, Solution4{3, 1, 2, 0}}) {
        const GMultiset built = build_three_square_multiset(7, tuple);
        CHECK(is_inverse_closed(spec, built));
        const HamiltonianReport r = hamiltonian_conditions(spec, built);
        CHECK(r.cond_i);
        CHECK(r.cond_ii);
        const long long sq = tuple.x * tuple.x + tuple.y * tuple.y + tuple.z * tuple.z;
        const long long mixed = tuple.x * tuple.y + tuple.y * tuple.z + tuple.z * tuple.x;
        const CycInt expected = (squares * big(sq) + cross * big(2 * mixed)) * BigInt(4);
        CHECK(r.characters[1].h == expected);
        CHECK_FALSE(r.cond_iii);
    }
    CHECK_THROWS_AS(build_three_square_multiset(5, {1, 0, 0, 0}), DomainError);
}
