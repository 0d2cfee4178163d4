#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "intcay/sampling.hpp"
#include "intcay/selftest.hpp"
#include "intcay/spectra.hpp"

using namespace intcay;

TEST_CASE("factor lists of order at most 24") {
    const auto lists = sampling::factor_lists_up_to(24);
    std::set<std::vector<int>> seen;
    for (const auto& a : lists) {
        CHECK(a.order() <= 24);
        CHECK(std::is_sorted(a.factors().begin(), a.factors().end()));
        CHECK(seen.insert(a.factors()).second);
    }
    // brute force count over non-decreasing lists
    std::size_t count = 0;
    std::function<void(int, long long)> walk = [&](int lo, long long product) {
        for (int n = lo; product * n <= 24; ++n) {
            ++count;
            walk(n, product * n);
        }
    };
    walk(2, 1);
    CHECK(lists.size() == count);
    CHECK(seen.count({2, 2, 2, 3}) == 1);
    CHECK(seen.count({24}) == 1);
    CHECK(seen.count({5, 5}) == 0);
}

TEST_CASE("generators produce inverse-closed multisets of the promised shape") {
    sampling::Rng rng(41);
    const GroupSpec spec = GroupSpec::parse("Q8xZ5");
    const AtomPartition atoms = atom_partition(spec);
    const AtomPartition atoms_a = atom_partition(GroupSpec::abelian(spec.abelian_part()));
    for (int k = 0; k < 50; ++k) {
        CHECK(is_inverse_closed(spec, sampling::random_inverse_closed(spec, rng, 3)));
        CHECK(cone_decompose(atoms, sampling::random_cone_member(atoms, rng, 3)).ok());
        const GMultiset c = sampling::random_hamiltonian_candidate(spec, atoms_a, rng, 2);
        CHECK(is_inverse_closed(spec, c));
        const HamiltonianReport r = hamiltonian_conditions(spec, c);
        CHECK(r.cond_i);
        CHECK(r.cond_ii);
        const GMultiset set = sampling::random_hamiltonian_candidate(spec, atoms_a, rng, 1);
        for (const auto& [x, m] : set.entries()) CHECK(m == 1);
    }
}

TEST_CASE("the seed fixes the stream") {
    const GroupSpec spec = GroupSpec::parse("Z12");
    sampling::Rng a(99);
    sampling::Rng b(99);
    for (int k = 0; k < 10; ++k) {
        CHECK(sampling::random_inverse_closed(spec, a, 3) == sampling::random_inverse_closed(spec, b, 3));
    }
}

TEST_CASE("corrupted Q8 table fails the relation suite") {
    CHECK(selftest::q8_relations().passed);
    Q8Table bad = kQ8Table;
    bad[2][2] = static_cast<std::uint8_t>(Q8::One);  // i^2 = 1
    CHECK_FALSE(selftest::q8_relations(bad).passed);
}

TEST_CASE("bookkeeping catches a wrong spectrum") {
    const GroupSpec spec = GroupSpec::parse("Z5");
    GMultiset k5;
    for (int a = 1; a < 5; ++a) k5.add(GroupElement{Q8::One, {a}});
    selftest::Bookkeeping book;
    book.record("k5", spec, k5, std::map<BigInt, std::size_t>{{4, 1}, {-1, 4}});
    CHECK(book.failures().empty());
    book.record("wrong", spec, k5, std::map<BigInt, std::size_t>{{4, 1}, {-1, 3}, {0, 1}});
    book.record("short", spec, k5, std::map<BigInt, std::size_t>{{4, 1}, {-1, 3}});
    CHECK(book.failures().size() == 2);
    CHECK(book.checked() == 3);
}

TEST_CASE("randomized suites are reproducible for a fixed seed") {
    selftest::Options options;
    options.quick = true;
    selftest::Bookkeeping first_book;
    selftest::Bookkeeping second_book;
    const auto first = selftest::simple_q8_z5(options, first_book);
    const auto second = selftest::simple_q8_z5(options, second_book);
    CHECK(first.passed);
    CHECK(first.detail == second.detail);
    CHECK(first_book.checked() == second_book.checked());

    options.seed = 12345;
    CHECK(selftest::elementary_abelian(options).detail == selftest::elementary_abelian(options).detail);
    selftest::Bookkeeping other_book;
    const auto other = selftest::simple_q8_z5(options, other_book);
    CHECK(other.passed);
    CHECK(other.detail != first.detail);  // integral counts differ with the stream
}
