#include <doctest.h>

#include "intcay/errors.hpp"
#include "intcay/oracle.hpp"
#include "intcay/sampling.hpp"
#include "intcay/selftest.hpp"
#include "intcay/spectra.hpp"
#include "support.hpp"

using namespace intcay;
using testing::ms;

TEST_CASE("characters of Z2 x Z3") {
    const AbelianGroup a({2, 3});
    const auto chars = characters(a);
    REQUIRE(chars.size() == 6);
    CHECK(chars[0].is_principal());
    CHECK(format_character(chars[4]) == "(1,1)");
    // exponent of A is 6: chi_(1,1)((1,2)) = zeta_6^{3*1 + 2*2} = zeta_6^1
    CHECK(character_exponent(a, chars[4], {1, 2}) == 1);
    // orthogonality: every non-principal character sums to zero over A
    const auto ctx = CycContext::make(6);
    const GroupSpec spec = GroupSpec::abelian(a);
    GMultiset all;
    for (const auto& x : spec.elements()) all.add(x);
    for (const auto& chi : chars) {
        CHECK(char_sum(ctx, a, chi, all) == CycInt::from_integer(ctx, chi.is_principal() ? 6 : 0));
    }
}

TEST_CASE("complete graph K5 and the 5-cycle") {
    const GroupSpec z5 = GroupSpec::parse("Z5");
    const Spectrum k5 = spectrum(z5, ms(z5, "1:1\n2:1\n3:1\n4:1"));
    CHECK(k5.is_integral());
    CHECK(k5.to_text() == "4 x1; -1 x4");
    CHECK(k5.to_machine() == "4 x 1;-1 x 4");

    const GMultiset cycle = ms(z5, "1:1\n4:1");
    const AbelianVerdict v = abelian_verdict(z5, cycle);
    CHECK_FALSE(v.integral);
    REQUIRE(v.irrational_character);
    CHECK(format_character(*v.irrational_character) == "(1)");
    CHECK_FALSE(v.cone.ok());
    const Spectrum c5 = spectrum(z5, cycle);
    CHECK_FALSE(c5.is_integral());
    CHECK(c5.dimension() == 5);
    CHECK(c5.entries().front().value.to_string() == "2");
}

TEST_CASE("rho_eps is a representation with the Q8 character") {
    for (Q8 x : kQ8Elements) {
        const Mat2 m = rho_epsilon(x);
        const GaussianInt trace = m[0][0] + m[1][1];
        CHECK(trace == GaussianInt{q8_character(Q8Irrep::Epsilon, x), 0});
        for (Q8 y : kQ8Elements) CHECK(mat2_mul(m, rho_epsilon(y)) == rho_epsilon(q8_mul(x, y)));
    }
    // linear characters are homomorphisms to {+-1}
    for (Q8Irrep rho : kQ8LinearIrreps) {
        for (Q8 x : kQ8Elements) {
            for (Q8 y : kQ8Elements) {
                CHECK(q8_character(rho, q8_mul(x, y)) == q8_character(rho, x) * q8_character(rho, y));
            }
        }
    }
    CHECK(q8_character(Q8Irrep::LambdaI, Q8::J) == -1);
    CHECK(q8_character(Q8Irrep::LambdaI, Q8::I) == 1);
}

TEST_CASE("golden example over Q8 x Z3") {
    const GroupSpec spec = GroupSpec::parse("Q8xZ3");
    const GMultiset s = selftest::golden_multiset();
    const HamiltonianReport r = hamiltonian_conditions(spec, s);
    CHECK(r.cond_i);
    CHECK(r.cond_ii);
    CHECK(r.cond_iii);
    CHECK(r.overall);
    CHECK(r.failure_reason().empty());
    for (const auto& c : r.characters) CHECK(*c.alpha == (c.chi.is_principal() ? 0 : 3));
    CHECK_FALSE(cone_decompose(spec, s).ok());
    const Spectrum sp = spectrum(spec, s);
    CHECK(sp.integer_multiset() == selftest::golden_spectrum());
    CHECK(sp.to_text() == "6 x1; 3 x4; 1 x6; 0 x4; -2 x3; -3 x6");
    CHECK(oracle_check(spec, s).spectrum == selftest::golden_spectrum());
}

TEST_CASE("condition failures name the reason") {
    const GroupSpec spec = GroupSpec::parse("Q8xZ3");
    const HamiltonianReport iii = hamiltonian_conditions(spec, ms(spec, "i;(1):1\n-i;(2):1"));
    CHECK(iii.cond_i);
    CHECK(iii.cond_ii);
    CHECK_FALSE(iii.cond_iii);
    CHECK(iii.failure_reason() == "condition (iii) fails at character a=(1): h = -3 is not a negative perfect square");

    // Over Z3 every inverse-closed B_q + B_-q is atom-constant, so (ii) needs Z5.
    const GroupSpec z5 = GroupSpec::parse("Q8xZ5");
    const HamiltonianReport ii = hamiltonian_conditions(z5, ms(z5, "j;(1):1\n-j;(4):1"));
    CHECK(ii.cond_i);
    CHECK_FALSE(ii.cond_ii);
    CHECK(ii.failure_reason().starts_with("condition (ii) fails for q=j"));

    const HamiltonianReport i = hamiltonian_conditions(z5, ms(z5, "1;(1):1\n1;(4):1"));
    CHECK_FALSE(i.cond_i);
    CHECK(i.failure_reason().starts_with("condition (i) fails"));

    try {
        hamiltonian_conditions(spec, ms(spec, "i;(1):1"));
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("not inverse-closed") != std::string::npos);
    }
}

TEST_CASE("surd eigenvalues when condition (iii) fails") {
    const GroupSpec spec = GroupSpec::parse("Q8xZ3");
    const GMultiset s = ms(spec, "i;(1):1\n-i;(2):1");
    const Spectrum sp = spectrum(spec, s);
    CHECK_FALSE(sp.is_integral());
    CHECK(sp.dimension() == 24);
    bool has_surd = false;
    for (const auto& e : sp.entries()) has_surd = has_surd || e.value.kind() == SpectralValue::Kind::Surd;
    CHECK(has_surd);
    selftest::Bookkeeping book;
    book.record("surd", spec, s, sp);
    CHECK(book.failures().empty());
    CHECK_FALSE(oracle_check(spec, s).integral);
}

TEST_CASE("exact spectra agree with the oracle on random multisets") {
    sampling::Rng rng(17);
    for (const char* text : {"Z4", "Z6", "Z2xZ2", "Z3xZ3", "Z8", "Q8", "Q8xZ2", "Q8xZ3", "Q8xZ4"}) {
        CAPTURE(text);
        const GroupSpec spec = GroupSpec::parse(text);
        const AtomPartition atoms = atom_partition(spec);
        std::optional<AtomPartition> atoms_a;
        if (spec.is_quaternion_product()) atoms_a.emplace(atom_partition(GroupSpec::abelian(spec.abelian_part())));
        for (int k = 0; k < 30; ++k) {
            const GMultiset s = sampling::random_mixed(spec, atoms, atoms_a ? &*atoms_a : nullptr, rng, 2);
            const Spectrum sp = spectrum(spec, s);
            const OracleResult o = oracle_check(spec, s, Execution::Serial);
            CHECK(sp.is_integral() == o.integral);
            CHECK(is_integral(spec, s) == o.integral);
            if (o.integral) CHECK(sp.integer_multiset() == o.spectrum);
            selftest::Bookkeeping book;
            book.record("random", spec, s, sp);
            CHECK(book.failures().empty());
        }
    }
}

TEST_CASE("serial and parallel spectra are identical") {
    sampling::Rng rng(23);
    for (const char* text : {"Z2xZ3xZ5", "Q8xZ5", "Q8xZ3xZ3"}) {
        const GroupSpec spec = GroupSpec::parse(text);
        for (int k = 0; k < 5; ++k) {
            const GMultiset s = sampling::random_inverse_closed(spec, rng, 3);
            CHECK(spectrum(spec, s, Execution::Serial).to_machine() == spectrum(spec, s, Execution::Parallel).to_machine());
        }
    }
}

TEST_CASE("elementary abelian analysis by hand") {
    // B_i = {(1,0)}, B_-i = {(2,0)}: B'_i = {(1,0)}, W = 1,
    // T = (d_(1,0) - d_(2,0))^2 = d_(2,0) - 2 d_0 + d_(1,0).
    const GroupSpec spec = GroupSpec::parse("Q8xZ3xZ3");
    const ElementaryAbelianReport r = elementary_abelian_analysis(spec, ms(spec, "i;(1,0):1\n-i;(2,0):1"));
    CHECK(r.p == 3);
    CHECK(r.d == 2);
    CHECK(r.weight == 1);
    CHECK(r.identity_coefficient == -2);
    CHECK(r.off_identity_sum == 2);
    CHECK(r.identity_check);
    CHECK(r.sum_check);
    CHECK(r.constant_on_atoms);
    CHECK_FALSE(r.all_squares);
    for (const auto& h : r.hyperplanes) {
        CAPTURE(format_character(h.chi));
        // the atom {(1,0),(2,0)} lies outside ker chi exactly when chi_1 != 0
        CHECK(h.alpha_squared == (h.chi.index[0] != 0 ? 3 : 0));
        CHECK(h.direct == h.alpha_squared);
    }
    CHECK_THROWS_AS(elementary_abelian_analysis(spec, ms(spec, "1;(1,0):1\n1;(2,0):1")), DomainError);
    CHECK_THROWS_AS(elementary_abelian_analysis(GroupSpec::parse("Q8xZ3"), GMultiset{}), DomainError);
    CHECK_THROWS_AS(elementary_abelian_analysis(GroupSpec::parse("Q8xZ2xZ4"), GMultiset{}), DomainError);
}
