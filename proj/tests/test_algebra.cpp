#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "intcay/algebra.hpp"
#include "intcay/sampling.hpp"
#include "support.hpp"

using namespace intcay;
using testing::ms;

namespace {

std::set<GroupElement> as_set(const std::vector<GroupElement>& v) { return {v.begin(), v.end()}; }

// Checks N(x) against the definition: a normal subgroup containing x that is
// contained in every normal closure that contains x.
void check_normal_closure(const GroupSpec& spec) {
    const auto elems = spec.elements();
    std::vector<std::set<GroupElement>> closures;
    for (const auto& x : elems) closures.push_back(as_set(normal_closure(spec, x)));
    for (std::size_t k = 0; k < elems.size(); ++k) {
        const auto& n = closures[k];
        CHECK(n.count(elems[k]) == 1);
        CHECK(spec.order() % static_cast<long long>(n.size()) == 0);
        for (const auto& a : n) {
            CHECK(n.count(inv(spec, a)) == 1);
            for (const auto& b : n) CHECK(n.count(mul(spec, a, b)) == 1);
            for (const auto& g : elems) CHECK(n.count(mul(spec, mul(spec, g, a), inv(spec, g))) == 1);
        }
        for (const auto& other : closures) {
            if (other.count(elems[k])) CHECK(std::includes(other.begin(), other.end(), n.begin(), n.end()));
        }
    }
}

}  // namespace

TEST_CASE("normal closures match the definition") {
    for (const char* text : {"Z6", "Z2xZ4", "Q8", "Q8xZ3", "Q8xZ2"}) {
        CAPTURE(text);
        check_normal_closure(GroupSpec::parse(text));
    }
}

TEST_CASE("atoms of Z6") {
    const GroupSpec spec = GroupSpec::parse("Z6");
    const AtomPartition atoms = atom_partition(spec);
    REQUIRE(atoms.size() == 4);
    const auto e = [&](int a) { return GroupElement{Q8::One, {a}}; };
    CHECK(atoms.atom(0) == std::vector<GroupElement>{e(0)});
    CHECK(atoms.atom(1) == std::vector<GroupElement>{e(3)});
    CHECK(atoms.atom(2) == std::vector<GroupElement>{e(2), e(4)});
    CHECK(atoms.atom(3) == std::vector<GroupElement>{e(1), e(5)});
    CHECK(atoms.class_of(e(5)) == 3);
}

TEST_CASE("atoms of Q8 are {1}, {-1}, {+-i}, {+-j}, {+-k}") {
    const GroupSpec spec = GroupSpec::parse("Q8");
    const AtomPartition atoms = atom_partition(spec);
    REQUIRE(atoms.size() == 5);
    CHECK(atoms.atom(0) == std::vector<GroupElement>{{Q8::One, {}}});
    CHECK(atoms.atom(1) == std::vector<GroupElement>{{Q8::MinusOne, {}}});
    CHECK(atoms.atom(2) == std::vector<GroupElement>{{Q8::I, {}}, {Q8::MinusI, {}}});
}

TEST_CASE("atoms are exactly the classes of equal normal closure") {
    for (const char* text : {"Z12", "Z2xZ2xZ3", "Q8xZ3", "Q8xZ2xZ2", "Z3xZ3"}) {
        CAPTURE(text);
        const GroupSpec spec = GroupSpec::parse(text);
        const AtomPartition atoms = atom_partition(spec);
        const auto elems = spec.elements();
        std::size_t covered = 0;
        for (const auto& cls : atoms.classes()) covered += cls.size();
        CHECK(covered == elems.size());
        for (const auto& x : elems) {
            const auto nx = normal_closure(spec, x);
            for (const auto& y : elems) {
                CHECK((atoms.class_of(x) == atoms.class_of(y)) == (nx == normal_closure(spec, y)));
            }
        }
    }
}

TEST_CASE("boolean algebra membership") {
    const GroupSpec spec = GroupSpec::parse("Z6");
    const auto e = [&](int a) { return GroupElement{Q8::One, {a}}; };
    CHECK(in_boolean_algebra(spec, {e(1), e(5)}));
    CHECK(in_boolean_algebra(spec, {e(0), e(2), e(4), e(3)}));
    CHECK(in_boolean_algebra(spec, {}));
    CHECK_FALSE(in_boolean_algebra(spec, {e(1)}));
    CHECK_FALSE(in_boolean_algebra(spec, {e(2), e(5)}));
}

TEST_CASE("cone decomposition") {
    const GroupSpec spec = GroupSpec::parse("Z6");
    const AtomPartition atoms = atom_partition(spec);

    const ConeResult ok = cone_decompose(atoms, ms(spec, "1:2\n5:2\n3:1"));
    REQUIRE(ok.ok());
    CHECK(ok.certificate->coefficients == std::map<std::size_t, BigInt>{{1, 1}, {3, 2}});
    CHECK(reconstruct(atoms, *ok.certificate) == ms(spec, "1:2\n5:2\n3:1"));

    const ConeResult bad = cone_decompose(atoms, ms(spec, "1:2\n5:1"));
    REQUIRE_FALSE(bad.ok());
    REQUIRE(bad.failure);
    CHECK(bad.failure->atom == 3);
    CHECK(bad.failure->first_multiplicity != bad.failure->second_multiplicity);

    CHECK(cone_decompose(spec, GMultiset{}).ok());
}

TEST_CASE("random cone members decompose and reconstruct") {
    sampling::Rng rng(5);
    for (const char* text : {"Z2xZ6", "Q8xZ3", "Z5xZ5"}) {
        const GroupSpec spec = GroupSpec::parse(text);
        const AtomPartition atoms = atom_partition(spec);
        for (int k = 0; k < 20; ++k) {
            std::map<std::size_t, BigInt> weights;
            for (std::size_t r = 0; r < atoms.size(); ++r) {
                if (sampling::coin(rng)) weights[r] = BigInt(static_cast<long>(sampling::uniform(rng, 1, 4)));
            }
            const GMultiset s = atom_combination(atoms, weights);
            const ConeResult result = cone_decompose(atoms, s);
            REQUIRE(result.ok());
            CHECK(result.certificate->coefficients == weights);
            CHECK(reconstruct(atoms, *result.certificate) == s);
            CHECK(is_inverse_closed(spec, s));
        }
    }
}
