#include "intcay/sampling.hpp"

#include "intcay/errors.hpp"

namespace intcay::sampling {

long long uniform(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

std::vector<GroupElement> inverse_pair_representatives(const GroupSpec& spec) {
    std::vector<GroupElement> out;
    for (const auto& x : spec.elements()) {
        if (!(inv(spec, x) < x)) out.push_back(x);
    }
    return out;
}

namespace {

void add_pair(const GroupSpec& spec, GMultiset& s, const GroupElement& x, long long mult) {
    if (mult == 0) return;
    s.add(x, big(mult));
    const GroupElement y = inv(spec, x);
    if (y != x) s.add(y, big(mult));
}

GroupElement lift(Q8 q, const GroupElement& a) { return GroupElement{q, a.a}; }

}  // namespace

GMultiset random_inverse_closed(const GroupSpec& spec, Rng& rng, int max_mult) {
    GMultiset s;
    for (const auto& x : inverse_pair_representatives(spec)) add_pair(spec, s, x, uniform(rng, 0, max_mult));
    return s;
}

GMultiset random_inverse_closed_set(const GroupSpec& spec, Rng& rng) {
    return random_inverse_closed(spec, rng, 1);
}

GMultiset random_cone_member(const AtomPartition& atoms, Rng& rng, int max_coeff) {
    std::map<std::size_t, BigInt> weights;
    for (std::size_t r = 0; r < atoms.size(); ++r) {
        const long long c = uniform(rng, 0, max_coeff);
        if (c > 0) weights[r] = big(c);
    }
    return atom_combination(atoms, weights);
}

GMultiset random_perturbed_cone_member(const AtomPartition& atoms, Rng& rng, int max_coeff) {
    GMultiset s = random_cone_member(atoms, rng, max_coeff);
    const auto reps = inverse_pair_representatives(atoms.spec());
    const auto& x = reps[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(reps.size()) - 1))];
    add_pair(atoms.spec(), s, x, 1);
    return s;
}

GMultiset random_hamiltonian_candidate(const GroupSpec& spec, const AtomPartition& atoms_of_a, Rng& rng,
                                       int max_mult) {
    if (!spec.is_quaternion_product()) throw DomainError("candidate generator needs a Q8 x A spec");
    const GroupSpec& a_spec = atoms_of_a.spec();
    if (a_spec.is_quaternion_product() || !(a_spec.abelian_part() == spec.abelian_part())) {
        throw DomainError("candidate generator: atom partition is not over A");
    }
    GMultiset s;
    for (Q8 q : {Q8::One, Q8::MinusOne}) {
        const GMultiset part = random_cone_member(atoms_of_a, rng, max_mult);
        for (const auto& [a, m] : part.entries()) s.add(lift(q, a), m);
    }
    // B_q(x) + B_q(x^-1) = u on each atom; B_-q = B_q^-1 keeps S inverse-closed.
    for (Q8 q : {Q8::I, Q8::J, Q8::K}) {
        for (const auto& atom : atoms_of_a.classes()) {
            const long long u = uniform(rng, 0, max_mult);
            for (const auto& x : atom) {
                const GroupElement y = inv(a_spec, x);
                if (y < x) continue;
                long long here = 0;
                long long there = 0;
                if (y == x) {
                    here = uniform(rng, 0, max_mult);
                } else {
                    here = uniform(rng, 0, u);
                    there = u - here;
                }
                if (here > 0) {
                    s.add(lift(q, x), big(here));
                    s.add(lift(q8_negate(q), y), big(here));
                }
                if (there > 0) {
                    s.add(lift(q, y), big(there));
                    s.add(lift(q8_negate(q), x), big(there));
                }
            }
        }
    }
    return s;
}

GMultiset random_mixed(const GroupSpec& spec, const AtomPartition& atoms, const AtomPartition* atoms_of_a,
                       Rng& rng, int max_mult) {
    const long long modes = (spec.is_quaternion_product() && atoms_of_a != nullptr) ? 4 : 3;
    switch (uniform(rng, 0, modes - 1)) {
        case 0: return random_inverse_closed(spec, rng, max_mult);
        case 1: return random_cone_member(atoms, rng, max_mult);
        case 2: return random_perturbed_cone_member(atoms, rng, max_mult);
        default: return random_hamiltonian_candidate(spec, *atoms_of_a, rng, max_mult);
    }
}

namespace {

void extend(std::vector<int>& prefix, long long product, long long max_order, std::vector<AbelianGroup>& out) {
    const int start = prefix.empty() ? 2 : prefix.back();
    for (int n = start; product * n <= max_order; ++n) {
        prefix.push_back(n);
        out.emplace_back(prefix);
        extend(prefix, product * n, max_order, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<AbelianGroup> factor_lists_up_to(long long max_order) {
    std::vector<AbelianGroup> out;
    std::vector<int> prefix;
    extend(prefix, 1, max_order, out);
    return out;
}

}  // namespace intcay::sampling
