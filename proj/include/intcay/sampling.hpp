#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "intcay/algebra.hpp"
#include "intcay/groups.hpp"

// Seeded generators for the randomized checks. Every draw goes through the
// one engine, so a fixed seed reproduces the whole stream.

namespace intcay::sampling {

using Rng = std::mt19937_64;

long long uniform(Rng& rng, long long lo, long long hi);
bool coin(Rng& rng);

/// One element from each pair {x, x^-1}; involutions and the identity appear once.
std::vector<GroupElement> inverse_pair_representatives(const GroupSpec& spec);

/// Each inverse pair gets a multiplicity uniform in [0, max_mult].
GMultiset random_inverse_closed(const GroupSpec& spec, Rng& rng, int max_mult);
/// Inverse-closed set: each inverse pair kept with probability 1/2.
GMultiset random_inverse_closed_set(const GroupSpec& spec, Rng& rng);
/// Each atom gets a coefficient uniform in [0, max_coeff].
GMultiset random_cone_member(const AtomPartition& atoms, Rng& rng, int max_coeff);
/// A cone member with one inverse pair bumped by one, usually leaving the cone.
GMultiset random_perturbed_cone_member(const AtomPartition& atoms, Rng& rng, int max_coeff);

/// Q8 x A multiset whose B_1, B_-1 lie in C(A) and whose B_q + B_-q lie in
/// C(A) for q = i, j, k, built directly; the character condition is left to
/// chance. With max_mult = 1 the result is a set.
GMultiset random_hamiltonian_candidate(const GroupSpec& spec, const AtomPartition& atoms_of_a, Rng& rng,
                                       int max_mult);

/// Draws from the generators above in rotation: free, cone, perturbed cone,
/// and for Q8 x A the candidate generator.
GMultiset random_mixed(const GroupSpec& spec, const AtomPartition& atoms, const AtomPartition* atoms_of_a,
                       Rng& rng, int max_mult);

/// All lists n1 <= n2 <= ... of factors >= 2 with product at most max_order.
std::vector<AbelianGroup> factor_lists_up_to(long long max_order);

}  // namespace intcay::sampling
