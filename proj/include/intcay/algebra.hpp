#pragma once

#include <map>
#include <optional>
#include <vector>

#include "intcay/groups.hpp"

namespace intcay {

/// Smallest normal subgroup containing x: the subgroup generated by the
/// conjugacy class of x. Returned in canonical element order.
std::vector<GroupElement> normal_closure(const GroupSpec& spec, const GroupElement& x);

/// The classes of x ~ y <=> N(x) = N(y), i.e. the atoms of the boolean
/// algebra generated by the normal subgroups.
///
/// Classes are ordered by |N(x)|, then by their first element; each class is
/// sorted canonically. Class 0 is always {identity}.
class AtomPartition {
public:
    AtomPartition(const GroupSpec& spec, std::vector<std::vector<GroupElement>> classes);

    std::size_t size() const noexcept { return classes_.size(); }
    const std::vector<std::vector<GroupElement>>& classes() const noexcept { return classes_; }
    const std::vector<GroupElement>& atom(std::size_t id) const { return classes_.at(id); }
    std::size_t class_of(const GroupElement& x) const;
    const GroupSpec& spec() const noexcept { return spec_; }

private:
    GroupSpec spec_;
    std::vector<std::vector<GroupElement>> classes_;
    std::vector<std::size_t> index_;  // by element index
};

AtomPartition atom_partition(const GroupSpec& spec);

/// True iff X is a union of atoms.
bool in_boolean_algebra(const AtomPartition& atoms, const std::vector<GroupElement>& set);
bool in_boolean_algebra(const GroupSpec& spec, const std::vector<GroupElement>& set);

/// Witness that S is a non-negative integer combination of atoms: class id
/// -> coefficient, zero coefficients omitted.
struct ConeCertificate {
    std::map<std::size_t, BigInt> coefficients;
};

/// Two elements of the same atom with different multiplicities.
struct ConeFailure {
    std::size_t atom = 0;
    GroupElement first;
    BigInt first_multiplicity;
    GroupElement second;
    BigInt second_multiplicity;
};

struct ConeResult {
    std::optional<ConeCertificate> certificate;
    std::optional<ConeFailure> failure;

    bool ok() const noexcept { return certificate.has_value(); }
};

/// Decides S in C(G): succeeds iff mu_S is constant on every atom. The
/// failure names the first atom (in partition order) where it is not.
ConeResult cone_decompose(const AtomPartition& atoms, const GMultiset& s);
ConeResult cone_decompose(const GroupSpec& spec, const GMultiset& s);

GMultiset reconstruct(const AtomPartition& atoms, const ConeCertificate& certificate);

/// Sum of coefficient * atom indicator: the cone element with those weights.
GMultiset atom_combination(const AtomPartition& atoms, const std::map<std::size_t, BigInt>& weights);

}  // namespace intcay
