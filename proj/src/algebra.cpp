#include "intcay/algebra.hpp"

#include <algorithm>
#include <deque>

#include "intcay/errors.hpp"

namespace intcay {

namespace {

std::vector<std::size_t> closure_indices(const GroupSpec& spec, const MultiplicationTable& table,
                                         std::size_t x) {
    const std::size_t n = table.size();
    // Conjugacy class {g x g^-1}.
    std::vector<char> in_class(n, 0);
    std::vector<std::size_t> conjugates;
    for (std::size_t g = 0; g < n; ++g) {
        const std::size_t c = table.product(table.product(g, x), table.inverse(g));
        if (!in_class[c]) {
            in_class[c] = 1;
            conjugates.push_back(c);
        }
    }
    // Breadth-first product closure from the identity.
    const std::size_t e = spec.index_of(spec.identity());
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> queue{e};
    seen[e] = 1;
    while (!queue.empty()) {
        const std::size_t y = queue.front();
        queue.pop_front();
        for (std::size_t c : conjugates) {
            const std::size_t z = table.product(y, c);
            if (!seen[z]) {
                seen[z] = 1;
                queue.push_back(z);
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) out.push_back(i);
    }
    return out;
}

}  // namespace

std::vector<GroupElement> normal_closure(const GroupSpec& spec, const GroupElement& x) {
    spec.validate(x);
    const MultiplicationTable& table = multiplication_table(spec);
    std::vector<GroupElement> out;
    for (std::size_t i : closure_indices(spec, table, spec.index_of(x))) out.push_back(spec.element_at(i));
    return out;
}

AtomPartition::AtomPartition(const GroupSpec& spec, std::vector<std::vector<GroupElement>> classes)
    : spec_(spec), classes_(std::move(classes)), index_(static_cast<std::size_t>(spec.order()), size_t(-1)) {
    for (std::size_t id = 0; id < classes_.size(); ++id) {
        for (const auto& x : classes_[id]) {
            auto& slot = index_.at(spec_.index_of(x));
            if (slot != size_t(-1)) throw InconsistencyError("atom classes overlap");
            slot = id;
        }
    }
    if (std::find(index_.begin(), index_.end(), size_t(-1)) != index_.end()) {
        throw InconsistencyError("atom classes do not cover the group");
    }
}

std::size_t AtomPartition::class_of(const GroupElement& x) const {
    spec_.validate(x);
    return index_[spec_.index_of(x)];
}

AtomPartition atom_partition(const GroupSpec& spec) {
    const MultiplicationTable& table = multiplication_table(spec);
    const std::size_t n = table.size();
    // Group elements by the (sorted) index set of N(x).
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_closure;
    for (std::size_t x = 0; x < n; ++x) by_closure[closure_indices(spec, table, x)].push_back(x);

    struct Keyed {
        std::size_t closure_size;
        std::size_t first;
        std::vector<std::size_t> members;
    };
    std::vector<Keyed> keyed;
    for (auto& [closure, members] : by_closure) keyed.push_back({closure.size(), members.front(), members});
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& l, const Keyed& r) {
        return std::tie(l.closure_size, l.first) < std::tie(r.closure_size, r.first);
    });

    std::vector<std::vector<GroupElement>> classes;
    for (const auto& k : keyed) {
        std::vector<GroupElement> cls;
        for (std::size_t i : k.members) cls.push_back(spec.element_at(i));
        classes.push_back(std::move(cls));
    }
    return AtomPartition(spec, std::move(classes));
}

bool in_boolean_algebra(const AtomPartition& atoms, const std::vector<GroupElement>& set) {
    GMultiset indicator;
    for (const auto& x : set) {
        atoms.spec().validate(x);
        if (indicator.multiplicity(x) == 0) indicator.add(x);
    }
    return cone_decompose(atoms, indicator).ok();
}

bool in_boolean_algebra(const GroupSpec& spec, const std::vector<GroupElement>& set) {
    return in_boolean_algebra(atom_partition(spec), set);
}

ConeResult cone_decompose(const AtomPartition& atoms, const GMultiset& s) {
    validate_support(atoms.spec(), s);
    ConeCertificate cert;
    for (std::size_t id = 0; id < atoms.size(); ++id) {
        const auto& cls = atoms.atom(id);
        const BigInt base = s.multiplicity(cls.front());
        for (std::size_t t = 1; t < cls.size(); ++t) {
            const BigInt other = s.multiplicity(cls[t]);
            if (other != base) {
                return ConeResult{std::nullopt, ConeFailure{id, cls.front(), base, cls[t], other}};
            }
        }
        if (sgn(base) != 0) cert.coefficients.emplace(id, base);
    }
    return ConeResult{std::move(cert), std::nullopt};
}

ConeResult cone_decompose(const GroupSpec& spec, const GMultiset& s) {
    return cone_decompose(atom_partition(spec), s);
}

GMultiset reconstruct(const AtomPartition& atoms, const ConeCertificate& certificate) {
    return atom_combination(atoms, certificate.coefficients);
}

GMultiset atom_combination(const AtomPartition& atoms, const std::map<std::size_t, BigInt>& weights) {
    GMultiset out;
    for (const auto& [id, w] : weights) {
        for (const auto& x : atoms.atom(id)) out.add(x, w);
    }
    return out;
}

}  // namespace intcay
