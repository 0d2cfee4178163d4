#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intcay/bigint.hpp"

namespace intcay {

// ---------------------------------------------------------------------------
// Quaternion group Q8
// ---------------------------------------------------------------------------

/// The eight quaternion units, in canonical enumeration order.
enum class Q8 : std::uint8_t { One, MinusOne, I, MinusI, J, MinusJ, K, MinusK };

inline constexpr std::array<Q8, 8> kQ8Elements = {Q8::One, Q8::MinusOne, Q8::I, Q8::MinusI,
                                                  Q8::J,   Q8::MinusJ,   Q8::K, Q8::MinusK};

/// Row x, column y holds the index of x*y.
using Q8Table = std::array<std::array<std::uint8_t, 8>, 8>;

// clang-format off
inline constexpr Q8Table kQ8Table = {{
    //  1 -1  i -i  j -j  k -k
    {{0, 1, 2, 3, 4, 5, 6, 7}},  //  1
    {{1, 0, 3, 2, 5, 4, 7, 6}},  // -1
    {{2, 3, 1, 0, 6, 7, 5, 4}},  //  i
    {{3, 2, 0, 1, 7, 6, 4, 5}},  // -i
    {{4, 5, 7, 6, 1, 0, 2, 3}},  //  j
    {{5, 4, 6, 7, 0, 1, 3, 2}},  // -j
    {{6, 7, 4, 5, 3, 2, 1, 0}},  //  k
    {{7, 6, 5, 4, 2, 3, 0, 1}},  // -k
}};
// clang-format on

inline constexpr Q8 q8_mul(Q8 x, Q8 y, const Q8Table& table = kQ8Table) {
    return static_cast<Q8>(table[static_cast<int>(x)][static_cast<int>(y)]);
}

/// Unit with the opposite sign: -q.
inline constexpr Q8 q8_negate(Q8 q) { return static_cast<Q8>(static_cast<int>(q) ^ 1); }

Q8 q8_inv(Q8 q, const Q8Table& table = kQ8Table);
std::string_view q8_name(Q8 q);
std::optional<Q8> q8_parse(std::string_view text);

/// Checks the presentation i^2 = j^2 = k^2 = ijk = -1, (-1)^2 = 1 together
/// with identity, inverses and associativity on a candidate table.
bool q8_relations_hold(const Q8Table& table);

// ---------------------------------------------------------------------------
// Abelian groups and group specs
// ---------------------------------------------------------------------------

/// Z_{n1} x ... x Z_{nk}, factors kept exactly as given (no normalization).
class AbelianGroup {
public:
    AbelianGroup() = default;  // trivial group
    explicit AbelianGroup(std::vector<int> factors);

    const std::vector<int>& factors() const noexcept { return factors_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    long long order() const noexcept { return order_; }
    int exponent() const noexcept { return exponent_; }

    bool operator==(const AbelianGroup&) const = default;

private:
    std::vector<int> factors_;
    long long order_ = 1;
    int exponent_ = 1;
};

/// (q, a) in Q8 x A. Abelian specs pin q to Q8::One. The defaulted ordering is
/// the canonical enumeration order: Q8 component first, then residues
/// lexicographically.
struct GroupElement {
    Q8 q = Q8::One;
    std::vector<int> a;

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;
};

class GroupSpec {
public:
    static GroupSpec abelian(AbelianGroup a);
    static GroupSpec quaternion_product(AbelianGroup a);

    /// Grammar: optional `Q8x` prefix, then `Z<n>` factors joined by `x`
    /// (`Z6`, `Q8xZ3`, `Q8xZ5xZ5`). `Q8` alone is Q8 x 1, `1` is the trivial group.
    static GroupSpec parse(std::string_view text);

    bool is_quaternion_product() const noexcept { return quaternion_; }
    const AbelianGroup& abelian_part() const noexcept { return abelian_; }
    long long order() const noexcept { return (quaternion_ ? 8 : 1) * abelian_.order(); }

    GroupElement identity() const;
    bool contains(const GroupElement& x) const noexcept;
    /// Throws DomainError naming the problem when `x` is not an element.
    void validate(const GroupElement& x) const;

    std::size_t index_of(const GroupElement& x) const;
    GroupElement element_at(std::size_t index) const;
    std::vector<GroupElement> elements() const;

    /// Element literal `<q>;(c1,...,ck)`; abelian elements omit `q;`. Single
    /// factor residues may be written bare. Residues are reduced modulo n_i.
    GroupElement parse_element(std::string_view text) const;
    std::string format(const GroupElement& x) const;
    std::string to_string() const;

    bool operator==(const GroupSpec&) const = default;

private:
    GroupSpec(bool quaternion, AbelianGroup a) : quaternion_(quaternion), abelian_(std::move(a)) {}

    bool quaternion_ = false;
    AbelianGroup abelian_;
};

GroupElement mul(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement inv(const GroupSpec& spec, const GroupElement& x);
long long element_order(const GroupSpec& spec, const GroupElement& x);

/// Q8 x A with A free of elements of order 4.
bool is_hamiltonian(const GroupSpec& spec);

/// Dense table of products by element index, for the inner loops that would
/// otherwise re-multiply the same pairs.
class MultiplicationTable {
public:
    explicit MultiplicationTable(const GroupSpec& spec);

    std::size_t size() const noexcept { return n_; }
    std::size_t product(std::size_t x, std::size_t y) const { return table_[x * n_ + y]; }
    std::size_t inverse(std::size_t x) const { return inverse_[x]; }

private:
    std::size_t n_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
};

/// Shared, immutable table for `spec`, built on first use.
const MultiplicationTable& multiplication_table(const GroupSpec& spec);

// ---------------------------------------------------------------------------
// Multisets and the integer group algebra
// ---------------------------------------------------------------------------

/// Multiset with positive arbitrary-precision multiplicities; zero entries are
/// never stored.
class GMultiset {
public:
    using Map = std::map<GroupElement, BigInt>;

    GMultiset() = default;

    /// Adds `mult` copies of x. Zero is a no-op; negative multiplicities throw.
    void add(const GroupElement& x, const BigInt& mult = 1);
    BigInt multiplicity(const GroupElement& x) const;
    const Map& entries() const noexcept { return entries_; }
    BigInt total() const;
    bool empty() const noexcept { return entries_.empty(); }

    bool operator==(const GMultiset&) const = default;

private:
    Map entries_;
};

GMultiset multiset_sum(const GMultiset& x, const GMultiset& y);
/// Pointwise minimum of multiplicities.
GMultiset multiset_intersection(const GMultiset& x, const GMultiset& y);
/// Pointwise max(0, mu_x - mu_y).
GMultiset multiset_difference(const GMultiset& x, const GMultiset& y);
/// S^{-1}: mu(s^{-1}) copies of each s.
GMultiset multiset_inverse(const GroupSpec& spec, const GMultiset& s);
GMultiset multiset_scale(const GMultiset& s, const BigInt& factor);

bool is_inverse_closed(const GroupSpec& spec, const GMultiset& s);
/// Throws DomainError if some element of S lies outside the group.
void validate_support(const GroupSpec& spec, const GMultiset& s);

/// Reads `element : multiplicity` lines; `#` starts a comment. Errors name
/// the offending line.
GMultiset parse_multiset(const GroupSpec& spec, std::istream& in);
GMultiset parse_multiset(const GroupSpec& spec, std::string_view text);
std::string format_multiset(const GroupSpec& spec, const GMultiset& s);

/// Finitely supported integer-valued function on G.
class AlgebraVector {
public:
    using Map = std::map<GroupElement, BigInt>;

    AlgebraVector() = default;
    static AlgebraVector from_multiset(const GMultiset& s);
    static AlgebraVector delta(const GroupElement& x);

    void add(const GroupElement& x, const BigInt& coeff);
    BigInt coefficient(const GroupElement& x) const;
    const Map& entries() const noexcept { return entries_; }
    BigInt coefficient_sum() const;
    bool is_zero() const noexcept { return entries_.empty(); }

    AlgebraVector& operator+=(const AlgebraVector& other);
    AlgebraVector& operator-=(const AlgebraVector& other);
    friend AlgebraVector operator+(AlgebraVector x, const AlgebraVector& y) { return x += y; }
    friend AlgebraVector operator-(AlgebraVector x, const AlgebraVector& y) { return x -= y; }

    bool operator==(const AlgebraVector&) const = default;

private:
    Map entries_;
};

/// (f*g)(z) = sum over xy = z of f(x) g(y).
AlgebraVector convolve(const GroupSpec& spec, const AlgebraVector& f, const AlgebraVector& g);

}  // namespace intcay
