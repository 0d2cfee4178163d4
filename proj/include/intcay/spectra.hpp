#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "intcay/algebra.hpp"
#include "intcay/cyclotomic.hpp"
#include "intcay/groups.hpp"
#include "intcay/parallel.hpp"

namespace intcay {

// ---------------------------------------------------------------------------
// Characters of abelian groups
// ---------------------------------------------------------------------------

/// chi_a(x) = zeta_m^{sum_i (m / n_i) a_i x_i}, m the exponent of A.
struct Character {
    std::vector<int> index;

    bool is_principal() const noexcept;
    bool operator==(const Character&) const = default;
};

/// All |A| characters, in the same mixed-radix order as the elements of A.
std::vector<Character> characters(const AbelianGroup& a);
std::string format_character(const Character& chi);

/// Exponent t in [0, m) with chi(x) = zeta_m^t.
long long character_exponent(const AbelianGroup& a, const Character& chi, const std::vector<int>& x);

/// Exact sum of mu_D(g) chi(g); D is supported on A (Q8 component One).
CycInt char_sum(const CycContextPtr& ctx, const AbelianGroup& a, const Character& chi, const GMultiset& d);
CycInt char_sum(const CycContextPtr& ctx, const AbelianGroup& a, const Character& chi, const AlgebraVector& d);

// ---------------------------------------------------------------------------
// Irreducible representations of Q8
// ---------------------------------------------------------------------------

enum class Q8Irrep { Trivial, LambdaI, LambdaJ, LambdaK, Epsilon };

inline constexpr std::array<Q8Irrep, 4> kQ8LinearIrreps = {Q8Irrep::Trivial, Q8Irrep::LambdaI, Q8Irrep::LambdaJ,
                                                           Q8Irrep::LambdaK};

/// Character table value (2, -2, 0 for Epsilon; +-1 for the linear ones).
int q8_character(Q8Irrep rho, Q8 q);

/// a + b*i with small integer parts; entries of rho_eps.
struct GaussianInt {
    int re = 0;
    int im = 0;

    friend GaussianInt operator+(GaussianInt x, GaussianInt y) { return {x.re + y.re, x.im + y.im}; }
    friend GaussianInt operator*(GaussianInt x, GaussianInt y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    bool operator==(const GaussianInt&) const = default;
};

using Mat2 = std::array<std::array<GaussianInt, 2>, 2>;

Mat2 rho_epsilon(Q8 q);
Mat2 mat2_mul(const Mat2& x, const Mat2& y);

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

/// base +- sqrt(radicand); both branches are eigenvalues.
struct Surd {
    CycInt base;
    CycInt radicand;
};

class SpectralValue {
public:
    enum class Kind { Rational, Cyclotomic, Surd };

    /// Rational when v is a rational integer, Cyclotomic otherwise.
    static SpectralValue from_cyclotomic(const CycInt& v);
    static SpectralValue make_surd(CycInt base, CycInt radicand);

    Kind kind() const noexcept;
    const BigInt& rational() const { return std::get<BigInt>(value_); }
    const CycInt& cyclotomic() const { return std::get<CycInt>(value_); }
    const Surd& surd() const { return std::get<Surd>(value_); }

    /// Numeric value (the + branch for a surd); ordering only.
    double approx() const;
    std::string to_string() const;

    friend bool operator==(const SpectralValue& x, const SpectralValue& y);

private:
    explicit SpectralValue(std::variant<BigInt, CycInt, Surd> v) : value_(std::move(v)) {}
    std::variant<BigInt, CycInt, Surd> value_;
};

/// Eigenvalue multiset. A Surd entry with multiplicity k stands for both
/// branches, each with multiplicity k.
class Spectrum {
public:
    struct Entry {
        SpectralValue value;
        std::size_t multiplicity;
    };

    explicit Spectrum(CycContextPtr ctx);

    void add(const CycInt& value, std::size_t multiplicity);
    /// Adds base +- sqrt(radicand), each with `multiplicity`. Collapses to two
    /// plain values when the radicand is a square of a rational integer.
    void add_pair(const CycInt& base, const CycInt& radicand, std::size_t multiplicity);

    const CycContextPtr& context() const noexcept { return ctx_; }
    /// Sorted by descending value.
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t dimension() const;
    bool is_integral() const;
    std::optional<std::map<BigInt, std::size_t>> integer_multiset() const;

    /// Sum of lambda^k over all eigenvalues with multiplicity (k = 1 or 2).
    CycInt power_sum(int k) const;

    /// "6 x1; 3 x4; ..." (descending).
    std::string to_text() const;
    /// "6 x 1;3 x 4;..." single line.
    std::string to_machine() const;

private:
    void insert(SpectralValue value, std::size_t multiplicity);

    CycContextPtr ctx_;
    std::vector<Entry> entries_;
};

/// Formats an integer eigenvalue multiset the same way as Spectrum::to_text.
std::string format_integer_spectrum(const std::map<BigInt, std::size_t>& spectrum);
std::string format_integer_spectrum_machine(const std::map<BigInt, std::size_t>& spectrum);

/// Eigenvalues of Cay(A, S): one character sum per character of A.
Spectrum abelian_spectrum(const GroupSpec& spec, const GMultiset& s, Execution exec = Execution::Parallel);

struct AbelianVerdict {
    bool integral = false;
    /// First character whose sum is irrational, if any.
    std::optional<Character> irrational_character;
    ConeResult cone;
};

/// Decides integrality twice: rationality of every character sum, and cone
/// membership. Throws InconsistencyError if the two routes disagree.
AbelianVerdict abelian_verdict(const GroupSpec& spec, const GMultiset& s, Execution exec = Execution::Parallel);
bool is_integral_abelian(const GroupSpec& spec, const GMultiset& s, Execution exec = Execution::Parallel);

/// B_q(a) = mu_S((q, a)), indexed by static_cast<int>(q). Elements of B_q are
/// elements of A (Q8 component One).
std::array<GMultiset, 8> extract_bq(const GroupSpec& spec, const GMultiset& s);

/// lambda(B_q) - lambda(B_{-q}).
CycInt lambda_hat(const CycContextPtr& ctx, const AbelianGroup& a, const Character& chi, const GMultiset& bq,
                  const GMultiset& b_minus_q);

struct CharacterCheck {
    Character chi;
    /// lambda_hat(B_i)^2 + lambda_hat(B_j)^2 + lambda_hat(B_k)^2
    CycInt h;
    /// alpha >= 0 with h = -alpha^2, when it exists.
    std::optional<BigInt> alpha;
    std::string failure;

    bool ok() const noexcept { return alpha.has_value(); }
};

struct HamiltonianReport {
    GroupSpec spec = GroupSpec::abelian(AbelianGroup());
    std::array<GMultiset, 8> b;
    ConeResult b_one;
    ConeResult b_minus_one;
    bool cond_i = false;
    /// B_q + B_{-q} for q = i, j, k.
    std::array<ConeResult, 3> pair_sums;
    bool cond_ii = false;
    std::vector<CharacterCheck> characters;
    bool cond_iii = false;
    bool overall = false;

    /// One line naming the first failing condition; empty if overall holds.
    std::string failure_reason() const;
};

/// The three integrality conditions for Q8 x A. S must be inverse-closed.
HamiltonianReport hamiltonian_conditions(const GroupSpec& spec, const GMultiset& s,
                                         Execution exec = Execution::Parallel);

/// Eigenvalues of Cay(Q8 x A, S): per character of A, four linear-block
/// values and the rho_eps pair lambda_hat(B_1) +- sqrt(-h), each branch twice.
Spectrum hamiltonian_spectrum(const GroupSpec& spec, const GMultiset& s, Execution exec = Execution::Parallel);

/// Dispatches on the spec kind.
Spectrum spectrum(const GroupSpec& spec, const GMultiset& s, Execution exec = Execution::Parallel);
bool is_integral(const GroupSpec& spec, const GMultiset& s, Execution exec = Execution::Parallel);

// ---------------------------------------------------------------------------
// Q8 x C_p^d with B_1 = B_{-1} = empty
// ---------------------------------------------------------------------------

struct AtomCoefficient {
    std::size_t atom = 0;  // class id in the atom partition of A
    bool constant = true;
    BigInt value;          // b_r, the common coefficient when constant
    GroupElement witness;  // first element with a different coefficient
};

struct HyperplaneCheck {
    Character chi;
    /// p * sum of b_r over atoms not inside ker(chi).
    BigInt alpha_squared;
    bool perfect_square = false;
    /// -h computed straight from the lambda_hat values, for comparison.
    std::optional<BigInt> direct;
};

struct ElementaryAbelianReport {
    int p = 0;
    std::size_t d = 0;
    /// B'_q = B_q minus (B_q intersect B_{-q}), for q = i, j, k.
    std::array<GMultiset, 3> reduced;
    /// sum over q in {i,j,k} and a of mu_{B'_q}(a)^2; equals |B'_i|+|B'_j|+|B'_k| for sets.
    BigInt weight;
    /// T = sum_q (B'_q - B'_{-q})^2 in the integer group algebra of A.
    AlgebraVector t;
    BigInt identity_coefficient;
    BigInt off_identity_sum;
    bool identity_check = false;  // T(e) == -2 * weight
    bool sum_check = false;       // sum_{g != e} a_g == 2 * weight
    std::vector<AtomCoefficient> atoms;  // non-trivial atoms A_r
    bool constant_on_atoms = false;
    std::vector<HyperplaneCheck> hyperplanes;  // non-principal characters
    bool all_squares = false;
};

ElementaryAbelianReport elementary_abelian_analysis(const GroupSpec& spec, const GMultiset& s);

}  // namespace intcay
