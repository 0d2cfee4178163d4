#include "intcay/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "intcay/errors.hpp"

namespace intcay {

namespace {

constexpr std::array<Q8, 3> kImaginaryUnits = {Q8::I, Q8::J, Q8::K};

int q8_index(Q8 q) { return static_cast<int>(q); }

CycContextPtr context_for(const AbelianGroup& a) { return CycContext::make(static_cast<unsigned>(a.exponent())); }

void require_inverse_closed(const GroupSpec& spec, const GMultiset& s) {
    validate_support(spec, s);
    for (const auto& [g, m] : s.entries()) {
        const GroupElement gi = inv(spec, g);
        const BigInt mi = s.multiplicity(gi);
        if (mi != m) {
            throw DomainError("multiset is not inverse-closed: " + spec.format(g) + " has multiplicity " + m.get_str() +
                              " but its inverse " + spec.format(gi) + " has " + mi.get_str());
        }
    }
}

std::string describe_failure(const GroupSpec& spec, const ConeFailure& f) {
    return "witness: " + spec.format(f.first) + " has multiplicity " + f.first_multiplicity.get_str() + ", " +
           spec.format(f.second) + " has multiplicity " + f.second_multiplicity.get_str();
}

template <class Map>
CycInt char_sum_impl(const CycContextPtr& ctx, const AbelianGroup& a, const Character& chi, const Map& entries) {
    std::vector<BigInt> histogram(ctx->m(), 0);
    for (const auto& [g, c] : entries) {
        if (g.q != Q8::One || g.a.size() != a.rank()) throw DomainError("char_sum: element outside the abelian group");
        histogram[static_cast<std::size_t>(character_exponent(a, chi, g.a))] += c;
    }
    CycInt out(ctx);
    for (std::size_t t = 0; t < histogram.size(); ++t) {
        if (sgn(histogram[t]) != 0) out.add_scaled_power(static_cast<long long>(t), histogram[t]);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

bool Character::is_principal() const noexcept {
    return std::all_of(index.begin(), index.end(), [](int v) { return v == 0; });
}

std::vector<Character> characters(const AbelianGroup& a) {
    const GroupSpec spec = GroupSpec::abelian(a);
    std::vector<Character> out;
    for (const auto& x : spec.elements()) out.push_back(Character{x.a});
    return out;
}

std::string format_character(const Character& chi) {
    std::string out = "(";
    for (std::size_t i = 0; i < chi.index.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(chi.index[i]);
    }
    return out + ")";
}

long long character_exponent(const AbelianGroup& a, const Character& chi, const std::vector<int>& x) {
    const long long m = a.exponent();
    long long t = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        const long long scale = m / a.factors()[i];
        t = (t + scale * chi.index[i] % m * x[i]) % m;
    }
    return t;
}

CycInt char_sum(const CycContextPtr& ctx, const AbelianGroup& a, const Character& chi, const GMultiset& d) {
    return char_sum_impl(ctx, a, chi, d.entries());
}

CycInt char_sum(const CycContextPtr& ctx, const AbelianGroup& a, const Character& chi, const AlgebraVector& d) {
    return char_sum_impl(ctx, a, chi, d.entries());
}

// ---------------------------------------------------------------------------
// Q8 representations
// ---------------------------------------------------------------------------

int q8_character(Q8Irrep rho, Q8 q) {
    // Index of the conjugacy class: 0 -> {1}, 1 -> {-1}, 2/3/4 -> {+-i}/{+-j}/{+-k}.
    const int cls = q8_index(q) < 2 ? q8_index(q) : 1 + q8_index(q) / 2;
    switch (rho) {
        case Q8Irrep::Trivial: return 1;
        case Q8Irrep::LambdaI: return (cls <= 2) ? 1 : -1;
        case Q8Irrep::LambdaJ: return (cls <= 1 || cls == 3) ? 1 : -1;
        case Q8Irrep::LambdaK: return (cls <= 1 || cls == 4) ? 1 : -1;
        case Q8Irrep::Epsilon: return cls == 0 ? 2 : (cls == 1 ? -2 : 0);
    }
    return 0;
}

Mat2 rho_epsilon(Q8 q) {
    const GaussianInt zero{0, 0}, one{1, 0}, minus_one{-1, 0}, i{0, 1}, minus_i{0, -1};
    Mat2 m{};
    switch (static_cast<Q8>(q8_index(q) & ~1)) {
        case Q8::One: m = {{{one, zero}, {zero, one}}}; break;
        case Q8::I: m = {{{i, zero}, {zero, minus_i}}}; break;
        case Q8::J: m = {{{zero, one}, {minus_one, zero}}}; break;
        default: m = {{{zero, i}, {i, zero}}}; break;  // K
    }
    if (q8_index(q) & 1) {
        for (auto& row : m) {
            for (auto& v : row) v = v * minus_one;
        }
    }
    return m;
}

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
    Mat2 out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) out[r][c] = x[r][0] * y[0][c] + x[r][1] * y[1][c];
    }
    return out;
}

// ---------------------------------------------------------------------------
// SpectralValue / Spectrum
// ---------------------------------------------------------------------------

SpectralValue SpectralValue::from_cyclotomic(const CycInt& v) {
    if (auto r = v.as_rational_integer()) return SpectralValue(*r);
    return SpectralValue(v);
}

SpectralValue SpectralValue::make_surd(CycInt base, CycInt radicand) {
    return SpectralValue(Surd{std::move(base), std::move(radicand)});
}

SpectralValue::Kind SpectralValue::kind() const noexcept {
    switch (value_.index()) {
        case 0: return Kind::Rational;
        case 1: return Kind::Cyclotomic;
        default: return Kind::Surd;
    }
}

double SpectralValue::approx() const {
    switch (kind()) {
        case Kind::Rational: return rational().get_d();
        case Kind::Cyclotomic: return cyclotomic().approx_real();
        case Kind::Surd: return surd().base.approx_real() + std::sqrt(std::max(0.0, surd().radicand.approx_real()));
    }
    return 0.0;
}

std::string SpectralValue::to_string() const {
    switch (kind()) {
        case Kind::Rational: return rational().get_str();
        case Kind::Cyclotomic: return "(" + cyclotomic().to_string() + ")";
        case Kind::Surd: return "(" + surd().base.to_string() + ") +- sqrt(" + surd().radicand.to_string() + ")";
    }
    return {};
}

bool operator==(const SpectralValue& x, const SpectralValue& y) {
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
        case SpectralValue::Kind::Rational: return x.rational() == y.rational();
        case SpectralValue::Kind::Cyclotomic: return x.cyclotomic() == y.cyclotomic();
        case SpectralValue::Kind::Surd:
            return x.surd().base == y.surd().base && x.surd().radicand == y.surd().radicand;
    }
    return false;
}

Spectrum::Spectrum(CycContextPtr ctx) : ctx_(std::move(ctx)) {}

void Spectrum::insert(SpectralValue value, std::size_t multiplicity) {
    if (multiplicity == 0) return;
    for (auto& e : entries_) {
        if (e.value == value) {
            e.multiplicity += multiplicity;
            return;
        }
    }
    entries_.push_back({std::move(value), multiplicity});
    std::stable_sort(entries_.begin(), entries_.end(), [](const Entry& l, const Entry& r) {
        const double lv = l.value.approx(), rv = r.value.approx();
        if (std::abs(lv - rv) > 1e-9) return lv > rv;
        return l.value.to_string() < r.value.to_string();
    });
}

void Spectrum::add(const CycInt& value, std::size_t multiplicity) {
    insert(SpectralValue::from_cyclotomic(value), multiplicity);
}

void Spectrum::add_pair(const CycInt& base, const CycInt& radicand, std::size_t multiplicity) {
    if (const auto r = radicand.as_rational_integer()) {
        if (const auto root = exact_sqrt(*r)) {
            const CycInt offset = CycInt::from_integer(ctx_, *root);
            add(base + offset, multiplicity);
            add(base - offset, multiplicity);
            return;
        }
    }
    insert(SpectralValue::make_surd(base, radicand), multiplicity);
}

std::size_t Spectrum::dimension() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += (e.value.kind() == SpectralValue::Kind::Surd ? 2 : 1) * e.multiplicity;
    return n;
}

bool Spectrum::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.value.kind() == SpectralValue::Kind::Rational; });
}

std::optional<std::map<BigInt, std::size_t>> Spectrum::integer_multiset() const {
    if (!is_integral()) return std::nullopt;
    std::map<BigInt, std::size_t> out;
    for (const auto& e : entries_) out[e.value.rational()] += e.multiplicity;
    return out;
}

CycInt Spectrum::power_sum(int k) const {
    if (k != 1 && k != 2) throw DomainError("power_sum: only k = 1, 2 are supported");
    CycInt sum(ctx_);
    for (const auto& e : entries_) {
        const BigInt mult = static_cast<unsigned long>(e.multiplicity);
        switch (e.value.kind()) {
            case SpectralValue::Kind::Rational: {
                const CycInt v = CycInt::from_integer(ctx_, e.value.rational());
                sum += (k == 1 ? v : v * v) * mult;
                break;
            }
            case SpectralValue::Kind::Cyclotomic: {
                const CycInt& v = e.value.cyclotomic();
                sum += (k == 1 ? v : v * v) * mult;
                break;
            }
            case SpectralValue::Kind::Surd: {
                // (b + r^(1/2))^k + (b - r^(1/2))^k
                const auto& [b, r] = e.value.surd();
                sum += (k == 1 ? b : b * b + r) * (mult * 2);
                break;
            }
        }
    }
    return sum;
}

std::string Spectrum::to_text() const {
    std::string out;
    for (const auto& e : entries_) {
        if (!out.empty()) out += "; ";
        out += e.value.to_string() + " x" + std::to_string(e.multiplicity);
    }
    return out;
}

std::string Spectrum::to_machine() const {
    std::string out;
    for (const auto& e : entries_) {
        if (!out.empty()) out += ";";
        out += e.value.to_string() + " x " + std::to_string(e.multiplicity);
    }
    return out;
}

std::string format_integer_spectrum(const std::map<BigInt, std::size_t>& spectrum) {
    std::string out;
    for (auto it = spectrum.rbegin(); it != spectrum.rend(); ++it) {
        if (!out.empty()) out += "; ";
        out += it->first.get_str() + " x" + std::to_string(it->second);
    }
    return out;
}

std::string format_integer_spectrum_machine(const std::map<BigInt, std::size_t>& spectrum) {
    std::string out;
    for (auto it = spectrum.rbegin(); it != spectrum.rend(); ++it) {
        if (!out.empty()) out += ";";
        out += it->first.get_str() + " x " + std::to_string(it->second);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Abelian groups
// ---------------------------------------------------------------------------

Spectrum abelian_spectrum(const GroupSpec& spec, const GMultiset& s, Execution exec) {
    if (spec.is_quaternion_product()) throw DomainError("abelian_spectrum: " + spec.to_string() + " is not abelian");
    require_inverse_closed(spec, s);
    const AbelianGroup& a = spec.abelian_part();
    const auto ctx = context_for(a);
    const auto chars = characters(a);
    std::vector<CycInt> sums(chars.size(), CycInt(ctx));
    for_each_index(chars.size(), exec, [&](std::size_t c) { sums[c] = char_sum(ctx, a, chars[c], s); });
    Spectrum out(ctx);
    for (const auto& v : sums) out.add(v, 1);
    return out;
}

AbelianVerdict abelian_verdict(const GroupSpec& spec, const GMultiset& s, Execution exec) {
    if (spec.is_quaternion_product()) throw DomainError("abelian_verdict: " + spec.to_string() + " is not abelian");
    require_inverse_closed(spec, s);
    const AbelianGroup& a = spec.abelian_part();
    const auto ctx = context_for(a);
    const auto chars = characters(a);
    std::vector<char> rational(chars.size(), 0);
    for_each_index(chars.size(), exec, [&](std::size_t c) {
        rational[c] = char_sum(ctx, a, chars[c], s).as_rational_integer().has_value();
    });

    AbelianVerdict verdict;
    for (std::size_t c = 0; c < chars.size(); ++c) {
        if (!rational[c]) {
            verdict.irrational_character = chars[c];
            break;
        }
    }
    verdict.cone = cone_decompose(spec, s);
    const bool by_characters = !verdict.irrational_character.has_value();
    if (by_characters != verdict.cone.ok()) {
        throw InconsistencyError("character-sum and cone routes disagree on " + spec.to_string() +
                                 " (characters: " + (by_characters ? "integral" : "not integral") +
                                 ", cone: " + (verdict.cone.ok() ? "member" : "non-member") + ")");
    }
    verdict.integral = by_characters;
    return verdict;
}

bool is_integral_abelian(const GroupSpec& spec, const GMultiset& s, Execution exec) {
    return abelian_verdict(spec, s, exec).integral;
}

// ---------------------------------------------------------------------------
// Q8 x A
// ---------------------------------------------------------------------------

std::array<GMultiset, 8> extract_bq(const GroupSpec& spec, const GMultiset& s) {
    if (!spec.is_quaternion_product()) {
        throw DomainError("B_q extraction needs a Q8 x A group, got " + spec.to_string());
    }
    validate_support(spec, s);
    std::array<GMultiset, 8> b;
    for (const auto& [g, m] : s.entries()) b[q8_index(g.q)].add(GroupElement{Q8::One, g.a}, m);
    return b;
}

CycInt lambda_hat(const CycContextPtr& ctx, const AbelianGroup& a, const Character& chi, const GMultiset& bq,
                  const GMultiset& b_minus_q) {
    return char_sum(ctx, a, chi, bq) - char_sum(ctx, a, chi, b_minus_q);
}

std::string HamiltonianReport::failure_reason() const {
    const GroupSpec a_spec = GroupSpec::abelian(spec.abelian_part());
    if (!cond_i) {
        const bool first = !b_one.ok();
        const auto& f = first ? *b_one.failure : *b_minus_one.failure;
        return std::string("condition (i) fails: ") + (first ? "B_1" : "B_-1") + " is not in C(A) (" +
               describe_failure(a_spec, f) + ")";
    }
    if (!cond_ii) {
        for (std::size_t t = 0; t < 3; ++t) {
            if (!pair_sums[t].ok()) {
                const std::string q(q8_name(kImaginaryUnits[t]));
                return "condition (ii) fails for q=" + q + ": B_" + q + " + B_-" + q + " is not in C(A) (" +
                       describe_failure(a_spec, *pair_sums[t].failure) + ")";
            }
        }
    }
    if (!cond_iii) {
        for (const auto& c : characters) {
            if (!c.ok()) return "condition (iii) fails at character a=" + format_character(c.chi) + ": " + c.failure;
        }
    }
    return {};
}

HamiltonianReport hamiltonian_conditions(const GroupSpec& spec, const GMultiset& s, Execution exec) {
    if (!spec.is_quaternion_product()) {
        throw DomainError("hamiltonian conditions need a Q8 x A group, got " + spec.to_string());
    }
    require_inverse_closed(spec, s);
    HamiltonianReport report;
    report.spec = spec;
    report.b = extract_bq(spec, s);
    const AbelianGroup& a = spec.abelian_part();
    const AtomPartition atoms = atom_partition(GroupSpec::abelian(a));

    report.b_one = cone_decompose(atoms, report.b[q8_index(Q8::One)]);
    report.b_minus_one = cone_decompose(atoms, report.b[q8_index(Q8::MinusOne)]);
    report.cond_i = report.b_one.ok() && report.b_minus_one.ok();

    report.cond_ii = true;
    for (std::size_t t = 0; t < 3; ++t) {
        const Q8 q = kImaginaryUnits[t];
        report.pair_sums[t] = cone_decompose(atoms, multiset_sum(report.b[q8_index(q)], report.b[q8_index(q8_negate(q))]));
        report.cond_ii = report.cond_ii && report.pair_sums[t].ok();
    }

    const auto ctx = context_for(a);
    const auto chars = characters(a);
    report.characters.assign(chars.size(), CharacterCheck{Character{}, CycInt(ctx), std::nullopt, {}});
    for_each_index(chars.size(), exec, [&](std::size_t c) {
        CharacterCheck check{chars[c], CycInt(ctx), std::nullopt, {}};
        for (Q8 q : kImaginaryUnits) {
            const CycInt lh = lambda_hat(ctx, a, chars[c], report.b[q8_index(q)], report.b[q8_index(q8_negate(q))]);
            check.h += lh * lh;
        }
        const auto h = check.h.as_rational_integer();
        if (!h) {
            check.failure = "h = " + check.h.to_string() + " is not rational";
        } else if (sgn(*h) > 0) {
            check.failure = "h = " + h->get_str() + " is positive, not a negative perfect square";
        } else if (const auto root = exact_sqrt(-*h)) {
            check.alpha = *root;
        } else {
            check.failure = "h = " + h->get_str() + " is not a negative perfect square";
        }
        report.characters[c] = std::move(check);
    });
    report.cond_iii = std::all_of(report.characters.begin(), report.characters.end(),
                                  [](const CharacterCheck& c) { return c.ok(); });
    report.overall = report.cond_i && report.cond_ii && report.cond_iii;
    return report;
}

Spectrum hamiltonian_spectrum(const GroupSpec& spec, const GMultiset& s, Execution exec) {
    if (!spec.is_quaternion_product()) {
        throw DomainError("hamiltonian spectrum needs a Q8 x A group, got " + spec.to_string());
    }
    require_inverse_closed(spec, s);
    const auto b = extract_bq(spec, s);
    const AbelianGroup& a = spec.abelian_part();
    const auto ctx = context_for(a);
    const auto chars = characters(a);

    struct Block {
        std::vector<CycInt> linear;  // one per linear irrep of Q8
        CycInt base;
        CycInt radicand;
    };
    std::vector<Block> blocks(chars.size(), Block{{}, CycInt(ctx), CycInt(ctx)});
    for_each_index(chars.size(), exec, [&](std::size_t c) {
        std::vector<CycInt> lam;
        lam.reserve(8);
        for (Q8 q : kQ8Elements) lam.push_back(char_sum(ctx, a, chars[c], b[q8_index(q)]));
        Block block{{}, CycInt(ctx), CycInt(ctx)};
        for (Q8Irrep rho : kQ8LinearIrreps) {
            CycInt v(ctx);
            for (Q8 q : kQ8Elements) v += lam[q8_index(q)] * BigInt(q8_character(rho, q));
            block.linear.push_back(std::move(v));
        }
        block.base = lam[q8_index(Q8::One)] - lam[q8_index(Q8::MinusOne)];
        CycInt h(ctx);
        for (Q8 q : kImaginaryUnits) {
            const CycInt lh = lam[q8_index(q)] - lam[q8_index(q8_negate(q))];
            h += lh * lh;
        }
        block.radicand = -h;
        blocks[c] = std::move(block);
    });

    Spectrum out(ctx);
    for (const auto& block : blocks) {
        for (const auto& v : block.linear) out.add(v, 1);
        out.add_pair(block.base, block.radicand, 2);
    }
    return out;
}

Spectrum spectrum(const GroupSpec& spec, const GMultiset& s, Execution exec) {
    return spec.is_quaternion_product() ? hamiltonian_spectrum(spec, s, exec) : abelian_spectrum(spec, s, exec);
}

bool is_integral(const GroupSpec& spec, const GMultiset& s, Execution exec) {
    return spec.is_quaternion_product() ? hamiltonian_conditions(spec, s, exec).overall
                                        : is_integral_abelian(spec, s, exec);
}

// ---------------------------------------------------------------------------
// Q8 x C_p^d
// ---------------------------------------------------------------------------

ElementaryAbelianReport elementary_abelian_analysis(const GroupSpec& spec, const GMultiset& s) {
    if (!spec.is_quaternion_product()) throw DomainError("elementary abelian analysis needs Q8 x C_p^d");
    const AbelianGroup& a = spec.abelian_part();
    if (a.rank() < 2) throw DomainError("elementary abelian analysis needs d >= 2 cyclic factors");
    const int p = a.factors().front();
    for (int n : a.factors()) {
        if (n != p) throw DomainError("elementary abelian analysis needs equal factors Z_p, got " + spec.to_string());
    }
    for (int f = 2; f * f <= p; ++f) {
        if (p % f == 0) throw DomainError("elementary abelian analysis needs p prime, got " + std::to_string(p));
    }
    require_inverse_closed(spec, s);
    const auto b = extract_bq(spec, s);
    if (!b[q8_index(Q8::One)].empty() || !b[q8_index(Q8::MinusOne)].empty()) {
        throw DomainError("elementary abelian analysis needs B_1 = B_-1 = empty");
    }

    const GroupSpec a_spec = GroupSpec::abelian(a);
    ElementaryAbelianReport report;
    report.p = p;
    report.d = a.rank();
    report.weight = 0;
    for (std::size_t t = 0; t < 3; ++t) {
        const Q8 q = kImaginaryUnits[t];
        const GMultiset& bq = b[q8_index(q)];
        const GMultiset& bmq = b[q8_index(q8_negate(q))];
        const GMultiset common = multiset_intersection(bq, bmq);
        report.reduced[t] = multiset_difference(bq, common);
        const AlgebraVector diff =
            AlgebraVector::from_multiset(report.reduced[t]) - AlgebraVector::from_multiset(multiset_difference(bmq, common));
        report.t += convolve(a_spec, diff, diff);
        for (const auto& [g, m] : report.reduced[t].entries()) report.weight += m * m;
    }

    const GroupElement e = a_spec.identity();
    report.identity_coefficient = report.t.coefficient(e);
    report.off_identity_sum = report.t.coefficient_sum() - report.identity_coefficient;
    report.identity_check = report.identity_coefficient == -2 * report.weight;
    report.sum_check = report.off_identity_sum == 2 * report.weight;

    const AtomPartition atoms = atom_partition(a_spec);
    report.constant_on_atoms = true;
    for (std::size_t r = 1; r < atoms.size(); ++r) {
        const auto& cls = atoms.atom(r);
        AtomCoefficient coeff{r, true, report.t.coefficient(cls.front()), cls.front()};
        for (const auto& g : cls) {
            if (report.t.coefficient(g) != coeff.value) {
                coeff.constant = false;
                coeff.witness = g;
                break;
            }
        }
        report.constant_on_atoms = report.constant_on_atoms && coeff.constant;
        report.atoms.push_back(std::move(coeff));
    }

    report.all_squares = report.constant_on_atoms;
    if (!report.constant_on_atoms) return report;

    const auto ctx = context_for(a);
    for (const auto& chi : characters(a)) {
        if (chi.is_principal()) continue;
        HyperplaneCheck check{chi, 0, false, std::nullopt};
        for (const auto& coeff : report.atoms) {
            const auto& cls = atoms.atom(coeff.atom);
            const bool outside_kernel = std::any_of(cls.begin(), cls.end(), [&](const GroupElement& g) {
                return character_exponent(a, chi, g.a) != 0;
            });
            if (outside_kernel) check.alpha_squared += coeff.value;
        }
        check.alpha_squared *= p;
        check.perfect_square = exact_sqrt(check.alpha_squared).has_value();
        CycInt h(ctx);
        for (Q8 q : kImaginaryUnits) {
            const CycInt lh = lambda_hat(ctx, a, chi, b[q8_index(q)], b[q8_index(q8_negate(q))]);
            h += lh * lh;
        }
        if (const auto hv = h.as_rational_integer()) check.direct = -*hv;
        report.all_squares = report.all_squares && check.perfect_square;
        report.hyperplanes.push_back(std::move(check));
    }
    return report;
}

}  // namespace intcay
