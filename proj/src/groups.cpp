#include "intcay/groups.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "intcay/errors.hpp"

namespace intcay {

namespace {

constexpr std::array<std::string_view, 8> kQ8Names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<long long> parse_integer(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    long long value = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
    return value;
}

int reduce(long long value, int modulus) {
    const long long r = value % modulus;
    return static_cast<int>(r < 0 ? r + modulus : r);
}

}  // namespace

// ---------------------------------------------------------------------------
// Q8
// ---------------------------------------------------------------------------

Q8 q8_inv(Q8 q, const Q8Table& table) {
    for (Q8 candidate : kQ8Elements) {
        if (q8_mul(q, candidate, table) == Q8::One) return candidate;
    }
    throw DomainError("Q8 table has no inverse for " + std::string(q8_name(q)));
}

std::string_view q8_name(Q8 q) { return kQ8Names[static_cast<int>(q)]; }

std::optional<Q8> q8_parse(std::string_view text) {
    text = trim(text);
    for (Q8 q : kQ8Elements) {
        if (q8_name(q) == text) return q;
    }
    if (text == "+1" || text == "+i" || text == "+j" || text == "+k") return q8_parse(text.substr(1));
    return std::nullopt;
}

bool q8_relations_hold(const Q8Table& table) {
    const auto m = [&](Q8 x, Q8 y) { return q8_mul(x, y, table); };
    for (const auto& row : table) {
        for (auto v : row) {
            if (v >= 8) return false;
        }
    }
    if (m(Q8::MinusOne, Q8::MinusOne) != Q8::One) return false;
    if (m(Q8::I, Q8::I) != Q8::MinusOne) return false;
    if (m(Q8::J, Q8::J) != Q8::MinusOne) return false;
    if (m(Q8::K, Q8::K) != Q8::MinusOne) return false;
    if (m(m(Q8::I, Q8::J), Q8::K) != Q8::MinusOne) return false;
    for (Q8 x : kQ8Elements) {
        if (m(Q8::One, x) != x || m(x, Q8::One) != x) return false;
        bool has_inverse = false;
        for (Q8 y : kQ8Elements) has_inverse = has_inverse || (m(x, y) == Q8::One && m(y, x) == Q8::One);
        if (!has_inverse) return false;
        for (Q8 y : kQ8Elements) {
            for (Q8 z : kQ8Elements) {
                if (m(m(x, y), z) != m(x, m(y, z))) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// AbelianGroup / GroupSpec
// ---------------------------------------------------------------------------

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int n : factors_) {
        if (n < 2) throw DomainError("cyclic factor Z" + std::to_string(n) + " must have order >= 2");
        order_ *= n;
        exponent_ = std::lcm(exponent_, n);
    }
}

GroupSpec GroupSpec::abelian(AbelianGroup a) { return GroupSpec(false, std::move(a)); }

GroupSpec GroupSpec::quaternion_product(AbelianGroup a) { return GroupSpec(true, std::move(a)); }

GroupSpec GroupSpec::parse(std::string_view text) {
    const std::string original(text);
    text = trim(text);
    if (text == "1") return abelian(AbelianGroup());
    bool quaternion = false;
    if (text == "Q8") return quaternion_product(AbelianGroup());
    if (text.starts_with("Q8x")) {
        quaternion = true;
        text.remove_prefix(3);
    }
    std::vector<int> factors;
    while (true) {
        const auto sep = text.find('x');
        const std::string_view token = text.substr(0, sep);
        if (token.size() < 2 || token.front() != 'Z') {
            throw DomainError("bad group spec '" + original + "': expected Z<n>, got '" + std::string(token) + "'");
        }
        const auto n = parse_integer(token.substr(1));
        if (!n || *n < 2 || *n > 1'000'000) {
            throw DomainError("bad group spec '" + original + "': invalid factor '" + std::string(token) + "'");
        }
        factors.push_back(static_cast<int>(*n));
        if (sep == std::string_view::npos) break;
        text.remove_prefix(sep + 1);
    }
    AbelianGroup a(std::move(factors));
    return quaternion ? quaternion_product(std::move(a)) : abelian(std::move(a));
}

GroupElement GroupSpec::identity() const { return GroupElement{Q8::One, std::vector<int>(abelian_.rank(), 0)}; }

bool GroupSpec::contains(const GroupElement& x) const noexcept {
    if (!quaternion_ && x.q != Q8::One) return false;
    if (static_cast<int>(x.q) >= 8) return false;
    if (x.a.size() != abelian_.rank()) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        if (x.a[i] < 0 || x.a[i] >= abelian_.factors()[i]) return false;
    }
    return true;
}

void GroupSpec::validate(const GroupElement& x) const {
    if (x.a.size() != abelian_.rank()) {
        throw DomainError("invalid element: " + std::to_string(x.a.size()) + " residues for a group with " +
                          std::to_string(abelian_.rank()) + " cyclic factors");
    }
    if (!contains(x)) throw DomainError("invalid element for group " + to_string());
}

std::size_t GroupSpec::index_of(const GroupElement& x) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        idx = idx * static_cast<std::size_t>(abelian_.factors()[i]) + static_cast<std::size_t>(x.a[i]);
    }
    return static_cast<std::size_t>(x.q) * static_cast<std::size_t>(abelian_.order()) + idx;
}

GroupElement GroupSpec::element_at(std::size_t index) const {
    const auto a_order = static_cast<std::size_t>(abelian_.order());
    GroupElement x{static_cast<Q8>(index / a_order), std::vector<int>(abelian_.rank(), 0)};
    std::size_t rest = index % a_order;
    for (std::size_t i = abelian_.rank(); i-- > 0;) {
        const auto n = static_cast<std::size_t>(abelian_.factors()[i]);
        x.a[i] = static_cast<int>(rest % n);
        rest /= n;
    }
    return x;
}

std::vector<GroupElement> GroupSpec::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order()));
    for (std::size_t i = 0; i < static_cast<std::size_t>(order()); ++i) out.push_back(element_at(i));
    return out;
}

GroupElement GroupSpec::parse_element(std::string_view text) const {
    const std::string original(trim(text));
    text = trim(text);
    GroupElement x{Q8::One, {}};
    const auto semi = text.find(';');
    if (semi != std::string_view::npos) {
        if (!quaternion_) throw DomainError("element '" + original + "': abelian elements take no 'q;' prefix");
        const auto q = q8_parse(text.substr(0, semi));
        if (!q) throw DomainError("element '" + original + "': unknown quaternion unit");
        x.q = *q;
        text = trim(text.substr(semi + 1));
    } else if (quaternion_) {
        const auto q = q8_parse(text);
        if (q && abelian_.rank() == 0) return GroupElement{*q, {}};
        throw DomainError("element '" + original + "': expected '<q>;(c1,...,ck)'");
    }
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') throw DomainError("element '" + original + "': unbalanced parentheses");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<std::string_view> parts;
    if (!trim(text).empty()) {
        while (true) {
            const auto comma = text.find(',');
            parts.push_back(text.substr(0, comma));
            if (comma == std::string_view::npos) break;
            text.remove_prefix(comma + 1);
        }
    }
    if (parts.size() != abelian_.rank()) {
        throw DomainError("element '" + original + "': expected " + std::to_string(abelian_.rank()) +
                          " residues, got " + std::to_string(parts.size()));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto v = parse_integer(parts[i]);
        if (!v) throw DomainError("element '" + original + "': bad residue '" + std::string(trim(parts[i])) + "'");
        x.a.push_back(reduce(*v, abelian_.factors()[i]));
    }
    return x;
}

std::string GroupSpec::format(const GroupElement& x) const {
    std::string residues;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        if (i) residues += ',';
        residues += std::to_string(x.a[i]);
    }
    if (!quaternion_) return abelian_.rank() == 1 ? residues : "(" + residues + ")";
    if (abelian_.rank() == 0) return std::string(q8_name(x.q));
    return std::string(q8_name(x.q)) + ";(" + residues + ")";
}

std::string GroupSpec::to_string() const {
    std::string out = quaternion_ ? "Q8" : "";
    for (int n : abelian_.factors()) {
        if (!out.empty()) out += 'x';
        out += "Z" + std::to_string(n);
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Group law
// ---------------------------------------------------------------------------

GroupElement mul(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
    spec.validate(x);
    spec.validate(y);
    GroupElement z{q8_mul(x.q, y.q), std::vector<int>(x.a.size())};
    const auto& factors = spec.abelian_part().factors();
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = (x.a[i] + y.a[i]) % factors[i];
    return z;
}

GroupElement inv(const GroupSpec& spec, const GroupElement& x) {
    spec.validate(x);
    GroupElement z{q8_inv(x.q), std::vector<int>(x.a.size())};
    const auto& factors = spec.abelian_part().factors();
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = (factors[i] - x.a[i]) % factors[i];
    return z;
}

long long element_order(const GroupSpec& spec, const GroupElement& x) {
    spec.validate(x);
    const GroupElement e = spec.identity();
    GroupElement power = x;
    long long t = 1;
    while (power != e) {
        power = mul(spec, power, x);
        ++t;
    }
    return t;
}

bool is_hamiltonian(const GroupSpec& spec) {
    if (!spec.is_quaternion_product()) return false;
    // An element of order 4 exists iff some cyclic factor has order divisible by 4.
    const auto& f = spec.abelian_part().factors();
    return std::none_of(f.begin(), f.end(), [](int n) { return n % 4 == 0; });
}

MultiplicationTable::MultiplicationTable(const GroupSpec& spec)
    : n_(static_cast<std::size_t>(spec.order())), table_(n_ * n_), inverse_(n_) {
    const auto elems = spec.elements();
    for (std::size_t x = 0; x < n_; ++x) {
        inverse_[x] = spec.index_of(inv(spec, elems[x]));
        for (std::size_t y = 0; y < n_; ++y) table_[x * n_ + y] = spec.index_of(mul(spec, elems[x], elems[y]));
    }
}

const MultiplicationTable& multiplication_table(const GroupSpec& spec) {
    static std::mutex guard;
    static std::map<std::string, std::unique_ptr<const MultiplicationTable>> cache;
    const std::string key = spec.to_string();
    {
        std::lock_guard<std::mutex> lock(guard);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto table = std::make_unique<const MultiplicationTable>(spec);
    std::lock_guard<std::mutex> lock(guard);
    auto [it, inserted] = cache.try_emplace(key, std::move(table));
    return *it->second;
}

// ---------------------------------------------------------------------------
// Multisets
// ---------------------------------------------------------------------------

void GMultiset::add(const GroupElement& x, const BigInt& mult) {
    if (sgn(mult) < 0) throw DomainError("negative multiplicity");
    if (sgn(mult) == 0) return;
    entries_[x] += mult;
}

BigInt GMultiset::multiplicity(const GroupElement& x) const {
    const auto it = entries_.find(x);
    return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt GMultiset::total() const {
    BigInt sum = 0;
    for (const auto& [x, m] : entries_) sum += m;
    return sum;
}

GMultiset multiset_sum(const GMultiset& x, const GMultiset& y) {
    GMultiset out = x;
    for (const auto& [g, m] : y.entries()) out.add(g, m);
    return out;
}

GMultiset multiset_intersection(const GMultiset& x, const GMultiset& y) {
    GMultiset out;
    for (const auto& [g, m] : x.entries()) {
        const BigInt other = y.multiplicity(g);
        out.add(g, m < other ? m : other);
    }
    return out;
}

GMultiset multiset_difference(const GMultiset& x, const GMultiset& y) {
    GMultiset out;
    for (const auto& [g, m] : x.entries()) {
        const BigInt d = m - y.multiplicity(g);
        if (sgn(d) > 0) out.add(g, d);
    }
    return out;
}

GMultiset multiset_inverse(const GroupSpec& spec, const GMultiset& s) {
    GMultiset out;
    for (const auto& [g, m] : s.entries()) out.add(inv(spec, g), m);
    return out;
}

GMultiset multiset_scale(const GMultiset& s, const BigInt& factor) {
    GMultiset out;
    for (const auto& [g, m] : s.entries()) out.add(g, m * factor);
    return out;
}

bool is_inverse_closed(const GroupSpec& spec, const GMultiset& s) {
    for (const auto& [g, m] : s.entries()) {
        if (s.multiplicity(inv(spec, g)) != m) return false;
    }
    return true;
}

void validate_support(const GroupSpec& spec, const GMultiset& s) {
    for (const auto& [g, m] : s.entries()) spec.validate(g);
}

GMultiset parse_multiset(const GroupSpec& spec, std::istream& in) {
    GMultiset out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view body(line);
        if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = trim(body);
        if (body.empty()) continue;
        const auto colon = body.rfind(':');
        if (colon == std::string_view::npos) {
            throw DomainError("line " + std::to_string(lineno) + ": expected 'element : multiplicity', got '" +
                              std::string(body) + "'");
        }
        GroupElement x;
        try {
            x = spec.parse_element(body.substr(0, colon));
        } catch (const DomainError& e) {
            throw DomainError("line " + std::to_string(lineno) + ": " + e.what());
        }
        const std::string mult_text(trim(body.substr(colon + 1)));
        BigInt mult;
        if (mult_text.empty() || mult.set_str(mult_text, 10) != 0 || sgn(mult) < 0) {
            throw DomainError("line " + std::to_string(lineno) + ": bad multiplicity '" + mult_text + "'");
        }
        out.add(x, mult);
    }
    return out;
}

GMultiset parse_multiset(const GroupSpec& spec, std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_multiset(spec, in);
}

std::string format_multiset(const GroupSpec& spec, const GMultiset& s) {
    std::string out;
    for (const auto& [g, m] : s.entries()) out += spec.format(g) + " : " + m.get_str() + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Group algebra
// ---------------------------------------------------------------------------

AlgebraVector AlgebraVector::from_multiset(const GMultiset& s) {
    AlgebraVector v;
    for (const auto& [g, m] : s.entries()) v.add(g, m);
    return v;
}

AlgebraVector AlgebraVector::delta(const GroupElement& x) {
    AlgebraVector v;
    v.add(x, 1);
    return v;
}

void AlgebraVector::add(const GroupElement& x, const BigInt& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = entries_.try_emplace(x, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) entries_.erase(it);
    }
}

BigInt AlgebraVector::coefficient(const GroupElement& x) const {
    const auto it = entries_.find(x);
    return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt AlgebraVector::coefficient_sum() const {
    BigInt sum = 0;
    for (const auto& [g, c] : entries_) sum += c;
    return sum;
}

AlgebraVector& AlgebraVector::operator+=(const AlgebraVector& other) {
    for (const auto& [g, c] : other.entries_) add(g, c);
    return *this;
}

AlgebraVector& AlgebraVector::operator-=(const AlgebraVector& other) {
    for (const auto& [g, c] : other.entries_) add(g, -c);
    return *this;
}

AlgebraVector convolve(const GroupSpec& spec, const AlgebraVector& f, const AlgebraVector& g) {
    AlgebraVector out;
    for (const auto& [x, cx] : f.entries()) {
        for (const auto& [y, cy] : g.entries()) out.add(mul(spec, x, y), cx * cy);
    }
    return out;
}

}  // namespace intcay
