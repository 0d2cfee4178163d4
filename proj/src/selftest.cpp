#include "intcay/selftest.hpp"

#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "intcay/algebra.hpp"
#include "intcay/cli.hpp"
#include "intcay/diophantine.hpp"
#include "intcay/errors.hpp"
#include "intcay/oracle.hpp"
#include "intcay/sampling.hpp"

namespace intcay::selftest {

using sampling::Rng;

namespace {

BigInt sum_of_squares(const GMultiset& s) {
    BigInt total = 0;
    for (const auto& [x, m] : s.entries()) total += m * m;
    return total;
}

std::string label(const std::string& where, const GroupSpec& spec) { return where + " over " + spec.to_string(); }

// One engine per (suite, stream) pair so that suites do not shift each
// other's draws when counts change.
Rng stream(const Options& options, std::uint64_t suite, std::uint64_t index = 0) {
    std::seed_seq seq{options.seed, suite, index};
    return Rng(seq);
}

template <class T>
std::string count_line(const char* what, T value) {
    return std::string(what) + " " + std::to_string(value);
}

// Writes `text` to a private temporary file and removes it on destruction.
class TempFile {
public:
    TempFile(const std::string& stem, const std::string& text) {
        path_ = std::filesystem::temp_directory_path() /
                (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++) + ".ms");
        std::ofstream(path_) << text;
    }
    ~TempFile() {
        std::error_code ignored;
        std::filesystem::remove(path_, ignored);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
    std::string path() const { return path_.string(); }

private:
    static int& counter() {
        static int n = 0;
        return n;
    }
    std::filesystem::path path_;
};

struct CliOutput {
    int code = 0;
    std::string out;
    std::string err;
};

CliOutput run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// True when x = c * y for some rational c.
bool is_multiple(const GMultiset& x, const GMultiset& y) {
    if (x.entries().size() != y.entries().size() || x.empty()) return x.empty() && y.empty();
    const auto& [x0, mx0] = *x.entries().begin();
    const BigInt my0 = y.multiplicity(x0);
    if (my0 == 0) return false;
    for (const auto& [e, m] : x.entries()) {
        if (m * my0 != y.multiplicity(e) * mx0) return false;
    }
    return true;
}

SuiteResult make(std::string name, bool passed, std::string detail) {
    return SuiteResult{std::move(name), passed, std::move(detail), 0.0};
}

}  // namespace

// ---------------------------------------------------------------------------
// Bookkeeping
// ---------------------------------------------------------------------------

void Bookkeeping::record(const std::string& where, const GroupSpec& spec, const GMultiset& s,
                         const Spectrum& spectrum) {
    ++checked_;
    const auto& ctx = spectrum.context();
    const BigInt order = big(spec.order());
    const BigInt mu_e = s.multiplicity(spec.identity());
    std::string problem;
    if (spectrum.dimension() != static_cast<std::size_t>(spec.order())) {
        problem = "multiplicities sum to " + std::to_string(spectrum.dimension());
    } else if (spectrum.power_sum(1) != CycInt::from_integer(ctx, order * mu_e)) {
        problem = "sum of eigenvalues is " + spectrum.power_sum(1).to_string();
    } else if (spectrum.power_sum(2) != CycInt::from_integer(ctx, order * sum_of_squares(s))) {
        problem = "sum of squared eigenvalues is " + spectrum.power_sum(2).to_string();
    }
    if (!problem.empty()) failures_.push_back(label(where, spec) + ": " + problem);
}

void Bookkeeping::record(const std::string& where, const GroupSpec& spec, const GMultiset& s,
                         const std::map<BigInt, std::size_t>& spectrum) {
    ++checked_;
    std::size_t count = 0;
    BigInt first = 0;
    BigInt second = 0;
    for (const auto& [lambda, mult] : spectrum) {
        count += mult;
        first += lambda * big(static_cast<long long>(mult));
        second += lambda * lambda * big(static_cast<long long>(mult));
    }
    const BigInt order = big(spec.order());
    std::string problem;
    if (count != static_cast<std::size_t>(spec.order())) {
        problem = "multiplicities sum to " + std::to_string(count);
    } else if (first != order * s.multiplicity(spec.identity())) {
        problem = "sum of eigenvalues is " + first.get_str();
    } else if (second != order * sum_of_squares(s)) {
        problem = "sum of squared eigenvalues is " + second.get_str();
    }
    if (!problem.empty()) failures_.push_back(label(where, spec) + ": " + problem);
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

GMultiset golden_multiset() {
    const GroupSpec spec = GroupSpec::parse("Q8xZ3");
    GMultiset s;
    for (const char* e : {"i;(1)", "-i;(2)", "j;(1)", "-j;(2)", "k;(1)", "-k;(2)"}) s.add(spec.parse_element(e));
    return s;
}

std::map<BigInt, std::size_t> golden_spectrum() {
    return {{6, 1}, {3, 4}, {1, 6}, {0, 4}, {-2, 3}, {-3, 6}};
}

// ---------------------------------------------------------------------------
// Structural suites
// ---------------------------------------------------------------------------

SuiteResult q8_relations(const Q8Table& table) {
    const bool ok = q8_relations_hold(table);
    return make("q8-relations", ok, ok ? "i^2 = j^2 = k^2 = ijk = -1, group axioms on the table"
                                       : "multiplication table violates the Q8 presentation");
}

SuiteResult group_axioms() {
    std::size_t triples = 0;
    for (const char* text : {"Z6", "Z2xZ4", "Z3xZ3", "Q8", "Q8xZ3", "Q8xZ2xZ2"}) {
        const GroupSpec spec = GroupSpec::parse(text);
        const auto elems = spec.elements();
        const GroupElement e = spec.identity();
        for (const auto& x : elems) {
            if (mul(spec, e, x) != x || mul(spec, x, e) != x || mul(spec, x, inv(spec, x)) != e) {
                return make("group-axioms", false, std::string("identity or inverse fails in ") + text);
            }
            for (const auto& y : elems) {
                const GroupElement xy = mul(spec, x, y);
                for (const auto& z : elems) {
                    ++triples;
                    if (mul(spec, xy, z) != mul(spec, x, mul(spec, y, z))) {
                        return make("group-axioms", false, std::string("associativity fails in ") + text);
                    }
                }
            }
        }
    }
    return make("group-axioms", true, count_line("associativity triples checked:", triples));
}

SuiteResult ring_axioms(const Options& options) {
    const std::size_t rounds = options.quick ? 10 : 40;
    Rng rng = stream(options, 3);
    // Convolution in the integer group algebra.
    for (const char* text : {"Z6", "Q8xZ3"}) {
        const GroupSpec spec = GroupSpec::parse(text);
        const auto elems = spec.elements();
        const auto random_vector = [&] {
            AlgebraVector v;
            for (int n = 0; n < 5; ++n) {
                const auto& x = elems[static_cast<std::size_t>(sampling::uniform(rng, 0, spec.order() - 1))];
                v.add(x, big(sampling::uniform(rng, -3, 3)));
            }
            return v;
        };
        for (std::size_t r = 0; r < rounds; ++r) {
            const AlgebraVector f = random_vector();
            const AlgebraVector g = random_vector();
            const AlgebraVector h = random_vector();
            if (convolve(spec, convolve(spec, f, g), h) != convolve(spec, f, convolve(spec, g, h))) {
                return make("ring-axioms", false, std::string("convolution not associative over ") + text);
            }
            if (convolve(spec, f, g + h) != convolve(spec, f, g) + convolve(spec, f, h)) {
                return make("ring-axioms", false, std::string("convolution not distributive over ") + text);
            }
            if (convolve(spec, AlgebraVector::delta(spec.identity()), f) != f) {
                return make("ring-axioms", false, std::string("delta_e is not a unit over ") + text);
            }
        }
    }
    // Z[zeta_m].
    for (unsigned m : {3u, 4u, 5u, 8u, 12u, 15u}) {
        const auto ctx = CycContext::make(m);
        const auto random_cyc = [&] {
            CycInt v(ctx);
            for (unsigned t = 0; t < m; ++t) v.add_scaled_power(t, big(sampling::uniform(rng, -4, 4)));
            return v;
        };
        for (std::size_t r = 0; r < rounds; ++r) {
            const CycInt x = random_cyc();
            const CycInt y = random_cyc();
            const CycInt z = random_cyc();
            const bool ok = x * y == y * x && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
                            x + (-x) == CycInt(ctx) && (x * y).conjugate() == x.conjugate() * y.conjugate();
            if (!ok) return make("ring-axioms", false, "ring identity fails in Z[zeta_" + std::to_string(m) + "]");
        }
    }
    return make("ring-axioms", true, count_line("random rounds per structure:", rounds));
}

SuiteResult cyclotomic_identities() {
    for (unsigned m = 1; m <= 60; ++m) {
        IntPolynomial product = IntPolynomial::constant(1);
        for (unsigned d = 1; d <= m; ++d) {
            if (m % d == 0) product = product * cyclotomic_poly(d);
        }
        if (product != IntPolynomial::monomial(m) - IntPolynomial::constant(1)) {
            return make("cyclotomic", false, "product of Phi_d over d | " + std::to_string(m) + " is not x^m - 1");
        }
        if (cyclotomic_poly(m).degree() != static_cast<int>(euler_phi(m))) {
            return make("cyclotomic", false, "deg Phi_" + std::to_string(m) + " != phi(m)");
        }
        if (m >= 2) {
            const auto ctx = CycContext::make(m);
            CycInt sum(ctx);
            for (unsigned t = 0; t < m; ++t) sum += CycInt::from_root_power(ctx, t);
            if (!sum.is_zero()) {
                return make("cyclotomic", false, "sum of zeta^t for m = " + std::to_string(m) + " is " + sum.to_string());
            }
        }
    }
    return make("cyclotomic", true, "prod_{d|m} Phi_d = x^m - 1 and sum zeta^t = 0 for m <= 60");
}

SuiteResult serial_parallel(const Options& options) {
    Rng rng = stream(options, 4);
    std::size_t compared = 0;
    for (const char* text : {"Z12", "Z2xZ6", "Q8xZ3", "Q8xZ5"}) {
        const GroupSpec spec = GroupSpec::parse(text);
        for (int r = 0; r < (options.quick ? 2 : 5); ++r) {
            const GMultiset s = sampling::random_inverse_closed(spec, rng, 3);
            const Spectrum serial = spectrum(spec, s, Execution::Serial);
            const Spectrum parallel = spectrum(spec, s, Execution::Parallel);
            const IntMatrix adj = adjacency_matrix(spec, s);
            const bool ok = serial.to_machine() == parallel.to_machine() &&
                            char_poly(adj, Execution::Serial) == char_poly(adj, Execution::Parallel) &&
                            multiply(adj, adj, Execution::Serial) == multiply(adj, adj, Execution::Parallel);
            if (!ok) return make("serial-parallel", false, std::string("kernels disagree over ") + text);
            ++compared;
        }
    }
    return make("serial-parallel", true, count_line("multisets compared:", compared));
}

// ---------------------------------------------------------------------------
// Integrality suites
// ---------------------------------------------------------------------------

SuiteResult golden_example(Bookkeeping& book) {
    const char* name = "golden-example";
    const GroupSpec spec = GroupSpec::parse("Q8xZ3");
    const GMultiset s = golden_multiset();
    const auto expected = golden_spectrum();

    const HamiltonianReport report = hamiltonian_conditions(spec, s);
    if (!(report.cond_i && report.cond_ii && report.cond_iii)) {
        return make(name, false, "conditions fail: " + report.failure_reason());
    }
    if (cone_decompose(spec, s).ok()) return make(name, false, "S unexpectedly lies in C(G)");
    const Spectrum exact = spectrum(spec, s);
    book.record(name, spec, s, exact);
    if (exact.integer_multiset() != expected) return make(name, false, "exact spectrum is " + exact.to_text());
    const OracleResult oracle = oracle_check(spec, s);
    if (!oracle.integral || !oracle.spectrum) return make(name, false, "oracle does not find an integral spectrum");
    book.record(name, spec, s, *oracle.spectrum);
    if (*oracle.spectrum != expected) {
        return make(name, false, "oracle spectrum is " + format_integer_spectrum(*oracle.spectrum));
    }

    const TempFile file("intcay-golden", format_multiset(spec, s));
    const std::string text = format_integer_spectrum(expected);
    const CliOutput check = run_cli({"check", "Q8xZ3", file.path()});
    if (check.code != 0 || check.out != "INTEGRAL (conditions i,ii,iii hold); S NOT in C(G)\n") {
        return make(name, false, "check printed: " + check.out + check.err);
    }
    const CliOutput spec_out = run_cli({"spectrum", "Q8xZ3", file.path()});
    if (spec_out.code != 0 || spec_out.out != "spectrum: " + text + "\n") {
        return make(name, false, "spectrum printed: " + spec_out.out + spec_out.err);
    }
    const CliOutput oracle_out = run_cli({"oracle", "Q8xZ3", file.path()});
    if (oracle_out.code != 0 || oracle_out.out != "INTEGRAL; spectrum: " + text + "\n") {
        return make(name, false, "oracle printed: " + oracle_out.out + oracle_out.err);
    }
    return make(name, true, "conditions i,ii,iii hold, S not in C(G), spectrum " + text);
}

namespace {

struct Verdicts {
    bool exact = false;
    bool second = false;  // cone (abelian) or the spectrum-based test (Q8 x A)
    bool oracle = false;
    bool spectra_match = true;
    std::optional<Spectrum> spectrum;
    std::optional<std::map<BigInt, std::size_t>> oracle_spectrum;
};

std::string describe(const GroupSpec& spec, const GMultiset& s) {
    std::string text = format_multiset(spec, s);
    for (char& c : text) {
        if (c == '\n') c = ' ';
    }
    return text;
}

}  // namespace

SuiteResult abelian_equivalence(const Options& options, Bookkeeping& book) {
    const char* name = "abelian-equivalence";
    const std::size_t per_group = options.quick ? 20 : 200;
    const auto groups = sampling::factor_lists_up_to(24);
    std::size_t integral = 0;
    std::size_t total = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const GroupSpec spec = GroupSpec::abelian(groups[g]);
        const AtomPartition atoms = atom_partition(spec);
        Rng rng = stream(options, 5, g);
        std::vector<GMultiset> samples;
        for (std::size_t k = 0; k < per_group; ++k) samples.push_back(sampling::random_mixed(spec, atoms, nullptr, rng, 3));

        std::vector<Verdicts> verdicts(samples.size());
        for_each_index(samples.size(), Execution::Parallel, [&](std::size_t k) {
            Verdicts& v = verdicts[k];
            v.spectrum.emplace(abelian_spectrum(spec, samples[k], Execution::Serial));
            v.exact = v.spectrum->is_integral();
            v.second = cone_decompose(atoms, samples[k]).ok();
            const OracleResult oracle = oracle_check(spec, samples[k], Execution::Serial);
            v.oracle = oracle.integral;
            v.oracle_spectrum = oracle.spectrum;
            if (v.exact && v.oracle) v.spectra_match = v.spectrum->integer_multiset() == oracle.spectrum;
        });
        for (std::size_t k = 0; k < samples.size(); ++k) {
            const Verdicts& v = verdicts[k];
            book.record(name, spec, samples[k], *v.spectrum);
            if (v.oracle_spectrum) book.record(name, spec, samples[k], *v.oracle_spectrum);
            if (v.exact != v.second || v.exact != v.oracle || !v.spectra_match) {
                return make(name, false,
                            "verdicts disagree over " + spec.to_string() + " (characters " +
                                (v.exact ? "integral" : "irrational") + ", cone " + (v.second ? "yes" : "no") +
                                ", oracle " + (v.oracle ? "integral" : "not integral") + ") for " +
                                describe(spec, samples[k]));
            }
            integral += v.exact ? 1 : 0;
            ++total;
        }
    }
    const bool both = integral > 0 && integral < total;
    return make(name, both,
                std::to_string(groups.size()) + " groups x " + std::to_string(per_group) + " multisets: " +
                    std::to_string(integral) + " integral, " + std::to_string(total - integral) +
                    " not integral, three verdicts agree on all" + (both ? "" : " (sample is one-sided)"));
}

SuiteResult hamiltonian_equivalence(const Options& options, Bookkeeping& book) {
    const char* name = "hamiltonian-equivalence";
    const std::size_t per_group = options.quick ? 20 : 120;
    std::size_t integral = 0;
    std::size_t total = 0;
    std::uint64_t index = 0;
    for (const char* text : {"Q8xZ2", "Q8xZ3", "Q8xZ4", "Q8xZ5", "Q8xZ2xZ2"}) {
        const GroupSpec spec = GroupSpec::parse(text);
        const GroupSpec a_spec = GroupSpec::abelian(spec.abelian_part());
        const AtomPartition atoms = atom_partition(spec);
        const AtomPartition atoms_a = atom_partition(a_spec);
        Rng rng = stream(options, 6, index++);
        std::vector<GMultiset> samples;
        for (std::size_t k = 0; k < per_group; ++k) samples.push_back(sampling::random_mixed(spec, atoms, &atoms_a, rng, 2));

        std::vector<Verdicts> verdicts(samples.size());
        for_each_index(samples.size(), Execution::Parallel, [&](std::size_t k) {
            Verdicts& v = verdicts[k];
            v.exact = hamiltonian_conditions(spec, samples[k], Execution::Serial).overall;
            v.spectrum.emplace(hamiltonian_spectrum(spec, samples[k], Execution::Serial));
            v.second = v.spectrum->is_integral();
            const OracleResult oracle = oracle_check(spec, samples[k], Execution::Serial);
            v.oracle = oracle.integral;
            v.oracle_spectrum = oracle.spectrum;
            if (v.exact && v.oracle) v.spectra_match = v.spectrum->integer_multiset() == oracle.spectrum;
        });
        for (std::size_t k = 0; k < samples.size(); ++k) {
            const Verdicts& v = verdicts[k];
            book.record(name, spec, samples[k], *v.spectrum);
            if (v.oracle_spectrum) book.record(name, spec, samples[k], *v.oracle_spectrum);
            if (v.exact != v.second || v.exact != v.oracle || !v.spectra_match) {
                return make(name, false,
                            std::string("verdicts disagree over ") + text + " (conditions " +
                                (v.exact ? "hold" : "fail") + ", block spectrum " +
                                (v.second ? "integral" : "not integral") + ", oracle " +
                                (v.oracle ? "integral" : "not integral") + ") for " + describe(spec, samples[k]));
            }
            integral += v.exact ? 1 : 0;
            ++total;
        }
    }
    const bool both = integral > 0 && integral < total;
    return make(name, both,
                "5 groups x " + std::to_string(per_group) + " multisets: " + std::to_string(integral) + " integral, " +
                    std::to_string(total - integral) + " not integral, conditions and oracle agree on all" +
                    (both ? "" : " (sample is one-sided)"));
}

SuiteResult counterexample_family(Bookkeeping& book) {
    const char* name = "counterexample-family";
    const GroupSpec spec = GroupSpec::parse("Q8xZ5");
    const auto seeds = counterexample_seeds(3);
    std::vector<GMultiset> built;
    std::string listed;
    for (const auto& sol : seeds) {
        const std::string tag = "(" + std::to_string(sol.x) + "," + std::to_string(sol.y) + "," + std::to_string(sol.z) + ")";
        if (sol.x * sol.x + sol.y * sol.y != 5 * sol.z * sol.z) return make(name, false, tag + " is not a solution");
        const GMultiset s = build_counterexample_5(sol);
        if (!verify_counterexample(spec, s)) return make(name, false, tag + ": integral-but-not-in-cone check fails");
        const HamiltonianReport report = hamiltonian_conditions(spec, s);
        for (const auto& check : report.characters) {
            const BigInt want = check.chi.is_principal() ? BigInt(0) : big(10 * sol.z);
            if (!check.alpha || *check.alpha != want) {
                return make(name, false, tag + ": alpha at character " + format_character(check.chi) + " is not " +
                                             want.get_str());
            }
        }
        const Spectrum exact = spectrum(spec, s);
        const OracleResult oracle = oracle_check(spec, s);
        book.record(name, spec, s, exact);
        if (oracle.spectrum) book.record(name, spec, s, *oracle.spectrum);
        if (exact.integer_multiset() != oracle.spectrum) return make(name, false, tag + ": spectra differ");
        built.push_back(s);
        listed += (listed.empty() ? "" : " ") + tag;
    }
    for (std::size_t x = 0; x < built.size(); ++x) {
        for (std::size_t y = x + 1; y < built.size(); ++y) {
            if (is_multiple(built[x], built[y])) return make(name, false, "two constructed multisets are proportional");
        }
    }
    return make(name, true, "seeds " + listed + ": integral, not in C(G), alpha = 10*z, pairwise non-proportional");
}

SuiteResult simple_q8_z5(const Options& options, Bookkeeping& book) {
    const char* name = "simple-q8xz5";
    const std::size_t count = options.quick ? 60 : 600;
    const GroupSpec spec = GroupSpec::parse("Q8xZ5");
    const GroupSpec a_spec = GroupSpec::abelian(spec.abelian_part());
    const AtomPartition atoms = atom_partition(spec);
    const AtomPartition atoms_a = atom_partition(a_spec);
    Rng rng = stream(options, 7);

    std::vector<GMultiset> samples;
    std::vector<bool> atom_union;
    for (std::size_t k = 0; k < count; ++k) {
        switch (k % 3) {
            case 0: samples.push_back(sampling::random_inverse_closed_set(spec, rng)); break;
            case 1: samples.push_back(sampling::random_cone_member(atoms, rng, 1)); break;
            default: samples.push_back(sampling::random_hamiltonian_candidate(spec, atoms_a, rng, 1)); break;
        }
        atom_union.push_back(k % 3 == 1);
    }
    std::vector<HamiltonianReport> reports(samples.size());
    std::vector<std::optional<Spectrum>> spectra(samples.size());
    for_each_index(samples.size(), Execution::Parallel, [&](std::size_t k) {
        reports[k] = hamiltonian_conditions(spec, samples[k], Execution::Serial);
        spectra[k].emplace(hamiltonian_spectrum(spec, samples[k], Execution::Serial));
    });

    std::size_t integral = 0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const GMultiset& s = samples[k];
        for (const auto& [x, m] : s.entries()) {
            if (m != 1) return make(name, false, "generator produced a multiset that is not a set");
        }
        book.record(name, spec, s, *spectra[k]);
        const HamiltonianReport& r = reports[k];
        if (atom_union[k] && !r.overall) {
            return make(name, false, "union of atoms is not integral: " + r.failure_reason());
        }
        if (!r.overall) continue;
        ++integral;
        const bool p1 = r.b_one.ok() && r.b_minus_one.ok();
        bool p2 = true;
        for (Q8 q : {Q8::I, Q8::J, Q8::K}) {
            const GMultiset& bq = r.b[static_cast<int>(q)];
            p2 = p2 && bq == r.b[static_cast<int>(q8_negate(q))] && cone_decompose(atoms_a, bq).ok();
        }
        if (!p1 || !p2) return make(name, false, "integral set violates (P1)/(P2): " + describe(spec, s));
    }
    return make(name, true,
                std::to_string(count) + " subsets: " + std::to_string(integral) +
                    " integral, all satisfy (P1) and (P2); every union of atoms integral");
}

SuiteResult commute(const Options& options) {
    const char* name = "commute";
    const GroupSpec spec = GroupSpec::parse("Q8xZ3");
    const MultiplicationTable& table = multiplication_table(spec);
    const std::size_t n = table.size();

    // Conjugacy classes, then the inverse-closed unions C u C^-1.
    std::vector<int> class_of(n, -1);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t x = 0; x < n; ++x) {
        if (class_of[x] >= 0) continue;
        std::vector<std::size_t> cls;
        for (std::size_t g = 0; g < n; ++g) {
            const std::size_t y = table.product(table.product(g, x), table.inverse(g));
            if (class_of[y] < 0) {
                class_of[y] = static_cast<int>(classes.size());
                cls.push_back(y);
            }
        }
        classes.push_back(std::move(cls));
    }
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<bool> used(classes.size(), false);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (used[c]) continue;
        used[c] = true;
        std::vector<std::size_t> block = classes[c];
        const auto partner = static_cast<std::size_t>(class_of[table.inverse(classes[c].front())]);
        if (!used[partner]) {
            used[partner] = true;
            block.insert(block.end(), classes[partner].begin(), classes[partner].end());
        }
        blocks.push_back(std::move(block));
    }
    std::vector<GMultiset> ts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << blocks.size()); ++mask) {
        GMultiset t;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (mask >> b & 1) {
                for (std::size_t x : blocks[b]) t.add(spec.element_at(x));
            }
        }
        ts.push_back(std::move(t));
    }

    Rng rng = stream(options, 8);
    const std::size_t s_count = options.quick ? 5 : 50;
    std::vector<GMultiset> ss;
    for (std::size_t k = 0; k < s_count; ++k) ss.push_back(sampling::random_inverse_closed(spec, rng, 3));

    std::vector<char> ok(ss.size() * ts.size(), 0);
    for_each_index(ok.size(), Execution::Parallel, [&](std::size_t idx) {
        ok[idx] = commute_check(spec, ss[idx / ts.size()], ts[idx % ts.size()], Execution::Serial) ? 1 : 0;
    });
    const auto failures = std::count(ok.begin(), ok.end(), 0);
    if (failures > 0) return make(name, false, std::to_string(failures) + " pairs fail to commute");

    GMultiset bad;
    bad.add(spec.parse_element("i;(0)"));
    bool rejected = false;
    try {
        commute_check(spec, ss.front(), bad);
    } catch (const DomainError&) {
        rejected = true;
    }
    if (!rejected) return make(name, false, "T = {(i,0)} was not rejected");
    return make(name, true,
                std::to_string(classes.size()) + " conjugacy classes, " + std::to_string(ts.size()) + " T x " +
                    std::to_string(ss.size()) + " S commute; T = {(i,0)} rejected");
}

SuiteResult bookkeeping(const Bookkeeping& book) {
    if (!book.failures().empty()) return make("bookkeeping", false, book.failures().front());
    return make("bookkeeping", book.checked() > 0,
                std::to_string(book.checked()) + " spectra satisfy the trace identities");
}

SuiteResult elementary_abelian(const Options& options) {
    const char* name = "elementary-abelian";
    const GroupSpec spec = GroupSpec::parse("Q8xZ3xZ3");
    const AtomPartition atoms = atom_partition(spec);
    const std::size_t count = options.quick ? 10 : 50;
    Rng rng = stream(options, 9);

    std::vector<std::size_t> outer;  // atoms avoiding q = +-1
    for (std::size_t r = 0; r < atoms.size(); ++r) {
        const Q8 q = atoms.atom(r).front().q;
        if (q != Q8::One && q != Q8::MinusOne) outer.push_back(r);
    }
    for (std::size_t k = 0; k < count; ++k) {
        std::map<std::size_t, BigInt> weights;
        for (std::size_t r : outer) {
            const long long c = sampling::uniform(rng, 0, 2);
            if (c > 0) weights[r] = big(c);
        }
        const GMultiset s = atom_combination(atoms, weights);
        const ElementaryAbelianReport report = elementary_abelian_analysis(spec, s);
        bool zero = report.constant_on_atoms && report.all_squares && report.identity_check && report.sum_check;
        for (const auto& h : report.hyperplanes) zero = zero && h.alpha_squared == 0 && h.direct == h.alpha_squared;
        if (!zero) return make(name, false, "cone member fails the analysis: " + describe(spec, s));
    }
    std::size_t constant = 0;
    for (std::size_t k = 0; k < count; ++k) {
        GMultiset s;
        const GMultiset free = sampling::random_inverse_closed(spec, rng, 2);
        for (const auto& [x, m] : free.entries()) {
            if (x.q != Q8::One && x.q != Q8::MinusOne) s.add(x, m);
        }
        const ElementaryAbelianReport report = elementary_abelian_analysis(spec, s);
        if (!report.identity_check || !report.sum_check) {
            return make(name, false, "identity-coefficient identities fail: " + describe(spec, s));
        }
        if (report.constant_on_atoms) {
            ++constant;
            for (const auto& h : report.hyperplanes) {
                if (h.direct != h.alpha_squared) return make(name, false, "hyperplane formula disagrees with -h");
            }
        }
    }
    return make(name, true,
                std::to_string(count) + " cone members with alpha^2 = 0 everywhere; " + std::to_string(count) +
                    " free multisets satisfy T(e) = -2W and sum a_g = 2W (" + std::to_string(constant) +
                    " atom-constant)");
}

SuiteResult three_squares_probe() {
    const char* name = "three-squares-p7";
    const auto found = solutions_three_squares(7, 50);
    if (!found.empty()) return make(name, false, std::to_string(found.size()) + " solutions of x^2+y^2+z^2 = 7a^2");
    const CliOutput out = run_cli({"counterexample", "--p", "7"});
    if (out.code != 0 || out.out.find("4^a(8b+7)") == std::string::npos) {
        return make(name, false, "CLI did not print the note: " + out.out + out.err);
    }
    return make(name, true, "no solutions with alpha <= 50; CLI prints the 4^a(8b+7) note");
}

// ---------------------------------------------------------------------------

std::string format_result(const SuiteResult& result, bool timings) {
    std::ostringstream line;
    line << (result.passed ? "PASS " : "FAIL ") << result.name << ": " << result.detail;
    if (timings) line << " [" << std::fixed << std::setprecision(2) << result.seconds << " s]";
    return line.str();
}

std::vector<SuiteResult> run_all(const Options& options, std::ostream& out, bool timings) {
    Bookkeeping book;
    const std::vector<std::pair<const char*, std::function<SuiteResult()>>> suites = {
        {"q8-relations", [] { return q8_relations(); }},
        {"group-axioms", [] { return group_axioms(); }},
        {"ring-axioms", [&] { return ring_axioms(options); }},
        {"cyclotomic", [] { return cyclotomic_identities(); }},
        {"serial-parallel", [&] { return serial_parallel(options); }},
        {"golden-example", [&] { return golden_example(book); }},
        {"abelian-equivalence", [&] { return abelian_equivalence(options, book); }},
        {"hamiltonian-equivalence", [&] { return hamiltonian_equivalence(options, book); }},
        {"counterexample-family", [&] { return counterexample_family(book); }},
        {"simple-q8xz5", [&] { return simple_q8_z5(options, book); }},
        {"commute", [&] { return commute(options); }},
        {"bookkeeping", [&] { return bookkeeping(book); }},
        {"elementary-abelian", [&] { return elementary_abelian(options); }},
        {"three-squares-p7", [] { return three_squares_probe(); }},
    };
    std::vector<SuiteResult> results;
    for (const auto& [name, suite] : suites) {
        const auto start = std::chrono::steady_clock::now();
        SuiteResult result;
        try {
            result = suite();
        } catch (const std::exception& e) {
            result = make(name, false, std::string("exception: ") + e.what());
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << format_result(result, timings) << '\n' << std::flush;
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace intcay::selftest
