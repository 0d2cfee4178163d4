#include "intcay/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "intcay/algebra.hpp"
#include "intcay/diophantine.hpp"
#include "intcay/errors.hpp"
#include "intcay/oracle.hpp"
#include "intcay/selftest.hpp"
#include "intcay/spectra.hpp"

namespace intcay::cli {

namespace {

GMultiset load_multiset(const GroupSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open multiset file '" + path + "'");
    return parse_multiset(spec, in);
}

std::string inline_set(const GroupSpec& spec, const std::vector<GroupElement>& elems) {
    std::string out = "{";
    for (std::size_t k = 0; k < elems.size(); ++k) out += (k ? "," : "") + spec.format(elems[k]);
    return out + "}";
}

std::string inline_multiset(const GroupSpec& spec, const GMultiset& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& [x, m] : s.entries()) {
        out += (first ? "" : ", ") + spec.format(x) + ":" + m.get_str();
        first = false;
    }
    return out + "}";
}

bool has_irrational(const Spectrum& s) {
    for (const auto& e : s.entries()) {
        if (e.value.kind() != SpectralValue::Kind::Rational) return true;
    }
    return false;
}

int cmd_atoms(const std::string& group, std::ostream& out) {
    const GroupSpec spec = GroupSpec::parse(group);
    const AtomPartition atoms = atom_partition(spec);
    for (const auto& cls : atoms.classes()) out << inline_set(spec, cls) << '\n';
    return 0;
}

int cmd_spectrum(const std::string& group, const std::string& file, bool machine, std::ostream& out) {
    const GroupSpec spec = GroupSpec::parse(group);
    const Spectrum s = spectrum(spec, load_multiset(spec, file));
    if (machine) {
        out << s.to_machine() << '\n';
        return 0;
    }
    out << "spectrum: " << s.to_text() << '\n';
    if (has_irrational(s)) out << "where z = zeta_" << s.context()->m() << '\n';
    return 0;
}

int cmd_check(const std::string& group, const std::string& file, std::ostream& out) {
    const GroupSpec spec = GroupSpec::parse(group);
    const GMultiset s = load_multiset(spec, file);
    if (!spec.is_quaternion_product()) {
        const AbelianVerdict v = abelian_verdict(spec, s);
        if (v.integral) {
            out << "INTEGRAL; S in C(G)\n";
        } else {
            out << "NOT INTEGRAL (character a=" << format_character(*v.irrational_character)
                << " has an irrational sum); S NOT in C(G)\n";
        }
        return 0;
    }
    const HamiltonianReport report = hamiltonian_conditions(spec, s);
    const bool in_cone = cone_decompose(spec, s).ok();
    const bool block_integral = hamiltonian_spectrum(spec, s).is_integral();
    if (block_integral != report.overall) {
        throw InconsistencyError("conditions (i)-(iii) and the block spectrum disagree on integrality");
    }
    if (in_cone && !report.overall) throw InconsistencyError("S lies in C(G) but is reported not integral");
    const char* cone = in_cone ? "S in C(G)" : "S NOT in C(G)";
    if (report.overall) {
        out << "INTEGRAL (conditions i,ii,iii hold); " << cone << '\n';
    } else {
        out << "NOT INTEGRAL (" << report.failure_reason() << "); " << cone << '\n';
    }
    return 0;
}

int cmd_hamiltonian(const std::string& group, const std::string& file, std::ostream& out) {
    const GroupSpec spec = GroupSpec::parse(group);
    const GMultiset s = load_multiset(spec, file);
    const HamiltonianReport r = hamiltonian_conditions(spec, s);
    const GroupSpec a_spec = GroupSpec::abelian(spec.abelian_part());
    out << "group: " << spec.to_string() << (is_hamiltonian(spec) ? " (hamiltonian)" : " (A has elements of order 4)")
        << '\n';
    for (Q8 q : kQ8Elements) {
        out << "B_" << q8_name(q) << " = " << inline_multiset(a_spec, r.b[static_cast<int>(q)]) << '\n';
    }
    const auto holds = [](bool ok) { return ok ? "holds" : "fails"; };
    out << "condition (i): " << holds(r.cond_i) << '\n';
    out << "condition (ii): " << holds(r.cond_ii) << '\n';
    out << "condition (iii): " << holds(r.cond_iii) << '\n';
    for (const auto& c : r.characters) {
        out << "  a=" << format_character(c.chi) << ": ";
        if (c.ok()) {
            out << "h = " << BigInt(-(*c.alpha * *c.alpha)).get_str() << " = -(" << c.alpha->get_str() << ")^2\n";
        } else {
            out << c.failure << '\n';
        }
    }
    if (r.overall) {
        out << "verdict: INTEGRAL\n";
    } else {
        out << "verdict: NOT INTEGRAL (" << r.failure_reason() << ")\n";
    }
    return 0;
}

int cmd_oracle(const std::string& group, const std::string& file, bool charpoly, bool machine, std::ostream& out) {
    const GroupSpec spec = GroupSpec::parse(group);
    const OracleResult r = oracle_check(spec, load_multiset(spec, file));
    if (machine) {
        out << (r.integral ? format_integer_spectrum_machine(*r.spectrum) : std::string("NOT INTEGRAL")) << '\n';
    } else if (r.integral) {
        out << "INTEGRAL; spectrum: " << format_integer_spectrum(*r.spectrum) << '\n';
    } else {
        out << "NOT INTEGRAL; the characteristic polynomial has a root that is not an integer\n";
    }
    if (charpoly) {
        out << "charpoly:";
        for (int k = r.charpoly.degree(); k >= 0; --k) out << ' ' << r.charpoly.coefficient(k).get_str();
        out << '\n';
    }
    return 0;
}

std::string solution_text(const Solution3& s) {
    return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + "," + std::to_string(s.z) + ")";
}

int cmd_counterexample(long long p, std::size_t count, long long bound, const std::string& dir, std::ostream& out) {
    if (p == 7) {
        const auto found = solutions_three_squares(7, bound);
        out << three_squares_note(7, bound, found.size()) << '\n';
        return 0;
    }
    if (p != 5) throw DomainError("counterexample: --p must be 5 (construction) or 7 (probe), got " + std::to_string(p));
    const GroupSpec spec = GroupSpec::parse("Q8xZ5");
    std::filesystem::create_directories(dir);
    bool all_ok = true;
    const auto seeds = counterexample_seeds(count);
    for (std::size_t k = 0; k < seeds.size(); ++k) {
        const Solution3& sol = seeds[k];
        const GMultiset s = build_counterexample_5(sol);
        const std::filesystem::path path =
            std::filesystem::path(dir) / ("q8xz5-counterexample-" + std::to_string(k + 1) + ".ms");
        std::ofstream file(path);
        if (!file) throw DomainError("cannot write '" + path.string() + "'");
        file << "# Q8xZ5, integral but not in C(G); (m,n,alpha) = " << solution_text(sol) << '\n'
             << format_multiset(spec, s);
        file.close();

        const bool verified = verify_counterexample(spec, s);
        const HamiltonianReport report = hamiltonian_conditions(spec, s);
        bool alpha_ok = true;
        for (const auto& c : report.characters) {
            const BigInt want = c.chi.is_principal() ? BigInt(0) : big(10 * sol.z);
            alpha_ok = alpha_ok && c.alpha && *c.alpha == want;
        }
        const bool ok = verified && alpha_ok;
        all_ok = all_ok && ok;
        out << "#" << k + 1 << " (m,n,alpha) = " << solution_text(sol) << ": " << path.string()
            << "; total(S) = " << s.total().get_str() << "; integral (exact and oracle), S NOT in C(G), alpha = "
            << 10 * sol.z << " at every non-principal character: " << (ok ? "VERIFIED" : "FAILED") << '\n';
    }
    if (!all_ok) throw InconsistencyError("a constructed multiset failed verification");
    return 0;
}

int cmd_pgeometry(const std::string& group, const std::string& file, std::ostream& out) {
    const GroupSpec spec = GroupSpec::parse(group);
    const GMultiset s = load_multiset(spec, file);
    const ElementaryAbelianReport r = elementary_abelian_analysis(spec, s);
    const GroupSpec a_spec = GroupSpec::abelian(spec.abelian_part());
    const AtomPartition atoms = atom_partition(a_spec);
    const auto yes = [](bool ok) { return ok ? "holds" : "FAILS"; };
    out << "group: " << spec.to_string() << " (p = " << r.p << ", d = " << r.d << ")\n";
    const char* names[] = {"i", "j", "k"};
    for (int u = 0; u < 3; ++u) out << "B'_" << names[u] << " = " << inline_multiset(a_spec, r.reduced[u]) << '\n';
    out << "W = sum of squared multiplicities in B'_i, B'_j, B'_k = " << r.weight.get_str() << '\n';
    out << "T(e) = " << r.identity_coefficient.get_str() << ", -2W = " << BigInt(-2 * r.weight).get_str() << ": "
        << yes(r.identity_check) << '\n';
    out << "sum of a_g over g != e = " << r.off_identity_sum.get_str() << ", 2W = " << BigInt(2 * r.weight).get_str()
        << ": " << yes(r.sum_check) << '\n';
    for (const auto& a : r.atoms) {
        out << "  atom " << inline_set(a_spec, atoms.atom(a.atom)) << ": ";
        if (a.constant) {
            out << "b = " << a.value.get_str() << '\n';
        } else {
            out << "not constant (first differs at " << a_spec.format(a.witness) << ")\n";
        }
    }
    out << "a_g constant on every atom: " << (r.constant_on_atoms ? "yes" : "no") << '\n';
    for (const auto& h : r.hyperplanes) {
        out << "  a=" << format_character(h.chi) << ": alpha^2 = " << h.alpha_squared.get_str()
            << (h.perfect_square ? " (square)" : " (not a square)");
        if (h.direct) out << ", direct -h = " << h.direct->get_str();
        out << '\n';
    }
    const bool necessary = r.identity_check && r.sum_check && r.constant_on_atoms && r.all_squares;
    out << "verdict: " << (necessary ? "necessary conditions hold" : "necessary conditions fail") << '\n';
    return 0;
}

int cmd_selftest(std::uint64_t seed, bool quick, bool timings, std::ostream& out) {
    selftest::Options options;
    options.seed = seed;
    options.quick = quick;
    const auto results = selftest::run_all(options, out, timings);
    const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    out << passed << "/" << results.size() << " suites passed\n";
    return passed == static_cast<long>(results.size()) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integrality of Cayley multigraphs over abelian groups and Q8 x A", "intcay"};
    app.require_subcommand(1, 1);

    std::string group;
    std::string file;
    bool machine = false;
    bool charpoly = false;
    long long p = 0;
    std::size_t count = 3;
    long long bound = 50;
    std::string dir = ".";
    std::uint64_t seed = selftest::kDefaultSeed;
    bool quick = false;
    bool timings = false;

    const auto with_file = [&](CLI::App* sub) {
        sub->add_option("group", group, "group spec, e.g. Z6 or Q8xZ3")->required();
        sub->add_option("file", file, "multiset file")->required();
    };
    auto* atoms = app.add_subcommand("atoms", "print the atoms of B(G), one per line");
    atoms->add_option("group", group, "group spec")->required();
    auto* spec_cmd = app.add_subcommand("spectrum", "exact spectrum of Cay(G, S)");
    with_file(spec_cmd);
    spec_cmd->add_flag("--machine", machine, "single line 'value x mult;...'");
    auto* check = app.add_subcommand("check", "integrality verdict and cone membership");
    with_file(check);
    auto* ham = app.add_subcommand("hamiltonian", "conditions (i)-(iii) for Q8 x A, per character");
    with_file(ham);
    auto* oracle = app.add_subcommand("oracle", "brute-force characteristic polynomial verdict");
    with_file(oracle);
    oracle->add_flag("--charpoly", charpoly, "print coefficients, highest degree first");
    oracle->add_flag("--machine", machine, "single line 'value x mult;...'");
    auto* counter = app.add_subcommand("counterexample", "integral multisets outside C(G) over Q8 x Z5");
    counter->add_option("--p", p, "5 builds the family, 7 runs the three-squares probe")->required();
    counter->add_option("--count", count, "number of multisets");
    counter->add_option("--bound", bound, "alpha bound for the p = 7 search");
    counter->add_option("--out", dir, "directory for the multiset files");
    auto* pgeom = app.add_subcommand("pgeometry", "necessary conditions over Q8 x Z_p^d with B_1 = B_-1 = {}");
    with_file(pgeom);
    auto* self = app.add_subcommand("selftest", "run the property suites");
    self->add_option("--seed", seed, "seed for the randomized suites");
    self->add_flag("--quick", quick, "smaller sample counts");
    self->add_flag("--timings", timings, "append wall time to each suite line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (atoms->parsed()) return cmd_atoms(group, out);
        if (spec_cmd->parsed()) return cmd_spectrum(group, file, machine, out);
        if (check->parsed()) return cmd_check(group, file, out);
        if (ham->parsed()) return cmd_hamiltonian(group, file, out);
        if (oracle->parsed()) return cmd_oracle(group, file, charpoly, machine, out);
        if (counter->parsed()) return cmd_counterexample(p, count, bound, dir, out);
        if (pgeom->parsed()) return cmd_pgeometry(group, file, out);
        if (self->parsed()) return cmd_selftest(seed, quick, timings, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace intcay::cli
