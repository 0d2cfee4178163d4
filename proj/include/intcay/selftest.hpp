#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "intcay/groups.hpp"
#include "intcay/spectra.hpp"

namespace intcay::selftest {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct Options {
    std::uint64_t seed = kDefaultSeed;
    /// Smaller sample counts, for interactive runs.
    bool quick = false;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Trace identities every adjacency spectrum must satisfy:
///   sum of multiplicities = |G|, sum lambda = |G| mu(e), sum lambda^2 = |G| sum mu^2.
/// The suites feed every spectrum they produce through one recorder.
class Bookkeeping {
public:
    void record(const std::string& where, const GroupSpec& spec, const GMultiset& s, const Spectrum& spectrum);
    void record(const std::string& where, const GroupSpec& spec, const GMultiset& s,
                const std::map<BigInt, std::size_t>& spectrum);

    std::size_t checked() const noexcept { return checked_; }
    const std::vector<std::string>& failures() const noexcept { return failures_; }

private:
    std::size_t checked_ = 0;
    std::vector<std::string> failures_;
};

/// {(i,1), (-i,2), (j,1), (-j,2), (k,1), (-k,2)} over Q8 x Z3.
GMultiset golden_multiset();
std::map<BigInt, std::size_t> golden_spectrum();

SuiteResult q8_relations(const Q8Table& table = kQ8Table);
SuiteResult group_axioms();
SuiteResult ring_axioms(const Options& options);
SuiteResult cyclotomic_identities();
SuiteResult serial_parallel(const Options& options);
SuiteResult golden_example(Bookkeeping& book);
SuiteResult abelian_equivalence(const Options& options, Bookkeeping& book);
SuiteResult hamiltonian_equivalence(const Options& options, Bookkeeping& book);
SuiteResult counterexample_family(Bookkeeping& book);
SuiteResult simple_q8_z5(const Options& options, Bookkeeping& book);
SuiteResult commute(const Options& options);
SuiteResult bookkeeping(const Bookkeeping& book);
SuiteResult elementary_abelian(const Options& options);
SuiteResult three_squares_probe();

/// Runs every suite in a fixed order. Each result line goes to `out` as soon
/// as its suite finishes; timings only when `timings` is set, so the default
/// output is identical across runs with the same seed.
std::vector<SuiteResult> run_all(const Options& options, std::ostream& out, bool timings = false);

std::string format_result(const SuiteResult& result, bool timings);

}  // namespace intcay::selftest
