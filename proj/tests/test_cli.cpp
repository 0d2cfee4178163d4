#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "intcay/cli.hpp"
#include "intcay/diophantine.hpp"
#include "intcay/groups.hpp"
#include "support.hpp"

using testing::data_file;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = intcay::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("atoms") {
    const Result r = run({"atoms", "Z6"});
    CHECK(r.code == 0);
    CHECK(r.out == "{0}\n{3}\n{2,4}\n{1,5}\n");
    CHECK(run({"atoms", "Q8"}).out == "{1}\n{-1}\n{i,-i}\n{j,-j}\n{k,-k}\n");
}

TEST_CASE("check") {
    CHECK(run({"check", "Q8xZ3", data_file("q8z3-golden.ms")}).out == "INTEGRAL (conditions i,ii,iii hold); S NOT in C(G)\n");
    CHECK(run({"check", "Z5", data_file("k5.ms")}).out == "INTEGRAL; S in C(G)\n");
    CHECK(run({"check", "Z5", data_file("c5.ms")}).out ==
          "NOT INTEGRAL (character a=(1) has an irrational sum); S NOT in C(G)\n");
    const Result fail = run({"check", "Q8xZ3", data_file("q8z3-fail.ms")});
    CHECK(fail.code == 0);
    CHECK(fail.out ==
          "NOT INTEGRAL (condition (iii) fails at character a=(1): h = -3 is not a negative perfect square); "
          "S NOT in C(G)\n");
}

TEST_CASE("spectrum and oracle") {
    CHECK(run({"oracle", "Z5", data_file("k5.ms")}).out == "INTEGRAL; spectrum: 4 x1; -1 x4\n");
    CHECK(run({"oracle", "Z5", data_file("k5.ms"), "--charpoly"}).out ==
          "INTEGRAL; spectrum: 4 x1; -1 x4\ncharpoly: 1 0 -10 -20 -15 -4\n");
    CHECK(run({"oracle", "Z5", data_file("c5.ms")}).out.starts_with("NOT INTEGRAL"));
    CHECK(run({"spectrum", "Q8xZ3", data_file("q8z3-golden.ms")}).out == "spectrum: 6 x1; 3 x4; 1 x6; 0 x4; -2 x3; -3 x6\n");
    CHECK(run({"spectrum", "Q8xZ3", data_file("q8z3-golden.ms"), "--machine"}).out ==
          "6 x 1;3 x 4;1 x 6;0 x 4;-2 x 3;-3 x 6\n");
    const Result c5 = run({"spectrum", "Z5", data_file("c5.ms")});
    CHECK(c5.out.find("where z = zeta_5") != std::string::npos);
}

TEST_CASE("hamiltonian and pgeometry reports") {
    const Result h = run({"hamiltonian", "Q8xZ3", data_file("q8z3-fail.ms")});
    CHECK(h.code == 0);
    CHECK(h.out.find("condition (iii): fails") != std::string::npos);
    CHECK(h.out.find("a=(1): h = -3 is not a negative perfect square") != std::string::npos);
    CHECK(h.out.find("verdict: NOT INTEGRAL (condition (iii) fails") != std::string::npos);
    CHECK(run({"hamiltonian", "Q8xZ3", data_file("q8z3-golden.ms")}).out.find("verdict: INTEGRAL\n") != std::string::npos);
    CHECK(run({"hamiltonian", "Z5", data_file("k5.ms")}).code == 1);

    const auto dir = std::filesystem::temp_directory_path() / "intcay-cli-test";
    std::filesystem::create_directories(dir);
    const auto file = (dir / "pg.ms").string();
    std::ofstream(file) << "i;(1,0) : 1\n-i;(2,0) : 1\n";
    const Result pg = run({"pgeometry", "Q8xZ3xZ3", file});
    CHECK(pg.code == 0);
    CHECK(pg.out.find("T(e) = -2, -2W = -2: holds") != std::string::npos);
    CHECK(pg.out.find("verdict: necessary conditions fail") != std::string::npos);
}

TEST_CASE("counterexample files") {
    const auto dir = std::filesystem::temp_directory_path() / "intcay-cli-counterexamples";
    std::filesystem::remove_all(dir);
    const Result r = run({"counterexample", "--p", "5", "--count", "3", "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("(m,n,alpha) = (2,1,1)") != std::string::npos);
    CHECK(r.out.find("(m,n,alpha) = (22,19,13)") != std::string::npos);
    const intcay::GroupSpec spec = intcay::GroupSpec::parse("Q8xZ5");
    std::size_t files = 0;
    for (const auto& seed : intcay::counterexample_seeds(3)) {
        ++files;
        std::ifstream in(dir / ("q8xz5-counterexample-" + std::to_string(files) + ".ms"));
        REQUIRE(in);
        CHECK(intcay::parse_multiset(spec, in) == intcay::build_counterexample_5(seed));
    }
    const Result seven = run({"counterexample", "--p", "7"});
    CHECK(seven.code == 0);
    CHECK(seven.out.find("4^a(8b+7)") != std::string::npos);
    CHECK(run({"counterexample", "--p", "3"}).code == 1);
}

TEST_CASE("errors and exit codes") {
    const Result spec = run({"atoms", "Z6xQ"});
    CHECK(spec.code == 1);
    CHECK(spec.err.find("'Q'") != std::string::npos);
    const Result missing = run({"check", "Z5", "/nonexistent/file.ms"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    const auto dir = std::filesystem::temp_directory_path() / "intcay-cli-test";
    std::filesystem::create_directories(dir);
    const auto bad_line = (dir / "bad.ms").string();
    std::ofstream(bad_line) << "1 : 1\n4 1\n";
    const Result parse = run({"check", "Z5", bad_line});
    CHECK(parse.code == 1);
    CHECK(parse.err.find("line 2") != std::string::npos);
    const auto one_sided = (dir / "one.ms").string();
    std::ofstream(one_sided) << "1 : 1\n";
    const Result closed = run({"spectrum", "Z5", one_sided});
    CHECK(closed.code == 1);
    CHECK(closed.err.find("not inverse-closed") != std::string::npos);

    CHECK(run({}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
}
