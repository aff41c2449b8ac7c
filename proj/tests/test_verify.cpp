#include <doctest.h>

#include "qflag/verify.hpp"
#include "qflag/qkernel.hpp"

using namespace qflag;

namespace {

// Small caps so the whole battery stays fast in unit runs.
VerifyCaps small_caps() {
    VerifyCaps caps;
    caps.xcap = 4;
    caps.qcap = 6;
    caps.genfn_max_m = 3;
    caps.rec_max_n = 5;
    caps.rec_max_m = 3;
    caps.qshift_max_n = 4;
    caps.qshift_max_m = 3;
    caps.special_max_n = 6;
    caps.special_max_m = 3;
    caps.special2_max_n = 5;
    caps.special2_max_m = 3;
    caps.esym_max_m = 5;
    caps.pascal_max_n = 7;
    caps.subspace_max_n = 3;
    caps.subspace_fields = {{2, 1}, {3, 1}};
    caps.lemma_max_total = 6;
    caps.lemma_max_m = 3;
    caps.flag_max_n = 3;
    caps.flag_max_m = 3;
    caps.flag_fields = {{2, 1}};
    caps.census_max_dim = 3;
    caps.pattern_max_m = 3;
    return caps;
}

size_t failures(const std::vector<CheckResult>& results) {
    size_t n = 0;
    for (const auto& r : results)
        if (!r.ok) ++n;
    return n;
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("every suite passes at small caps") {
    for (const auto& suite : verify_suites()) {
        auto results = run_verify(suite, small_caps());
        CHECK(!results.empty());
        CHECK(failures(results) == 0);
    }
}

TEST_CASE("all runs every suite") {
    auto results = run_verify("all", small_caps(), 4);
    CHECK(failures(results) == 0);
    size_t total = 0;
    for (const auto& suite : verify_suites())
        total += run_verify(suite, small_caps()).size();
    CHECK(results.size() == total);
}

TEST_CASE("parallel and serial runs agree") {
    auto serial = run_verify("gengal-lemma", small_caps(), 1);
    auto parallel = run_verify("gengal-lemma", small_caps(), 8);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].name == parallel[i].name);
        CHECK(serial[i].ok == parallel[i].ok);
    }
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(run_verify("nope", small_caps()), InvalidArguments);
}

TEST_CASE("corruption is caught with a minimal counterexample") {
    testing::inject_qbinomial_corruption(4, 2, 1, 1);
    auto results = run_verify("galois", small_caps());
    testing::clear_qbinomial_corruption();
    bool found = false;
    for (const auto& r : results)
        if (r.name == "qbinom-pascal-vs-division") {
            found = true;
            CHECK(!r.ok);
            CHECK(r.counterexample.find("n=4 k=2") != std::string::npos);
        }
    CHECK(found);
    // back to green once cleared
    CHECK(failures(run_verify("galois", small_caps())) == 0);
}

} // TEST_SUITE
