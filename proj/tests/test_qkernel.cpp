#include <doctest.h>

#include <thread>

#include "qflag/qkernel.hpp"

using namespace qflag;

namespace {
MPoly Q(int e = 1) { return MPoly::var(VarId::q(), e); }
MPoly T(int i, int e = 1) { return MPoly::var(VarId::t(i), e); }
} // namespace

TEST_SUITE("qkernel") {

TEST_CASE("composition and subset basics") {
    Composition c({1, 2, 0});
    CHECK(c.sum() == 3);
    CHECK(c.length() == 3);
    CHECK(!c.all_positive());
    CHECK_THROWS_AS(Composition({1, -1}), InvalidArguments);
    CHECK_THROWS_AS(Composition(std::vector<int>{}), InvalidArguments);

    SubsetIndicator J(3, {3, 1});
    CHECK(J.size() == 2);
    CHECK(J.contains(1));
    CHECK(!J.contains(2));
    CHECK(J.max_element() == 3);
    CHECK(J.indicator() == std::vector<int>{1, 0, 1});
    CHECK_THROWS_AS(SubsetIndicator(2, {3}), InvalidArguments);
    CHECK(SubsetIndicator::from_mask(3, 0b101).elements() == std::vector<int>{1, 3});
}

TEST_CASE("composition enumeration is lexicographic and complete") {
    auto comps = compositions_of(2, 3);
    REQUIRE(comps.size() == 6);
    CHECK(comps[0].parts() == std::vector<int>{0, 0, 2});
    CHECK(comps[1].parts() == std::vector<int>{0, 1, 1});
    CHECK(comps[5].parts() == std::vector<int>{2, 0, 0});
    // C(n+m-1, m-1) compositions of n into m parts
    CHECK(compositions_of(8, 4).size() == 165);
}

TEST_CASE("integer binomial") {
    CHECK(binomial_int(0, 0) == 1);
    CHECK(binomial_int(5, 2) == 10);
    CHECK(binomial_int(10, 5) == 252);
    CHECK(binomial_int(4, 7) == 0);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Q(), Q(), 2) == MPoly::parse("1 - q - q^2 + q^3"));
    CHECK(pochhammer(T(1), T(2), 0) == MPoly(1));
    CHECK(pochhammer(Q(2), Q(2), 1) == MPoly(1) - Q(2));
    CHECK_THROWS_AS(pochhammer(Q(), Q(), -1), InvalidArguments);
}

TEST_CASE("qbinomial basics") {
    for (int n = 0; n <= 6; ++n) CHECK(qbinomial(n, 0) == MPoly(1));
    CHECK(qbinomial(2, 1) == MPoly::parse("1 + q"));
    CHECK(qbinomial(2, 1) == qbinomial_by_division(2, 1));
    CHECK(qbinomial(4, 2) == MPoly::parse("1 + q + 2*q^2 + q^3 + q^4"));
    CHECK_THROWS_AS(qbinomial(3, 4), InvalidArguments);
    CHECK_THROWS_AS(qbinomial(3, -1), InvalidArguments);
    CHECK_THROWS_AS(qbinomial(-1, 0), InvalidArguments);
}

TEST_CASE("qbinomial two routes agree") {
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(qbinomial(n, k) == qbinomial_by_division(n, k));
}

TEST_CASE("qbinomial cache is transparent under concurrent use") {
    std::vector<MPoly> serial;
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) serial.push_back(qbinomial(n, k));
    std::vector<std::vector<MPoly>> per_thread(8);
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&per_thread, t]() {
            for (int n = 0; n <= 9; ++n)
                for (int k = 0; k <= n; ++k) per_thread[size_t(t)].push_back(qbinomial(n, k));
        });
    for (auto& th : pool) th.join();
    for (const auto& got : per_thread) CHECK(got == serial);
}

TEST_CASE("qmultinomial") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(qmultinomial(Composition({k, n - k})) == qbinomial(n, k));
    CHECK(qmultinomial(Composition({1, 1, 1})) == MPoly::parse("1 + 2*q + 2*q^2 + q^3"));
    CHECK(qmultinomial(Composition({5})) == MPoly(1));
    CHECK(qmultinomial(Composition({0, 3, 0})) == MPoly(1));
}

TEST_CASE("galois numbers") {
    CHECK(galois(0) == MPoly(1));
    CHECK(galois(1) == MPoly(2));
    CHECK(galois(2) == MPoly::parse("3 + q"));
    std::map<VarId, Int> at2{{VarId::q(), Int(2)}};
    CHECK(galois(2).eval(at2) == 5);
    CHECK_THROWS_AS(galois(-1), InvalidArguments);
}

TEST_CASE("generalized galois numbers") {
    for (int n = 0; n <= 8; ++n) CHECK(galois_general(n, 2) == galois(n));
    CHECK(galois_general(2, 3) == MPoly::parse("6 + 3*q"));
    std::map<VarId, Int> at2{{VarId::q(), Int(2)}};
    CHECK(galois_general(2, 3).eval(at2) == 12);
    CHECK(galois_general(0, 4) == MPoly(1));
    CHECK_THROWS_AS(galois_general(1, 1), InvalidArguments);
}

TEST_CASE("rising q factor") {
    CHECK(rising_qfactor(5, 0) == MPoly(1));
    CHECK(rising_qfactor(3, 1) == Q(3) - MPoly(1));
    CHECK(rising_qfactor(3, 2) == (Q(3) - MPoly(1)) * (Q(2) - MPoly(1)));
    CHECK_THROWS_AS(rising_qfactor(2, 3), InvalidArguments);
}

TEST_CASE("gengal recursion") {
    // n=1, m=2 reproduces G_2 = 2 G_1 + (q - 1) G_0 = q + 3
    CHECK(gengal_recursion_check(1, 2));
    CHECK(MPoly(2) * galois(1) + (Q() - MPoly(1)) * galois(0) == MPoly::parse("3 + q"));
    CHECK(gengal_recursion_check(2, 3));
    CHECK(gengal_recursion_check(8, 4));
    CHECK_THROWS_AS(gengal_recursion_check(1, 3), InvalidArguments);
}

TEST_CASE("gengal lemma right-hand side") {
    CHECK(gengal_lemma_rhs(Composition({1, 2})) == MPoly::parse("1 + q + q^2"));
    CHECK(gengal_lemma_rhs(Composition({1, 2})) == qbinomial(3, 1));
    CHECK(gengal_lemma_rhs(Composition({1, 1, 1})) == MPoly::parse("1 + 2*q + 2*q^2 + q^3"));
    CHECK_THROWS_AS(gengal_lemma_rhs(Composition({1, 0, 2})), InvalidArguments);
    CHECK_THROWS_AS(gengal_lemma_rhs(Composition({3})), InvalidArguments);
}

TEST_CASE("gengal lemma zero extension") {
    CHECK(gengal_lemma_zero_extension(Composition({2, 0})) == qmultinomial(Composition({2, 0})));
    CHECK(gengal_lemma_zero_extension(Composition({2, 0})) == MPoly(1));
    CHECK(gengal_lemma_zero_extension(Composition({1, 0, 1})) ==
          gengal_lemma_rhs(Composition({1, 1})));
    CHECK(gengal_lemma_zero_extension(Composition({1, 0, 1})) == MPoly::parse("1 + q"));
    CHECK(gengal_lemma_zero_extension(Composition({0, 3})) == MPoly(1));
    CHECK_THROWS_AS(gengal_lemma_zero_extension(Composition({0, 0})), InvalidArguments);
}

TEST_CASE("lemma 3.1 identity") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(qbinomial(n + 1, k) ==
                  qbinomial(n, k) + qbinomial(n, k - 1) +
                      (Q(n) - MPoly(1)) * qbinomial(n - 1, k - 1));
}

TEST_CASE("corruption hook poisons pascal route only") {
    testing::inject_qbinomial_corruption(4, 2, 2, 3);
    CHECK(qbinomial(4, 2) != qbinomial_by_division(4, 2));
    CHECK(qbinomial(4, 2) == MPoly::parse("1 + q + 5*q^2 + q^3 + q^4"));
    // downstream values built on the cache inherit the fault
    CHECK(qbinomial(5, 2) != qbinomial_by_division(5, 2));
    testing::clear_qbinomial_corruption();
    CHECK(qbinomial(4, 2) == qbinomial_by_division(4, 2));
    CHECK(qbinomial(5, 2) == qbinomial_by_division(5, 2));
}

} // TEST_SUITE
