#include <doctest.h>

#include <random>

#include "qflag/mpoly.hpp"
#include "qflag/series.hpp"

using namespace qflag;

namespace {

MPoly Q(int e = 1) { return MPoly::var(VarId::q(), e); }
MPoly X(int e = 1) { return MPoly::var(VarId::x(), e); }
MPoly U(int e = 1) { return MPoly::var(VarId::u(), e); }
MPoly T(int i, int e = 1) { return MPoly::var(VarId::t(i), e); }

MPoly random_poly(std::mt19937& rng, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> exp(0, 4);
    std::uniform_int_distribution<int> pick(0, 4);
    MPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial mono;
        VarId vars[5] = {VarId::q(), VarId::x(), VarId::u(), VarId::t(1), VarId::t(2)};
        for (int rep = 0; rep < 2; ++rep)
            mono.exp[size_t(vars[size_t(pick(rng))].index())] =
                static_cast<uint16_t>(exp(rng));
        p.add_term(mono, coeff(rng));
    }
    return p;
}

} // namespace

TEST_SUITE("mpoly") {

TEST_CASE("addition basics") {
    CHECK((MPoly(1) + Q()) + Q() == MPoly::parse("1 + 2*q"));
    MPoly p = MPoly::parse("3*q^2 - 7*t1");
    CHECK(p + MPoly() == p);
    CHECK((MPoly(1) - Q()) + (Q() - MPoly(1)) == MPoly());
    CHECK(((MPoly(1) - Q()) + (Q() - MPoly(1))).term_count() == 0);
}

TEST_CASE("multiplication basics") {
    // (1+q)(1+q+q^2) expanded by hand
    CHECK((MPoly(1) + Q()) * (MPoly(1) + Q() + Q(2)) == MPoly::parse("1 + 2*q + 2*q^2 + q^3"));
    MPoly p = MPoly::parse("2 - q*t1 + u^3");
    CHECK(p * MPoly(1) == p);
    CHECK((MPoly(1) - T(1)) * (MPoly(1) + T(1)) == MPoly(1) - T(1, 2));
}

TEST_CASE("multiplication against dense convolution oracle") {
    // Independent route for univariate products.
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int iter = 0; iter < 50; ++iter) {
        int da = deg(rng), db = deg(rng);
        std::vector<int> a(size_t(da) + 1), b(size_t(db) + 1);
        for (auto& c : a) c = coeff(rng);
        for (auto& c : b) c = coeff(rng);
        std::vector<long> prod(size_t(da + db) + 1, 0);
        for (int i = 0; i <= da; ++i)
            for (int j = 0; j <= db; ++j)
                prod[size_t(i + j)] += long(a[size_t(i)]) * b[size_t(j)];
        MPoly pa, pb, expect;
        for (int i = 0; i <= da; ++i) pa += MPoly(a[size_t(i)]) * Q(i);
        for (int j = 0; j <= db; ++j) pb += MPoly(b[size_t(j)]) * Q(j);
        for (int i = 0; i <= da + db; ++i) expect += MPoly(int(prod[size_t(i)])) * Q(i);
        CHECK(pa * pb == expect);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 60; ++iter) {
        MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division") {
    CHECK((MPoly(1) - Q(2)).divide_exact(MPoly(1) - Q()) == MPoly(1) + Q());
    // (q)_2 / ((q)_1 (q)_1): the q-Pascal value of binom(2,1)_q
    MPoly poch2 = (MPoly(1) - Q()) * (MPoly(1) - Q(2));
    MPoly poch1 = MPoly(1) - Q();
    CHECK(poch2.divide_exact(poch1 * poch1) == MPoly(1) + Q());
    CHECK_THROWS_AS((MPoly(1) + Q()).divide_exact(MPoly(1) - Q()), NotDivisible);
    CHECK_THROWS_AS(MPoly(1).divide_exact(MPoly()), InvalidArguments);
    CHECK_THROWS_AS(MPoly::parse("2*q").divide_exact(MPoly::parse("3*q")), NotDivisible);
}

TEST_CASE("division inverts multiplication") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 80; ++iter) {
        MPoly a = random_poly(rng);
        MPoly b = random_poly(rng);
        if (b.is_zero()) b = MPoly(1) + T(1);
        CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("substitution") {
    CHECK((MPoly(1) + T(1) * Q()).substitute(VarId::t(1), MPoly(1)) == MPoly(1) + Q());
    CHECK((MPoly(1) + Q()).substitute(VarId::q(), U(2)) == MPoly(1) + U(2));
    CHECK((T(1, 2) + MPoly(3)).substitute(VarId::t(1), MPoly()) == MPoly(3));
}

TEST_CASE("integer evaluation") {
    std::map<VarId, Int> at2{{VarId::q(), Int(2)}};
    CHECK(MPoly::parse("1 + 2*q + 2*q^2 + q^3").eval(at2) == 21);
    CHECK(MPoly(7).eval({}) == 7);
    std::map<VarId, Int> at1{{VarId::q(), Int(1)}};
    CHECK((MPoly(1) + Q()).eval(at1) == 2);
    CHECK_THROWS_AS((Q() + T(1)).eval(at2), MissingVariable);
}

TEST_CASE("elementary symmetric") {
    std::vector<MPoly> vals{T(1), T(2), MPoly(1)};
    CHECK(elementary_symmetric(1, vals) == T(1) + T(2) + MPoly(1));
    CHECK(elementary_symmetric(0, vals) == MPoly(1));
    CHECK(elementary_symmetric(3, vals) == T(1) * T(2));
    CHECK_THROWS_AS(elementary_symmetric(4, vals), IndexOutOfRange);
}

TEST_CASE("elementary symmetric homogeneity") {
    std::vector<MPoly> vals{Q(), X(), U(), T(1), T(2)};
    for (int i = 0; i <= 5; ++i) {
        MPoly e = elementary_symmetric(i, vals);
        for (const auto& [mono, c] : e.terms()) CHECK(mono.degree() == i);
    }
}

TEST_CASE("degrees") {
    CHECK(MPoly().total_degree() == -1);
    CHECK(MPoly().degree_in(VarId::q()) == -1);
    CHECK(MPoly(5).total_degree() == 0);
    CHECK((Q(3) * T(1, 2)).degree_in(VarId::q()) == 3);
    CHECK((Q(3) * T(1, 2)).total_degree() == 5);
}

TEST_CASE("serialization format") {
    CHECK(MPoly().to_string() == "0");
    CHECK(MPoly::parse("1 + 2*q + 2*q^2 + 1*q^3").to_string() == "1 + 2*q + 2*q^2 + q^3");
    CHECK(MPoly::parse("q^1").to_string() == "q");
    CHECK((MPoly(1) - Q() - Q(2) + Q(3)).to_string() == "1 - q - q^2 + q^3");
    CHECK((T(1) * T(2) * Q(2)).to_string() == "q^2*t1*t2");
    CHECK(MPoly(-3).to_string() == "-3");
    CHECK(MPoly::parse("- q + 1").to_string() == "1 - q");
    CHECK_THROWS_AS(MPoly::parse("1 + + "), ParseError);
    CHECK_THROWS_AS(MPoly::parse("z^2"), ParseError);
    CHECK_THROWS_AS(MPoly::parse(""), ParseError);
    CHECK_THROWS_AS(MPoly::parse("q 2"), ParseError);
}

TEST_CASE("serialization round trip") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 100; ++iter) {
        MPoly p = random_poly(rng, 8);
        CHECK(MPoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("variable order is q < x < u < t1 < ... and serialization follows it") {
    MPoly p = T(2) * U() * Q() * X();
    CHECK(p.to_string() == "q*x*u*t2");
    CHECK(VarId::q() < VarId::x());
    CHECK(VarId::x() < VarId::u());
    CHECK(VarId::u() < VarId::t(1));
    CHECK(VarId::t(1) < VarId::t(2));
    CHECK(VarId::parse("t3") == VarId::t(3));
    CHECK(!VarId::parse("t0"));
    CHECK(!VarId::parse("w"));
}

} // TEST_SUITE

TEST_SUITE("series") {

TEST_CASE("construction and truncation") {
    MPoly p = MPoly(1) - X() * Q(3);
    CHECK(TruncSeries::from_poly(p, 2, 2) == TruncSeries::one(2, 2));
    CHECK(TruncSeries::from_poly(MPoly(1) + X(), 0, 4) == TruncSeries::one(0, 4));
    TruncSeries x2 = TruncSeries::from_poly(X(2), 2, 0);
    CHECK(x2.coeff(2) == MPoly(1));
    CHECK(x2.coeff(0) == MPoly());
}

TEST_CASE("multiplication") {
    TruncSeries a = TruncSeries::from_poly(MPoly(1) + X(), 1, 4);
    TruncSeries b = TruncSeries::from_poly(MPoly(1) - X(), 1, 4);
    CHECK(a * b == TruncSeries::one(1, 4));
    TruncSeries s = TruncSeries::from_poly(MPoly(2) + X() * Q(), 3, 5);
    CHECK(s * TruncSeries::one(3, 5) == s);
    TruncSeries c = TruncSeries::from_poly(MPoly(1) + X() * Q(), 2, 1);
    CHECK(c * c == TruncSeries::from_poly(MPoly(1) + MPoly(2) * X() * Q(), 2, 1));
    CHECK_THROWS_AS(a * s, CapMismatch);
}

TEST_CASE("inverse") {
    TruncSeries a = TruncSeries::from_poly(MPoly(1) - X(), 3, 2);
    CHECK(a.inverse() ==
          TruncSeries::from_poly(MPoly(1) + X() + X(2) + MPoly::var(VarId::x(), 3), 3, 2));
    CHECK(TruncSeries::one(2, 2).inverse() == TruncSeries::one(2, 2));
    TruncSeries b = TruncSeries::from_poly(MPoly(1) - X() * Q(), 2, 2);
    CHECK(b.inverse() == TruncSeries::from_poly(MPoly(1) + X() * Q() + X(2) * Q(2), 2, 2));
    CHECK_THROWS_AS(TruncSeries::from_poly(MPoly(2) + X(), 1, 1).inverse(), NotAUnit);
    CHECK_THROWS_AS(
        TruncSeries::from_poly(MPoly(1) + MPoly::var(VarId::t(1)), 1, 1).inverse(), NotAUnit);
}

TEST_CASE("inverse of -1 constant") {
    TruncSeries a = TruncSeries::from_poly(MPoly(-1) + X() + Q(), 2, 3);
    CHECK(a * a.inverse() == TruncSeries::one(2, 3));
}

TEST_CASE("random unit inverses") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int iter = 0; iter < 30; ++iter) {
        // 1 + q*(random) + x*(random): a unit by construction
        MPoly p = MPoly(1) + Q() * random_poly(rng, 3) + X() * random_poly(rng, 3);
        TruncSeries s = TruncSeries::from_poly(p, 3, 4);
        CHECK(s * s.inverse() == TruncSeries::one(3, 4));
    }
}

TEST_CASE("q shift") {
    CHECK(TruncSeries::from_poly(MPoly(1) + X(), 1, 3).shift_q() ==
          TruncSeries::from_poly(MPoly(1) + X() * Q(), 1, 3));
    CHECK(TruncSeries::one(2, 2).shift_q() == TruncSeries::one(2, 2));
    CHECK(TruncSeries::from_poly(X(2), 2, 1).shift_q() == TruncSeries(2, 1));
}

} // TEST_SUITE
