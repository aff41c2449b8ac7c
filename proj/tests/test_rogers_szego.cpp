#include <doctest.h>

#include <algorithm>

#include "qflag/rogers_szego.hpp"

using namespace qflag;

namespace {

MPoly Q(int e = 1) { return MPoly::var(VarId::q(), e); }
MPoly T(int i, int e = 1) { return MPoly::var(VarId::t(i), e); }

// Swaps two t-variables through the unused u slot.
MPoly swap_vars(const MPoly& p, int i, int j) {
    return p.substitute(VarId::t(i), MPoly::var(VarId::u()))
        .substitute(VarId::t(j), MPoly::var(VarId::t(i)))
        .substitute(VarId::u(), MPoly::var(VarId::t(j)));
}

} // namespace

TEST_SUITE("rogers_szego") {

TEST_CASE("homogeneous construction") {
    CHECK(rs_homogeneous(0, 3).value == MPoly(1));
    CHECK(rs_homogeneous(1, 2).value == T(1) + T(2));
    CHECK(rs_homogeneous(2, 2).value ==
          T(1, 2) + (MPoly(1) + Q()) * T(1) * T(2) + T(2, 2));
    CHECK_THROWS_AS(rs_homogeneous(-1, 2), InvalidArguments);
    CHECK_THROWS_AS(rs_homogeneous(2, 1), InvalidArguments);
}

TEST_CASE("dehomogenized construction") {
    CHECK(rs(1, 2).value == MPoly(1) + T(1));
    CHECK(rs(2, 2).value == MPoly(1) + (MPoly(1) + Q()) * T(1) + T(1, 2));
    MPoly at_ones =
        rs(2, 3).value.substitute(VarId::t(1), MPoly(1)).substitute(VarId::t(2), MPoly(1));
    CHECK(at_ones == galois_general(2, 3));
    CHECK(at_ones == MPoly::parse("6 + 3*q"));
}

TEST_CASE("homogeneity invariant") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 0; n <= 8; ++n) {
            MPoly h = rs_homogeneous(n, m).value;
            for (const auto& [mono, c] : h.terms()) {
                int tdeg = 0;
                for (int i = 1; i <= m; ++i) tdeg += mono[VarId::t(i)];
                CHECK(tdeg == n);
            }
        }
}

TEST_CASE("symmetry of the homogeneous form") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 0; n <= 8; ++n) {
            MPoly h = rs_homogeneous(n, m).value;
            for (int i = 1; i < m; ++i)
                CHECK(swap_vars(h, i, i + 1) == h);
        }
}

TEST_CASE("dehomogenization consistency") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 0; n <= 8; ++n) {
            MPoly dehom = rs_homogeneous(n, m).value.substitute(VarId::t(m), MPoly(1));
            CHECK(dehom == rs(n, m).value);
            MPoly all_ones = rs(n, m).value;
            for (int i = 1; i < m; ++i)
                all_ones = all_ones.substitute(VarId::t(i), MPoly(1));
            CHECK(all_ones == galois_general(n, m));
        }
}

TEST_CASE("t-degree bound on the dehomogenized polynomial") {
    for (int n = 0; n <= 6; ++n) {
        MPoly h = rs(n, 3).value;
        for (const auto& [mono, c] : h.terms())
            CHECK(int(mono[VarId::t(1)]) + int(mono[VarId::t(2)]) <= n);
    }
}

TEST_CASE("single-variable recursion") {
    CHECK(rs_single_recursion_check(1));
    CHECK(rs_single_recursion_check(5));
    CHECK(rs_single_recursion_check(10));
    CHECK_THROWS_AS(rs_single_recursion_check(0), InvalidArguments);
}

TEST_CASE("multivariate recursion right-hand side") {
    CHECK(rs_recursion_rhs(1, 2).value == rs(2, 2).value);
    CHECK(rs_recursion_rhs(2, 3).value == rs(3, 3).value);
    CHECK(rs_recursion_rhs(6, 4).value == rs(7, 4).value);
    // the displayed two-variable recursion
    MPoly display = (MPoly(1) + T(1) + T(2)) * rs(2, 3).value +
                    (T(1) * T(2) + T(1) + T(2)) * (Q(2) - MPoly(1)) * rs(1, 3).value +
                    T(1) * T(2) * (Q(2) - MPoly(1)) * (Q() - MPoly(1)) * rs(0, 3).value;
    CHECK(rs_recursion_rhs(2, 3).value == display);
    CHECK_THROWS_AS(rs_recursion_rhs(1, 3), InvalidArguments);
    CHECK_THROWS_AS(rs_recursion_rhs(3, 5), InvalidArguments);
}

TEST_CASE("q-shift right-hand side") {
    SubsetIndicator J1(1, {1});
    CHECK(rs_qshift_rhs(1, 2, J1) == MPoly(1) + T(1) * Q());
    CHECK(rs_qshift_rhs(1, 2, J1) == rs_apply_qshift(rs(1, 2).value, J1));

    SubsetIndicator J12(2, {1, 2});
    CHECK(rs_qshift_rhs(2, 3, J12) == rs_apply_qshift(rs(2, 3).value, J12));

    SubsetIndicator J2(3, {2});
    CHECK(rs_qshift_rhs(5, 4, J2) == rs_apply_qshift(rs(5, 4).value, J2));

    CHECK_THROWS_AS(rs_qshift_rhs(1, 3, J12), InvalidArguments); // n < |J|
    CHECK_THROWS_AS(rs_qshift_rhs(3, 2, SubsetIndicator(1, {})), InvalidArguments);
    CHECK_THROWS_AS(rs_qshift_rhs(3, 2, SubsetIndicator(2, {2})), InvalidArguments);
}

TEST_CASE("single shift equation form") {
    // H_n(tq) = H_n(t) - t(1 - q^n)H_{n-1}(t)
    SubsetIndicator J(1, {1});
    for (int n = 1; n <= 6; ++n) {
        MPoly lhs = rs_apply_qshift(rs(n, 2).value, J);
        MPoly rhs = rs(n, 2).value - T(1) * (MPoly(1) - Q(n)) * rs(n - 1, 2).value;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("generating function on truncations") {
    CHECK(rs_generating_check(2, 4, 8));
    CHECK(rs_generating_check(3, 4, 8));
    CHECK(rs_generating_check(2, 0, 4)); // H_0 against the constant term
}

TEST_CASE("functional relation on truncations") {
    CHECK(rs_functional_series_check(2, 4, 8));
    CHECK(rs_functional_series_check(4, 3, 6));
    CHECK(rs_functional_series_check(3, 0, 2));
}

TEST_CASE("pochhammer series factors stop at the q cap") {
    MPoly x = MPoly::var(VarId::x());
    TruncSeries s = pochhammer_series(x, 2, 3);
    // (1-x)(1-xq)(1-xq^2)(1-xq^3) mod (x^3, q^4)
    MPoly expect = MPoly(1);
    for (int i = 0; i <= 3; ++i) expect *= MPoly(1) - x * Q(i);
    CHECK(s == TruncSeries::from_poly(expect, 2, 3));
}

} // TEST_SUITE
