#include <doctest.h>

#include "qflag/cyclotomic.hpp"
#include "qflag/rogers_szego.hpp"

using namespace qflag;

namespace {
MPoly Q(int e = 1) { return MPoly::var(VarId::q(), e); }
MPoly X(int e = 1) { return MPoly::var(VarId::x(), e); }
} // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == X() - MPoly(1));
    CHECK(cyclotomic_polynomial(2) == X() + MPoly(1));
    CHECK(cyclotomic_polynomial(4) == X(2) + MPoly(1));
    CHECK(cyclotomic_polynomial(6) == X(2) - X() + MPoly(1));
    CHECK_THROWS_AS(cyclotomic_polynomial(0), InvalidArguments);
}

TEST_CASE("product of divisors recovers x^m - 1") {
    for (int m = 1; m <= 12; ++m) {
        MPoly prod(1);
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) prod *= cyclotomic_polynomial(d);
        CHECK(prod == X(m) - MPoly(1));
        // and Phi_m divides x^m - 1 exactly
        CHECK((X(m) - MPoly(1)).divide_exact(cyclotomic_polynomial(m)) *
              cyclotomic_polynomial(m) == X(m) - MPoly(1));
    }
}

TEST_CASE("cyclotomic reduction") {
    CHECK(CycInt::omega_pow(2, 2) == CycInt(2, Int(1)));
    CHECK(CycInt::reduce(3, {Int(1), Int(1), Int(1)}).is_zero());
    CHECK(CycInt::omega_pow(4, 3) == -CycInt::omega_pow(4, 1));
    CHECK(CycInt::omega_pow(5, -1) == CycInt::omega_pow(5, 4));
}

TEST_CASE("cyclotomic integer arithmetic") {
    for (int m = 2; m <= 8; ++m) {
        CycInt w = CycInt::omega_pow(m, 1);
        CycInt prod = CycInt(m, Int(1));
        for (int i = 0; i < m; ++i) prod = prod * w;
        CHECK(prod == CycInt(m, Int(1))); // w^m = 1
        // 1 + w + ... + w^{m-1} = 0 for m >= 2
        CycInt sum(m);
        for (int i = 0; i < m; ++i) sum += CycInt::omega_pow(m, i);
        CHECK(sum.is_zero());
    }
    CHECK(CycInt(3, Int(5)).is_rational_integral());
    CHECK(!CycInt::omega_pow(3, 1).is_rational_integral());
    CHECK(CycInt(4, Int(-7)).rational_part() == -7);
}

TEST_CASE("cyc poly arithmetic and matching") {
    CycPoly a = CycPoly::from_qpoly(3, MPoly(1) - Q());
    CycPoly b = CycPoly::from_qpoly(3, MPoly(1) + Q());
    CHECK(a * b == CycPoly::from_qpoly(3, MPoly(1) - Q(2)));
    CHECK((a - a).is_zero());
    CHECK(a.is_rational_integral());
    CycPoly c(3);
    c.add_term(2, CycInt::omega_pow(3, 1));
    CHECK(!c.is_rational_integral());
    CHECK_THROWS_AS(CycPoly::from_qpoly(3, MPoly::var(VarId::t(1))), InvalidArguments);
}

TEST_CASE("serialization") {
    CycPoly p(4);
    p.add_term(0, CycInt(4, Int(1)));
    CycInt neg = -CycInt::omega_pow(4, 1);
    p.add_term(3, neg);
    CHECK(p.to_string() == "(1) + (-w)*q^3");
    CHECK(CycPoly(4).to_string() == "0");
    CycPoly one_q(2);
    one_q.add_term(1, CycInt(2, Int(2)));
    CHECK(one_q.to_string() == "(2)*q");
}

TEST_CASE("root-of-unity evaluation") {
    // alternating sum at m = 2: H_2(-1) = 1 - (1+q) + 1 = 1 - q
    CHECK(rs_eval_roots(2, 2, false) == CycPoly::from_qpoly(2, MPoly(1) - Q()));
    CHECK(rs_eval_roots(1, 3, false).is_zero());
    // scaled m = 2: H_2(-q) = 1 - q(1+q) + q^2 = 1 - q
    CHECK(rs_eval_roots(2, 2, true) == CycPoly::from_qpoly(2, MPoly(1) - Q()));
}

TEST_CASE("special value formulas") {
    CHECK(special1_formula(0, 5) == MPoly(1));
    CHECK(special1_formula(2, 2) == MPoly(1) - Q());
    CHECK(special1_formula(3, 3) == (MPoly(1) - Q()) * (MPoly(1) - Q(2)));
    CHECK(special1_formula(1, 3).is_zero());
    CHECK(special3_formula(1, 2) == MPoly(1) - Q());
    CHECK(special3_formula(0, 4) == MPoly(1));
    CHECK(special3_formula(3, 2) == (MPoly(1) - Q()) * (MPoly(1) - Q(3)));
}

TEST_CASE("formulas match direct evaluation") {
    for (int m = 2; m <= 5; ++m)
        for (int n = 0; n <= 8; ++n) {
            CycPoly unscaled = rs_eval_roots(n, m, false);
            CHECK(unscaled.is_rational_integral());
            CHECK(unscaled == CycPoly::from_qpoly(m, special1_formula(n, m)));
            CycPoly scaled = rs_eval_roots(n, m, true);
            CHECK(scaled.is_rational_integral());
            CHECK(scaled == CycPoly::from_qpoly(m, special3_formula(n, m)));
        }
}

TEST_CASE("fractional power base change") {
    CHECK(special2_check(1, 2));
    // H_1(u)|_{q=u^2} = 1 + u on both sides
    MPoly lhs = MPoly(1) + MPoly::var(VarId::u());
    CHECK(rs(1, 2).value.substitute(VarId::q(), MPoly::var(VarId::u(), 2))
              .substitute(VarId::t(1), MPoly::var(VarId::u())) == lhs);
    CHECK(special2_check(2, 3));
    CHECK(special2_check(0, 4));
    for (int m = 2; m <= 4; ++m)
        for (int n = 0; n <= 6; ++n) CHECK(special2_check(n, m));
}

TEST_CASE("scaled values re-derived through the functional equation") {
    CHECK(special3_via_qshift_check(2, 2));
    CHECK(special3_via_qshift_check(4, 3));
    CHECK(special3_via_qshift_check(3, 3));
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= 8; ++n) CHECK(special3_via_qshift_check(n, m));
    CHECK_THROWS_AS(special3_via_qshift_check(1, 2), InvalidArguments);
    CHECK_THROWS_AS(special3_via_qshift_check(3, 4), InvalidArguments);
}

TEST_CASE("H_1 shift chain") {
    for (int m = 2; m <= 6; ++m) CHECK(h1_qshift_chain_check(m));
}

TEST_CASE("elementary symmetric values at roots of unity") {
    for (int m = 2; m <= 8; ++m) {
        std::vector<CycInt> vals;
        for (int i = 1; i < m; ++i) vals.push_back(CycInt::omega_pow(m, i));
        vals.push_back(CycInt(m, Int(1)));
        for (int i = 1; i < m; ++i)
            CHECK(cyc_elementary_symmetric(i, vals).is_zero());
        CHECK(cyc_elementary_symmetric(m, vals) == CycInt(m, Int(m % 2 == 0 ? -1 : 1)));
        // without the trailing 1: e_i = (-1)^i
        std::vector<CycInt> roots(vals.begin(), vals.end() - 1);
        for (int i = 0; i < m; ++i)
            CHECK(cyc_elementary_symmetric(i, roots) == CycInt(m, Int(i % 2 == 0 ? 1 : -1)));
    }
}

} // TEST_SUITE
