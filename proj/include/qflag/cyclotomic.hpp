#ifndef QFLAG_CYCLOTOMIC_HPP
#define QFLAG_CYCLOTOMIC_HPP

#include <map>
#include <utility>
#include <vector>

#include "qflag/mpoly.hpp"

namespace qflag {

// Phi_m(x), computed by exact division of x^m - 1 by the proper-divisor
// cyclotomics; memoized.
MPoly cyclotomic_polynomial(int m);

// Element of the cyclotomic integer ring Z[w] = Z[x]/Phi_m(x), stored as
// the fully reduced canonical remainder in the basis 1, w, ..., w^{d-1}.
class CycInt {
public:
    explicit CycInt(int m); // zero
    CycInt(int m, const Int& value);

    // w^e, reduced (e may be any integer; w^m = 1).
    static CycInt omega_pow(int m, long e);
    // Canonical remainder of an arbitrary-degree polynomial in w
    // (coefficients c[0] + c[1] w + ...).
    static CycInt reduce(int m, std::vector<Int> coeffs);

    int conductor() const { return m_; }
    int dimension() const { return int(coords_.size()); }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_zero() const;
    // True when the coordinates beyond the first all vanish.
    bool is_rational_integral() const;
    Int rational_part() const { return coords_.empty() ? Int(0) : coords_[0]; }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { a += b; return a; }
    friend CycInt operator-(CycInt a, const CycInt& b) { a -= b; return a; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    CycInt operator-() const;
    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.m_ == b.m_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    std::string to_string() const; // "c0 + c1*w + c2*w^2" style

private:
    int m_;
    std::vector<Int> coords_;
};

// Polynomial in q with coefficients in Z[w_m]; no zero coefficients stored.
class CycPoly {
public:
    explicit CycPoly(int m);
    // Embeds an integer polynomial in q.
    static CycPoly from_qpoly(int m, const MPoly& p);

    int conductor() const { return m_; }
    const std::map<long, CycInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational_integral() const;

    void add_term(long qexp, const CycInt& c);

    CycPoly& operator+=(const CycPoly& o);
    CycPoly& operator-=(const CycPoly& o);
    friend CycPoly operator+(CycPoly a, const CycPoly& b) { a += b; return a; }
    friend CycPoly operator-(CycPoly a, const CycPoly& b) { a -= b; return a; }
    friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
    friend bool operator==(const CycPoly& a, const CycPoly& b) {
        return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycPoly& a, const CycPoly& b) { return !(a == b); }

    // "(c0 + c1*w)*q^k" terms in ascending q-degree.
    std::string to_string() const;

private:
    int m_;
    std::map<long, CycInt> coeffs_;
};

// Substitutes t_i -> w^{a_i} q^{b_i} into a Rogers-Szego value; assign[i]
// holds (a, b) for t_{i+1}.
CycPoly rs_eval_unit_monomials(const MPoly& value, int m,
                               const std::vector<std::pair<long, long>>& assign);

// Substitutes t_i -> w^i (unscaled) or t_i -> w^i q (scaled) into rs(n, m).
CycPoly rs_eval_roots(int n, int m, bool scaled);

// Pi_{j<n, m does not divide j} (1 - q^j) when m | n, else 0.
MPoly special1_formula(int n, int m);

// Pi_{j<=n, m does not divide j} (1 - q^j).
MPoly special3_formula(int n, int m);

// Verifies H_n at t_i = q^{i/m} via the exact base change q = u^m:
// rs(n,m) with q -> u^m, t_i -> u^i equals
// Pi_{j=1}^{n} (1 + u^j + ... + u^{j(m-1)}).
bool special2_check(int n, int m);

// Re-derives the scaled root-of-unity value from the q-shift functional
// equation with J = {1..m-1}, t_i = w^i, e_i(w..w^{m-1}) = (-1)^i and the
// unscaled values; true iff the result matches special3_formula(n, m).
// Requires n >= m.
bool special3_via_qshift_check(int n, int m);

// Step-by-step chain for H_1: shifting t_1, then t_2, ... one at a time
// via the functional equation yields (w + ... + w^l)(q - 1) after l steps
// and finally the rational value 1 - q.
bool h1_qshift_chain_check(int m);

// e_i of cyclotomic integers.
CycInt cyc_elementary_symmetric(int i, const std::vector<CycInt>& values);

} // namespace qflag

#endif
