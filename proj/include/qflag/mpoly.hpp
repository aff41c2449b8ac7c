#ifndef QFLAG_MPOLY_HPP
#define QFLAG_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qflag/errors.hpp"

namespace qflag {

using Int = mpz_class;

// Fixed, totally ordered variable universe: q < x < u < t1 < ... < t8.
// Eleven slots are plenty for every supported parameter range; the CLI
// enforces the matching caps.
class VarId {
public:
    static constexpr int kMaxT = 8;
    static constexpr int kCount = 3 + kMaxT;

    static VarId q() { return VarId(0); }
    static VarId x() { return VarId(1); }
    static VarId u() { return VarId(2); }
    static VarId t(int i); // t_i, 1-based; throws InvalidArguments out of range

    int index() const { return idx_; }
    std::string name() const;

    // Accepts "q", "x", "u", "t1".."t8".
    static std::optional<VarId> parse(std::string_view s);

    friend bool operator==(VarId a, VarId b) { return a.idx_ == b.idx_; }
    friend bool operator!=(VarId a, VarId b) { return a.idx_ != b.idx_; }
    friend bool operator<(VarId a, VarId b) { return a.idx_ < b.idx_; }

private:
    explicit VarId(int idx) : idx_(idx) {}
    int idx_;
};

// Exponent vector over the fixed variable universe.
struct Monomial {
    std::array<uint16_t, VarId::kCount> exp{};

    int degree() const;
    bool is_unit() const;
    uint16_t operator[](VarId v) const { return exp[size_t(v.index())]; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const; // requires divides(o) from o's side

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp != b.exp; }
    // Graded lexicographic over the fixed variable order.
    friend bool operator<(const Monomial& a, const Monomial& b);
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. Canonical form: no zero coefficient is ever stored, terms
// are kept in graded-lex order, equality is term-map identity.
class MPoly {
public:
    MPoly() = default;     // zero polynomial
    MPoly(int c) : MPoly(Int(c)) {}
    explicit MPoly(Int c);

    static MPoly var(VarId v, int exponent = 1);
    static MPoly term(Int coeff, const Monomial& mono);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    // Degree of the zero polynomial is -1 by convention.
    int degree_in(VarId v) const;
    int total_degree() const;

    // Coefficient of an exact monomial (zero if absent).
    Int coeff(const Monomial& mono) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly operator-() const;

    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Exact division in Z[vars]; throws NotDivisible when the divisor does
    // not divide exactly, InvalidArguments on a zero divisor.
    MPoly divide_exact(const MPoly& divisor) const;

    // Replaces every occurrence of v by r, expanded to canonical form.
    MPoly substitute(VarId v, const MPoly& r) const;

    // Exact integer value; throws MissingVariable if some variable of the
    // polynomial has no assignment.
    Int eval(const std::map<VarId, Int>& assignment) const;

    // Drops every term whose q-exponent exceeds qcap (series reduction).
    MPoly truncate_in(VarId v, int cap) const;

    // Accumulate coeff on mono (builder entry point; keeps canonical form).
    void add_term(const Monomial& mono, const Int& coeff);

    std::string to_string() const;
    static MPoly parse(std::string_view text); // throws ParseError

private:
    std::map<Monomial, Int> terms_;
};

// e_i of the given values, e_0 = 1; throws IndexOutOfRange when i is
// negative or exceeds the number of values.
MPoly elementary_symmetric(int i, const std::vector<MPoly>& values);

} // namespace qflag

#endif
