#ifndef QFLAG_QKERNEL_HPP
#define QFLAG_QKERNEL_HPP

#include <functional>
#include <vector>

#include "qflag/mpoly.hpp"

namespace qflag {

// Ordered tuple (k_1, ..., k_m) of non-negative integers; order matters.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[size_t(i)]; } // 0-based
    int sum() const { return sum_; }
    int length() const { return int(parts_.size()); }
    bool all_positive() const;

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
    int sum_;
};

// Subset J of {1, ..., m} together with its ambient length; the derived
// indicator tuple e_J has e_i = 1 iff i is in J.
class SubsetIndicator {
public:
    SubsetIndicator(int m, std::vector<int> elements); // 1-based, validated
    static SubsetIndicator from_mask(int m, unsigned mask); // bit i-1 <-> element i

    int ambient() const { return m_; }
    int size() const { return int(elements_.size()); }
    bool empty() const { return elements_.empty(); }
    bool contains(int i) const;
    int max_element() const; // throws InvalidArguments when empty
    const std::vector<int>& elements() const { return elements_; }
    std::vector<int> indicator() const; // e_J as a 0/1 tuple of length m

private:
    int m_;
    std::vector<int> elements_; // sorted ascending
};

// Visits all compositions of n into m parts in lexicographic order over
// (k_1, ..., k_m).
void for_each_composition(int n, int m, const std::function<void(const Composition&)>& fn);
std::vector<Composition> compositions_of(int n, int m);

// Ordinary binomial coefficient by integer Pascal recursion.
Int binomial_int(int n, int k);

// (a; r)_n = (1 - a)(1 - ar)...(1 - ar^{n-1}); returns 1 for n = 0.
MPoly pochhammer(const MPoly& a, const MPoly& r, int n);

// Gaussian polynomial by the division-free q-Pascal recursion
// binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k); memoized.
MPoly qbinomial(int n, int k); // throws InvalidArguments when k < 0 or k > n

// Independent route: (q)_n / ((q)_k (q)_{n-k}) by exact division. Used as
// the oracle against the q-Pascal route; never cached, never corrupted.
MPoly qbinomial_by_division(int n, int k);

// binom(n; k_1,...,k_m)_q as the telescoping product of q-binomials.
// Parts may be zero (empty factors contribute 1).
MPoly qmultinomial(const Composition& c);

// Galois number polynomial G_n = sum_k binom(n,k)_q.
MPoly galois(int n);

// Generalized Galois number polynomial G_n^(m): sum of all q-multinomial
// coefficients of degree n and length m.
MPoly galois_general(int n, int m);

// Pi_{j=0}^{i-1} (q^{n-j} - 1), the sign-absorbed form of
// (-1)^i (q)_n / (q)_{n-i}; returns 1 for i = 0.
MPoly rising_qfactor(int n, int i);

// Checks G_{n+1}^(m) = sum_{i=0}^{m-1} C(m,i+1) Pi_{j<i}(q^{n-j}-1) G_{n-i}^(m);
// requires n >= m-1.
bool gengal_recursion_check(int n, int m);

// Right-hand side of the q-multinomial recursion over nonempty subsets J:
// sum over J of Pi_{j=0}^{|J|-2}(q^{n-j}-1) * binom(n+1-|J|; c - e_J)_q,
// where n + 1 = sum of c. All parts of c must be strictly positive.
MPoly gengal_lemma_rhs(const Composition& c);

// Zero-part extension: strips zero parts, applies the recursion to the
// reduced composition, re-inserting the zeros; equals qmultinomial(c).
MPoly gengal_lemma_zero_extension(const Composition& c);

namespace testing {
// Adds delta to the coefficient of q^qexp in the cached q-Pascal value of
// binom(n,k)_q, poisoning everything computed from it. Clears all derived
// caches; intended to be installed before any computation.
void inject_qbinomial_corruption(int n, int k, int qexp, long delta);
void clear_qbinomial_corruption();
} // namespace testing

namespace detail {
void clear_qkernel_caches();
// Dense polynomial-in-q view used by the fast construction paths.
std::vector<Int> qbinomial_dense(int n, int k);
} // namespace detail

} // namespace qflag

#endif
