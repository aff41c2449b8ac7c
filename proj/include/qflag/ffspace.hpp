#ifndef QFLAG_FFSPACE_HPP
#define QFLAG_FFSPACE_HPP

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "qflag/qkernel.hpp"

namespace qflag {

// Finite field F_q, q = p^e, with precomputed operation tables. Elements
// are indices 0..q-1; index sum_i c_i p^i encodes the residue polynomial
// c_0 + c_1 y + ... + c_{e-1} y^{e-1} over F_p, so 0 comes first and 1 is
// index 1. Immutable and cheap to copy.
class FieldSpec {
public:
    // Finds the smallest monic irreducible modulus of degree e over F_p,
    // scanning coefficient vectors in element-index order (constant
    // coefficient as the least significant digit); deterministic. Throws
    // NotPrime when p is composite.
    static FieldSpec build(int p, int e);

    int p() const { return tables_->p; }
    int e() const { return tables_->e; }
    long q() const { return tables_->q; }
    // Modulus coefficients c_0..c_e (monic, c_e = 1); for e = 1 this is x.
    const std::vector<int>& modulus() const { return tables_->modulus; }

    int add(int a, int b) const { return tables_->add[size_t(a) * size_t(tables_->q) + size_t(b)]; }
    int mul(int a, int b) const { return tables_->mul[size_t(a) * size_t(tables_->q) + size_t(b)]; }
    int neg(int a) const { return tables_->neg[size_t(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const; // throws InvalidArguments on zero

    // Coefficient vector of the residue polynomial of an element index.
    std::vector<int> element_rep(int idx) const;

private:
    struct Tables {
        int p, e;
        long q;
        std::vector<int> modulus;
        std::vector<int> add, mul, neg, inv;
    };
    explicit FieldSpec(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}
    std::shared_ptr<const Tables> tables_;
};

// Field element as a value type over a FieldSpec; arithmetic is modulo
// (p, modulus).
class FqElem {
public:
    FqElem(FieldSpec spec, int idx) : spec_(std::move(spec)), idx_(idx) {
        if (idx < 0 || long(idx) >= spec_.q())
            throw InvalidArguments("element index out of range");
    }

    const FieldSpec& field() const { return spec_; }
    int index() const { return idx_; }
    std::vector<int> rep() const { return spec_.element_rep(idx_); }
    bool is_zero() const { return idx_ == 0; }

    FqElem inverse() const { return FqElem(spec_, spec_.inv(idx_)); }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        return FqElem(a.spec_, a.spec_.add(a.idx_, b.idx_));
    }
    friend FqElem operator-(const FqElem& a, const FqElem& b) {
        return FqElem(a.spec_, a.spec_.sub(a.idx_, b.idx_));
    }
    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        return FqElem(a.spec_, a.spec_.mul(a.idx_, b.idx_));
    }
    friend FqElem operator/(const FqElem& a, const FqElem& b) {
        return FqElem(a.spec_, a.spec_.mul(a.idx_, b.spec_.inv(b.idx_)));
    }
    FqElem operator-() const { return FqElem(spec_, spec_.neg(idx_)); }
    friend bool operator==(const FqElem& a, const FqElem& b) { return a.idx_ == b.idx_; }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return a.idx_ != b.idx_; }

private:
    FieldSpec spec_;
    int idx_;
};

// k-dimensional subspace of F_q^n, canonically represented by its reduced
// row echelon form basis matrix (row-major element indices).
struct Subspace {
    int n = 0;
    int k = 0;
    std::vector<int> rows; // k*n entries

    int at(int r, int c) const { return rows[size_t(r) * size_t(n) + size_t(c)]; }
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n == b.n && a.k == b.k && a.rows == b.rows;
    }
    friend bool operator<(const Subspace& a, const Subspace& b);
};

// Descending chain W_{m-1} <= ... <= W_1 inside F_q^n with the composition
// recording dimension drops: dim W_i = n - (k_1 + ... + k_i).
struct FlagChain {
    int n = 0;
    std::vector<Subspace> chain;
    Composition comp = Composition({0});
};

// Reduced row echelon form of arbitrary row vectors; zero rows dropped.
Subspace subspace_span(const FieldSpec& f, int n, const std::vector<std::vector<int>>& vectors);

// Rank of a set of vectors.
int matrix_rank(const FieldSpec& f, int n, const std::vector<std::vector<int>>& vectors);

// Membership v in span(rows of W).
bool subspace_contains(const FieldSpec& f, const Subspace& W, const std::vector<int>& v);
bool subspace_contains_all(const FieldSpec& f, const Subspace& big, const Subspace& small);

// Streams every k-dimensional subspace of F_q^n exactly once, iterating
// pivot-column patterns and then free entries; each yield is in RREF.
void for_each_subspace(const FieldSpec& f, int n, int k,
                       const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> list_subspaces(const FieldSpec& f, int n, int k);

// Count-only fast path (no matrices materialized). With threads > 1 the
// pivot patterns are partitioned across independent streams whose counts
// are summed.
Int count_subspaces(const FieldSpec& f, int n, int k, int threads = 1);

// Streams every flag with the prescribed dimension drops; comp must sum
// to n. Chains are built by nested enumeration inside each W_{i-1}.
void for_each_flag(const FieldSpec& f, int n, const Composition& comp,
                   const std::function<void(const FlagChain&)>& fn);

// Number of chains with the prescribed drops, by nested enumeration.
Int count_flags(const FieldSpec& f, const Composition& comp);

// Sum of count_flags over all compositions of n into m parts.
Int total_flags(const FieldSpec& f, int n, int m);

enum class TypeLabel { Type1, Type2, Type3 };

// Classification of W inside the space spanned by an ordered basis
// v_1..v_d: Type1 iff W lies in span(v_1..v_{d-1}); else Type2 iff v_d is
// in W; else Type3. Throws ZeroDimensional for k = 0.
TypeLabel classify_subspace(const FieldSpec& f, const Subspace& W,
                            const std::vector<std::vector<int>>& ambient_basis);

// Counts of Type1/2/3 among all k-subspaces of F_q^{n+1} relative to the
// standard basis.
struct TypeCensus {
    Int c1, c2, c3;
};
TypeCensus type_census(const FieldSpec& f, int n_plus_1, int k);

// Counts flags (all parts of comp positive, sum n+1) whose type pattern
// matches J: with r = max J, W_j is Type 3 in W_{j-1} for j in J, j < r;
// W_i is Type 2 for i not in J, i < r; W_r is Type 1 if r < m. The
// distinguished basis of every subspace is its RREF rows in row order.
Int flag_type_pattern_count(const FieldSpec& f, const Composition& comp,
                            const SubsetIndicator& J);

} // namespace qflag

#endif
