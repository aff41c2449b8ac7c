#include "qflag/ffspace.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace qflag {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense F_p[y] helpers on coefficient vectors (index = degree).
void fp_trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<int> fp_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    fp_trim(a);
    int db = int(b.size()) - 1;
    while (!a.empty() && int(a.size()) - 1 >= db) {
        int da = int(a.size()) - 1;
        int lead = a.back(); // b is monic
        for (int i = 0; i <= db; ++i)
            a[size_t(da - db + i)] = ((a[size_t(da - db + i)] - lead * b[size_t(i)]) % p + p) % p;
        fp_trim(a);
    }
    return a;
}

bool fp_is_irreducible(const std::vector<int>& mod, int p, int e) {
    if (e == 1) return true;
    // Trial division by every monic polynomial of degree 1..e/2.
    for (int d = 1; 2 * d <= e; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long v = 0; v < count; ++v) {
            std::vector<int> divisor(size_t(d) + 1, 0);
            long rest = v;
            for (int i = 0; i < d; ++i) {
                divisor[size_t(i)] = int(rest % p);
                rest /= p;
            }
            divisor[size_t(d)] = 1;
            if (fp_mod(mod, divisor, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

FieldSpec FieldSpec::build(int p, int e) {
    if (!is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw InvalidArguments("extension degree must be >= 1");
    long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 1024)
            throw InvalidArguments("field too large for table-based arithmetic (q <= 1024)");
    }

    std::vector<int> modulus(size_t(e) + 1, 0);
    modulus[size_t(e)] = 1;
    if (e > 1) {
        // Scan candidates ordered by the integer encoding sum c_i p^i (the
        // same order elements are indexed by), taking the first irreducible.
        long total = q;
        bool found = false;
        for (long v = 0; v < total && !found; ++v) {
            long rest = v;
            for (int i = 0; i < e; ++i) {
                modulus[size_t(i)] = int(rest % p);
                rest /= p;
            }
            found = fp_is_irreducible(modulus, p, e);
        }
        // irreducibles of every degree exist, so found is always true here
    }

    auto tables = std::make_shared<Tables>();
    tables->p = p;
    tables->e = e;
    tables->q = q;
    tables->modulus = modulus;

    auto decode = [&](int idx) {
        std::vector<int> c(size_t(e), 0);
        for (int i = 0; i < e; ++i) {
            c[size_t(i)] = idx % p;
            idx /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int i = e - 1; i >= 0; --i) idx = idx * p + (i < int(c.size()) ? c[size_t(i)] : 0);
        return idx;
    };

    tables->add.resize(size_t(q) * size_t(q));
    tables->mul.resize(size_t(q) * size_t(q));
    tables->neg.resize(size_t(q));
    tables->inv.assign(size_t(q), -1);
    for (long a = 0; a < q; ++a) {
        auto ca = decode(int(a));
        std::vector<int> nc(static_cast<size_t>(e));
        for (int i = 0; i < e; ++i) nc[size_t(i)] = (p - ca[size_t(i)]) % p;
        tables->neg[size_t(a)] = encode(nc);
        for (long b = 0; b < q; ++b) {
            auto cb = decode(int(b));
            std::vector<int> sum(static_cast<size_t>(e));
            for (int i = 0; i < e; ++i) sum[size_t(i)] = (ca[size_t(i)] + cb[size_t(i)]) % p;
            tables->add[size_t(a) * size_t(q) + size_t(b)] = encode(sum);
            std::vector<int> prod(size_t(2 * e), 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j)
                    prod[size_t(i + j)] = (prod[size_t(i + j)] + ca[size_t(i)] * cb[size_t(j)]) % p;
            auto rem = fp_mod(prod, modulus, p);
            rem.resize(size_t(e), 0);
            tables->mul[size_t(a) * size_t(q) + size_t(b)] = encode(rem);
        }
    }
    for (long a = 1; a < q; ++a)
        for (long b = 1; b < q; ++b)
            if (tables->mul[size_t(a) * size_t(q) + size_t(b)] == 1) {
                tables->inv[size_t(a)] = int(b);
                break;
            }
    return FieldSpec(std::move(tables));
}

int FieldSpec::inv(int a) const {
    if (a == 0) throw InvalidArguments("zero has no multiplicative inverse");
    return tables_->inv[size_t(a)];
}

std::vector<int> FieldSpec::element_rep(int idx) const {
    std::vector<int> c(size_t(e()), 0);
    for (int i = 0; i < e(); ++i) {
        c[size_t(i)] = idx % p();
        idx /= p();
    }
    return c;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.k != b.k) return a.k < b.k;
    return a.rows < b.rows;
}

namespace {

// In-place RREF; returns the rank. rows is a list of length-n vectors.
int rref_inplace(const FieldSpec& f, int n, std::vector<std::vector<int>>& rows) {
    int r = 0;
    for (int col = 0; col < n && r < int(rows.size()); ++col) {
        int pivot = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if (rows[size_t(i)][size_t(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[size_t(r)], rows[size_t(pivot)]);
        int scale = f.inv(rows[size_t(r)][size_t(col)]);
        for (int c = 0; c < n; ++c)
            rows[size_t(r)][size_t(c)] = f.mul(rows[size_t(r)][size_t(c)], scale);
        for (int i = 0; i < int(rows.size()); ++i) {
            if (i == r) continue;
            int factor = rows[size_t(i)][size_t(col)];
            if (factor == 0) continue;
            for (int c = 0; c < n; ++c)
                rows[size_t(i)][size_t(c)] =
                    f.sub(rows[size_t(i)][size_t(c)], f.mul(factor, rows[size_t(r)][size_t(c)]));
        }
        ++r;
    }
    return r;
}

} // namespace

Subspace subspace_span(const FieldSpec& f, int n, const std::vector<std::vector<int>>& vectors) {
    auto rows = vectors;
    int rank = rref_inplace(f, n, rows);
    Subspace s;
    s.n = n;
    s.k = rank;
    s.rows.reserve(size_t(rank) * size_t(n));
    for (int i = 0; i < rank; ++i)
        s.rows.insert(s.rows.end(), rows[size_t(i)].begin(), rows[size_t(i)].end());
    return s;
}

int matrix_rank(const FieldSpec& f, int n, const std::vector<std::vector<int>>& vectors) {
    auto rows = vectors;
    return rref_inplace(f, n, rows);
}

bool subspace_contains(const FieldSpec& f, const Subspace& W, const std::vector<int>& v) {
    // Reduce v against the RREF rows; membership iff it reduces to zero.
    std::vector<int> r = v;
    for (int i = 0; i < W.k; ++i) {
        int pivot_col = -1;
        for (int c = 0; c < W.n; ++c)
            if (W.at(i, c) != 0) {
                pivot_col = c;
                break;
            }
        int factor = r[size_t(pivot_col)];
        if (factor == 0) continue;
        for (int c = 0; c < W.n; ++c)
            r[size_t(c)] = f.sub(r[size_t(c)], f.mul(factor, W.at(i, c)));
    }
    return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

bool subspace_contains_all(const FieldSpec& f, const Subspace& big, const Subspace& small) {
    for (int i = 0; i < small.k; ++i) {
        std::vector<int> row(small.rows.begin() + i * small.n,
                             small.rows.begin() + (i + 1) * small.n);
        if (!subspace_contains(f, big, row)) return false;
    }
    return true;
}

namespace {

// Visits pivot-column patterns (k-combinations of 0..n-1) in lex order.
template <typename Fn>
void for_each_pattern(int n, int k, Fn&& fn) {
    std::vector<int> cols(static_cast<size_t>(k));
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
        fn(cols);
        int i = k - 1;
        while (i >= 0 && cols[size_t(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cols[size_t(i)];
        for (int j = i + 1; j < k; ++j) cols[size_t(j)] = cols[size_t(j) - 1] + 1;
    }
}

struct FreeCell {
    int row, col;
};

std::vector<FreeCell> free_cells(int n, const std::vector<int>& pivots) {
    std::vector<bool> is_pivot(size_t(n), false);
    for (int c : pivots) is_pivot[size_t(c)] = true;
    std::vector<FreeCell> cells;
    for (int i = 0; i < int(pivots.size()); ++i)
        for (int c = pivots[size_t(i)] + 1; c < n; ++c)
            if (!is_pivot[size_t(c)]) cells.push_back({i, c});
    return cells;
}

// Enumerates the free-entry assignments of one pivot pattern.
template <typename Fn>
void for_each_filling(const FieldSpec& f, int n, const std::vector<int>& pivots, Fn&& fn) {
    int k = int(pivots.size());
    auto cells = free_cells(n, pivots);
    Subspace s;
    s.n = n;
    s.k = k;
    s.rows.assign(size_t(k) * size_t(n), 0);
    for (int i = 0; i < k; ++i) s.rows[size_t(i) * size_t(n) + size_t(pivots[size_t(i)])] = 1;
    std::vector<int> values(cells.size(), 0);
    while (true) {
        fn(s);
        size_t pos = 0;
        for (; pos < cells.size(); ++pos) {
            int next = values[pos] + 1;
            if (next < f.q()) {
                values[pos] = next;
                s.rows[size_t(cells[pos].row) * size_t(n) + size_t(cells[pos].col)] = next;
                break;
            }
            values[pos] = 0;
            s.rows[size_t(cells[pos].row) * size_t(n) + size_t(cells[pos].col)] = 0;
        }
        if (pos == cells.size()) break;
    }
}

} // namespace

void for_each_subspace(const FieldSpec& f, int n, int k,
                       const std::function<void(const Subspace&)>& fn) {
    if (k < 0 || k > n) throw InvalidArguments("subspace enumeration needs 0 <= k <= n");
    if (k == 0) {
        Subspace zero;
        zero.n = n;
        zero.k = 0;
        fn(zero);
        return;
    }
    for_each_pattern(n, k, [&](const std::vector<int>& pivots) {
        for_each_filling(f, n, pivots, fn);
    });
}

std::vector<Subspace> list_subspaces(const FieldSpec& f, int n, int k) {
    std::vector<Subspace> out;
    for_each_subspace(f, n, k, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

Int count_subspaces(const FieldSpec& f, int n, int k, int threads) {
    if (k < 0 || k > n) throw InvalidArguments("subspace enumeration needs 0 <= k <= n");
    if (k == 0) return 1;
    std::vector<std::vector<int>> patterns;
    for_each_pattern(n, k, [&](const std::vector<int>& p) { patterns.push_back(p); });
    auto count_range = [&](size_t lo, size_t hi) {
        long c = 0;
        for (size_t i = lo; i < hi; ++i)
            for_each_filling(f, n, patterns[i], [&](const Subspace&) { ++c; });
        return c;
    };
    if (threads <= 1 || patterns.size() < 2) return Int(count_range(0, patterns.size()));
    size_t nt = std::min(size_t(threads), patterns.size());
    std::vector<std::future<long>> futs;
    size_t chunk = (patterns.size() + nt - 1) / nt;
    for (size_t lo = 0; lo < patterns.size(); lo += chunk)
        futs.push_back(std::async(std::launch::async, count_range, lo,
                                  std::min(lo + chunk, patterns.size())));
    Int total = 0;
    for (auto& fu : futs) total += Int(fu.get());
    return total;
}

namespace {

std::vector<std::vector<int>> subspace_rows(const Subspace& s) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < s.k; ++i)
        rows.emplace_back(s.rows.begin() + i * s.n, s.rows.begin() + (i + 1) * s.n);
    return rows;
}

// Maps a subspace of the coordinate space of `basis` (d rows of length n)
// into ambient coordinates and canonicalizes.
Subspace embed_subspace(const FieldSpec& f, int n, const std::vector<std::vector<int>>& basis,
                        const Subspace& coords) {
    std::vector<std::vector<int>> ambient;
    for (int i = 0; i < coords.k; ++i) {
        std::vector<int> v(size_t(n), 0);
        for (int j = 0; j < coords.n; ++j) {
            int c = coords.at(i, j);
            if (c == 0) continue;
            for (int col = 0; col < n; ++col)
                v[size_t(col)] = f.add(v[size_t(col)], f.mul(c, basis[size_t(j)][size_t(col)]));
        }
        ambient.push_back(std::move(v));
    }
    Subspace s = subspace_span(f, n, ambient);
    return s;
}

} // namespace

void for_each_flag(const FieldSpec& f, int n, const Composition& comp,
                   const std::function<void(const FlagChain&)>& fn) {
    if (comp.sum() != n) throw InvalidArguments("composition must sum to the ambient dimension");
    int m = comp.length();
    std::vector<int> dims(static_cast<size_t>(m)); // dim W_i for i = 1..m-1 at index i-1
    int acc = n;
    for (int i = 0; i < m - 1; ++i) {
        acc -= comp.part(i);
        dims[size_t(i)] = acc;
    }
    std::vector<Subspace> chain;
    std::vector<std::vector<int>> ambient_basis;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(size_t(n), 0);
        e[size_t(i)] = 1;
        ambient_basis.push_back(std::move(e));
    }
    auto rec = [&](auto&& self, int level, const std::vector<std::vector<int>>& basis) -> void {
        if (level == m - 1) {
            fn(FlagChain{n, chain, comp});
            return;
        }
        int target = dims[size_t(level)];
        for_each_subspace(f, int(basis.size()), target, [&](const Subspace& coords) {
            Subspace w = embed_subspace(f, n, basis, coords);
            chain.push_back(w);
            self(self, level + 1, subspace_rows(w));
            chain.pop_back();
        });
    };
    rec(rec, 0, ambient_basis);
}

Int count_flags(const FieldSpec& f, const Composition& comp) {
    Int c = 0;
    for_each_flag(f, comp.sum(), comp, [&](const FlagChain&) { ++c; });
    return c;
}

Int total_flags(const FieldSpec& f, int n, int m) {
    if (n < 0 || m < 2) throw InvalidArguments("total_flags needs n >= 0, m >= 2");
    Int total = 0;
    for_each_composition(n, m, [&](const Composition& c) { total += count_flags(f, c); });
    return total;
}

TypeLabel classify_subspace(const FieldSpec& f, const Subspace& W,
                            const std::vector<std::vector<int>>& ambient_basis) {
    if (W.k == 0) throw ZeroDimensional("cannot classify the zero subspace");
    if (ambient_basis.empty())
        throw InvalidArguments("ambient basis must be nonempty");
    std::vector<std::vector<int>> vprime(ambient_basis.begin(), ambient_basis.end() - 1);
    Subspace vp = subspace_span(f, W.n, vprime);
    if (subspace_contains_all(f, vp, W)) return TypeLabel::Type1;
    if (subspace_contains(f, W, ambient_basis.back())) return TypeLabel::Type2;
    return TypeLabel::Type3;
}

TypeCensus type_census(const FieldSpec& f, int n_plus_1, int k) {
    if (k < 1 || k > n_plus_1)
        throw InvalidArguments("type_census needs 1 <= k <= n+1");
    std::vector<std::vector<int>> basis;
    for (int i = 0; i < n_plus_1; ++i) {
        std::vector<int> e(size_t(n_plus_1), 0);
        e[size_t(i)] = 1;
        basis.push_back(std::move(e));
    }
    TypeCensus census{0, 0, 0};
    for_each_subspace(f, n_plus_1, k, [&](const Subspace& w) {
        switch (classify_subspace(f, w, basis)) {
        case TypeLabel::Type1: ++census.c1; break;
        case TypeLabel::Type2: ++census.c2; break;
        case TypeLabel::Type3: ++census.c3; break;
        }
    });
    return census;
}

Int flag_type_pattern_count(const FieldSpec& f, const Composition& comp,
                            const SubsetIndicator& J) {
    int m = comp.length();
    if (!comp.all_positive())
        throw InvalidArguments("flag_type_pattern_count needs strictly positive parts");
    if (J.empty() || J.ambient() != m)
        throw InvalidArguments("J must be a nonempty subset of {1..m}");
    int n_plus_1 = comp.sum();
    int r = J.max_element();

    std::vector<int> dims(static_cast<size_t>(m));
    int acc = n_plus_1;
    for (int i = 0; i < m - 1; ++i) {
        acc -= comp.part(i);
        dims[size_t(i)] = acc;
    }

    std::vector<std::vector<int>> ambient_basis;
    for (int i = 0; i < n_plus_1; ++i) {
        std::vector<int> e(size_t(n_plus_1), 0);
        e[size_t(i)] = 1;
        ambient_basis.push_back(std::move(e));
    }

    Int count = 0;
    auto rec = [&](auto&& self, int level, const std::vector<std::vector<int>>& basis) -> void {
        if (level == m - 1) {
            ++count;
            return;
        }
        int pos = level + 1; // 1-based chain index of the subspace being chosen
        for_each_subspace(f, int(basis.size()), dims[size_t(level)], [&](const Subspace& coords) {
            Subspace w = embed_subspace(f, n_plus_1, basis, coords);
            TypeLabel label = classify_subspace(f, w, basis);
            if (pos < r) {
                TypeLabel need = J.contains(pos) ? TypeLabel::Type3 : TypeLabel::Type2;
                if (label != need) return;
            } else if (pos == r && r < m) {
                if (label != TypeLabel::Type1) return;
            }
            self(self, level + 1, subspace_rows(w));
        });
    };
    rec(rec, 0, ambient_basis);
    return count;
}

} // namespace qflag
