#include "qflag/qkernel.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qflag/rogers_szego.hpp"

namespace qflag {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), sum_(0) {
    if (parts_.empty())
        throw InvalidArguments("composition needs at least one part");
    for (int k : parts_) {
        if (k < 0) throw InvalidArguments("composition parts must be non-negative");
        sum_ += k;
    }
}

bool Composition::all_positive() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int k) { return k > 0; });
}

SubsetIndicator::SubsetIndicator(int m, std::vector<int> elements)
    : m_(m), elements_(std::move(elements)) {
    if (m < 1) throw InvalidArguments("subset ambient length must be >= 1");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (int e : elements_)
        if (e < 1 || e > m)
            throw InvalidArguments("subset element out of {1..m}");
}

SubsetIndicator SubsetIndicator::from_mask(int m, unsigned mask) {
    std::vector<int> elems;
    for (int i = 1; i <= m; ++i)
        if (mask & (1u << (i - 1))) elems.push_back(i);
    return SubsetIndicator(m, std::move(elems));
}

bool SubsetIndicator::contains(int i) const {
    return std::binary_search(elements_.begin(), elements_.end(), i);
}

int SubsetIndicator::max_element() const {
    if (elements_.empty()) throw InvalidArguments("empty subset has no maximum");
    return elements_.back();
}

std::vector<int> SubsetIndicator::indicator() const {
    std::vector<int> e(size_t(m_), 0);
    for (int i : elements_) e[size_t(i - 1)] = 1;
    return e;
}

void for_each_composition(int n, int m, const std::function<void(const Composition&)>& fn) {
    if (n < 0 || m < 1) throw InvalidArguments("composition enumeration needs n >= 0, m >= 1");
    std::vector<int> parts(size_t(m), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == m - 1) {
            parts[size_t(pos)] = rem;
            fn(Composition(parts));
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            parts[size_t(pos)] = k;
            self(self, pos + 1, rem - k);
        }
    };
    rec(rec, 0, n);
}

std::vector<Composition> compositions_of(int n, int m) {
    std::vector<Composition> out;
    for_each_composition(n, m, [&](const Composition& c) { out.push_back(c); });
    return out;
}

Int binomial_int(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<Int> row(size_t(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j)
            row[size_t(j)] += row[size_t(j) - 1];
    return row[size_t(k)];
}

MPoly pochhammer(const MPoly& a, const MPoly& r, int n) {
    if (n < 0) throw InvalidArguments("pochhammer needs n >= 0");
    MPoly prod(1);
    MPoly rpow(1);
    for (int i = 0; i < n; ++i) {
        prod *= MPoly(1) - a * rpow;
        rpow *= r;
    }
    return prod;
}

namespace {

using QDense = std::vector<Int>; // coefficient of q^i at index i

QDense conv(const QDense& a, const QDense& b) {
    if (a.empty() || b.empty()) return {};
    QDense r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

void add_into(QDense& acc, const QDense& a) {
    if (acc.size() < a.size()) acc.resize(a.size(), Int(0));
    for (size_t i = 0; i < a.size(); ++i) acc[i] += a[i];
}

MPoly dense_to_mpoly(const QDense& d) {
    MPoly p;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        Monomial m;
        m.exp[size_t(VarId::q().index())] = static_cast<uint16_t>(i);
        p.add_term(m, d[i]);
    }
    return p;
}

struct Corruption {
    bool active = false;
    int n = 0, k = 0, qexp = 0;
    long delta = 0;
};

std::mutex g_mutex;
std::map<std::pair<int, int>, QDense> g_pascal;
std::map<std::pair<int, int>, MPoly> g_gengal;
Corruption g_corruption;

const QDense& pascal_nolock(int n, int k) {
    auto key = std::make_pair(n, k);
    auto it = g_pascal.find(key);
    if (it != g_pascal.end()) return it->second;
    QDense value;
    if (k == 0 || k == n) {
        value = {Int(1)};
    } else {
        // binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k)
        value = pascal_nolock(n - 1, k - 1);
        const QDense& right = pascal_nolock(n - 1, k);
        if (value.size() < right.size() + size_t(k)) value.resize(right.size() + size_t(k), Int(0));
        for (size_t i = 0; i < right.size(); ++i)
            value[i + size_t(k)] += right[i];
    }
    if (g_corruption.active && g_corruption.n == n && g_corruption.k == k) {
        if (value.size() <= size_t(g_corruption.qexp))
            value.resize(size_t(g_corruption.qexp) + 1, Int(0));
        value[size_t(g_corruption.qexp)] += g_corruption.delta;
    }
    return g_pascal.emplace(key, std::move(value)).first->second;
}

} // namespace

namespace detail {

std::vector<Int> qbinomial_dense(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw InvalidArguments("qbinomial needs 0 <= k <= n");
    std::lock_guard<std::mutex> lock(g_mutex);
    return pascal_nolock(n, k);
}

void clear_qkernel_caches() {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_pascal.clear();
    g_gengal.clear();
}

} // namespace detail

namespace testing {

void inject_qbinomial_corruption(int n, int k, int qexp, long delta) {
    if (n < 0 || k < 0 || k > n || qexp < 0)
        throw InvalidArguments("corruption target out of range");
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        g_corruption = Corruption{true, n, k, qexp, delta};
        g_pascal.clear();
        g_gengal.clear();
    }
    detail::clear_rogers_szego_caches();
}

void clear_qbinomial_corruption() {
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        g_corruption = Corruption{};
        g_pascal.clear();
        g_gengal.clear();
    }
    detail::clear_rogers_szego_caches();
}

} // namespace testing

MPoly qbinomial(int n, int k) {
    return dense_to_mpoly(detail::qbinomial_dense(n, k));
}

MPoly qbinomial_by_division(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw InvalidArguments("qbinomial needs 0 <= k <= n");
    MPoly q = MPoly::var(VarId::q());
    MPoly num = pochhammer(q, q, n);
    MPoly den = pochhammer(q, q, k) * pochhammer(q, q, n - k);
    return num.divide_exact(den);
}

MPoly qmultinomial(const Composition& c) {
    std::lock_guard<std::mutex> lock(g_mutex);
    QDense acc{Int(1)};
    int rem = c.sum();
    for (int i = 0; i < c.length(); ++i) {
        acc = conv(acc, pascal_nolock(rem, c.part(i)));
        rem -= c.part(i);
    }
    return dense_to_mpoly(acc);
}

MPoly galois(int n) {
    if (n < 0) throw InvalidArguments("galois needs n >= 0");
    std::lock_guard<std::mutex> lock(g_mutex);
    QDense total;
    for (int k = 0; k <= n; ++k) add_into(total, pascal_nolock(n, k));
    return dense_to_mpoly(total);
}

MPoly galois_general(int n, int m) {
    if (n < 0 || m < 2)
        throw InvalidArguments("galois_general needs n >= 0, m >= 2");
    std::lock_guard<std::mutex> lock(g_mutex);
    auto key = std::make_pair(n, m);
    auto it = g_gengal.find(key);
    if (it != g_gengal.end()) return it->second;
    // Sum over all compositions, sharing telescoping prefix products.
    QDense total;
    auto rec = [&](auto&& self, int pos, int rem, const QDense& acc) -> void {
        if (pos == m - 1) {
            add_into(total, acc);
            return;
        }
        for (int k = 0; k <= rem; ++k)
            self(self, pos + 1, rem - k, conv(acc, pascal_nolock(rem, k)));
    };
    rec(rec, 0, n, QDense{Int(1)});
    MPoly value = dense_to_mpoly(total);
    g_gengal.emplace(key, value);
    return value;
}

MPoly rising_qfactor(int n, int i) {
    if (i < 0 || i > n) throw InvalidArguments("rising_qfactor needs 0 <= i <= n");
    MPoly prod(1);
    for (int j = 0; j < i; ++j)
        prod *= MPoly::var(VarId::q(), n - j) - MPoly(1);
    return prod;
}

bool gengal_recursion_check(int n, int m) {
    if (m < 2) throw InvalidArguments("gengal_recursion_check needs m >= 2");
    if (n < m - 1)
        throw InvalidArguments("gengal recursion needs n >= m-1");
    MPoly lhs = galois_general(n + 1, m);
    MPoly rhs;
    for (int i = 0; i < m; ++i)
        rhs += MPoly(binomial_int(m, i + 1)) * rising_qfactor(n, i) * galois_general(n - i, m);
    return lhs == rhs;
}

MPoly gengal_lemma_rhs(const Composition& c) {
    int m = c.length();
    if (m < 2) throw InvalidArguments("gengal_lemma_rhs needs length >= 2");
    if (!c.all_positive())
        throw InvalidArguments("gengal_lemma_rhs needs strictly positive parts");
    int n = c.sum() - 1;
    MPoly total;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        auto J = SubsetIndicator::from_mask(m, mask);
        std::vector<int> reduced = c.parts();
        for (int j : J.elements()) reduced[size_t(j - 1)] -= 1;
        total += rising_qfactor(n, J.size() - 1) * qmultinomial(Composition(reduced));
    }
    return total;
}

MPoly gengal_lemma_zero_extension(const Composition& c) {
    std::vector<int> reduced;
    for (int k : c.parts())
        if (k > 0) reduced.push_back(k);
    if (reduced.empty())
        throw InvalidArguments("composition must have at least one positive part");
    if (reduced.size() == 1)
        return MPoly(1); // single-part rule: binom(k; k)_q = 1
    // Re-inserting the stripped zeros leaves every q-multinomial in the sum
    // unchanged, so the reduced right-hand side already is the value.
    return gengal_lemma_rhs(Composition(std::move(reduced)));
}

} // namespace qflag
