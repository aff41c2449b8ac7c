#include "qflag/rogers_szego.hpp"

#include <map>
#include <mutex>

namespace qflag {

namespace {

std::mutex g_mutex;
std::map<std::pair<int, int>, MPoly> g_rs;
std::map<std::pair<int, int>, MPoly> g_rs_hom;

// Builds the defining composition sum, sharing telescoping prefix products
// of the q-binomial factors. With homogeneous set, exponents cover t_1..t_m;
// otherwise the final part is dropped (t_m = 1).
MPoly build_sum(int n, int m, bool homogeneous) {
    MPoly out;
    std::vector<int> parts(size_t(m), 0);
    auto rec = [&](auto&& self, int pos, int rem, const std::vector<Int>& acc) -> void {
        if (pos == m - 1) {
            parts[size_t(pos)] = rem; // last factor binom(rem, rem) = 1
            Monomial base;
            int tcount = homogeneous ? m : m - 1;
            for (int i = 0; i < tcount; ++i)
                base.exp[size_t(VarId::t(i + 1).index())] = static_cast<uint16_t>(parts[size_t(i)]);
            for (size_t d = 0; d < acc.size(); ++d) {
                if (acc[d] == 0) continue;
                Monomial mono = base;
                mono.exp[size_t(VarId::q().index())] = static_cast<uint16_t>(d);
                out.add_term(mono, acc[d]);
            }
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            parts[size_t(pos)] = k;
            const std::vector<Int> factor = detail::qbinomial_dense(rem, k);
            std::vector<Int> next(acc.size() + factor.size() - 1, Int(0));
            for (size_t i = 0; i < acc.size(); ++i) {
                if (acc[i] == 0) continue;
                for (size_t j = 0; j < factor.size(); ++j)
                    next[i + j] += acc[i] * factor[j];
            }
            self(self, pos + 1, rem - k, next);
        }
    };
    rec(rec, 0, n, std::vector<Int>{Int(1)});
    return out;
}

} // namespace

namespace detail {
void clear_rogers_szego_caches() {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_rs.clear();
    g_rs_hom.clear();
}
} // namespace detail

RSHomogeneous rs_homogeneous(int n, int m) {
    if (n < 0 || m < 2)
        throw InvalidArguments("rs_homogeneous needs n >= 0, m >= 2");
    if (m > VarId::kMaxT)
        throw InvalidArguments("rs_homogeneous supports m <= " + std::to_string(VarId::kMaxT));
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = g_rs_hom.find({n, m});
        if (it != g_rs_hom.end()) return RSHomogeneous{n, m, it->second};
    }
    MPoly value = build_sum(n, m, true);
    std::lock_guard<std::mutex> lock(g_mutex);
    g_rs_hom.emplace(std::make_pair(n, m), value);
    return RSHomogeneous{n, m, std::move(value)};
}

RSPoly rs(int n, int m) {
    if (n < 0 || m < 2)
        throw InvalidArguments("rs needs n >= 0, m >= 2");
    if (m - 1 > VarId::kMaxT)
        throw InvalidArguments("rs supports m <= " + std::to_string(VarId::kMaxT + 1));
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = g_rs.find({n, m});
        if (it != g_rs.end()) return RSPoly{n, m, it->second};
    }
    MPoly value = build_sum(n, m, false);
    std::lock_guard<std::mutex> lock(g_mutex);
    g_rs.emplace(std::make_pair(n, m), value);
    return RSPoly{n, m, std::move(value)};
}

bool rs_single_recursion_check(int n) {
    if (n < 1) throw InvalidArguments("rs_single_recursion_check needs n >= 1");
    MPoly t1 = MPoly::var(VarId::t(1));
    MPoly rhs = (MPoly(1) + t1) * rs(n, 2).value +
                t1 * (MPoly::var(VarId::q(), n) - MPoly(1)) * rs(n - 1, 2).value;
    return rs(n + 1, 2).value == rhs;
}

RSPoly rs_recursion_rhs(int n, int m) {
    if (m < 2) throw InvalidArguments("rs_recursion_rhs needs m >= 2");
    if (n < m - 1)
        throw InvalidArguments("rs_recursion_rhs needs n >= m-1; the sum would reach below H_0");
    std::vector<MPoly> vals;
    for (int i = 1; i < m; ++i) vals.push_back(MPoly::var(VarId::t(i)));
    vals.push_back(MPoly(1));
    MPoly total;
    for (int i = 0; i < m; ++i) {
        MPoly small = elementary_symmetric(i + 1, vals) * rising_qfactor(n, i);
        total += small * rs(n - i, m).value;
    }
    return RSPoly{n + 1, m, std::move(total)};
}

MPoly rs_apply_qshift(const MPoly& value, const SubsetIndicator& J) {
    MPoly out = value;
    for (int j : J.elements()) {
        VarId tj = VarId::t(j);
        out = out.substitute(tj, MPoly::var(tj) * MPoly::var(VarId::q()));
    }
    return out;
}

MPoly rs_qshift_rhs(int n, int m, const SubsetIndicator& J) {
    if (m < 2) throw InvalidArguments("rs_qshift_rhs needs m >= 2");
    if (J.empty() || J.ambient() != m - 1 || J.max_element() > m - 1)
        throw InvalidArguments("J must be a nonempty subset of {1..m-1}");
    if (n < J.size())
        throw InvalidArguments("rs_qshift_rhs needs n >= |J|");
    std::vector<MPoly> vals;
    for (int j : J.elements()) vals.push_back(MPoly::var(VarId::t(j)));
    MPoly total;
    for (int i = 0; i <= J.size(); ++i)
        total += elementary_symmetric(i, vals) * rising_qfactor(n, i) * rs(n - i, m).value;
    return total;
}

TruncSeries pochhammer_series(const MPoly& a, int xcap, int qcap) {
    TruncSeries prod = TruncSeries::one(xcap, qcap);
    for (int i = 0; i <= qcap; ++i) {
        MPoly factor = MPoly(1) - a * MPoly::var(VarId::q(), i);
        prod = prod * TruncSeries::from_poly(factor, xcap, qcap);
    }
    return prod;
}

namespace {

TruncSeries generating_series(int m, int xcap, int qcap) {
    MPoly x = MPoly::var(VarId::x());
    TruncSeries f = pochhammer_series(x, xcap, qcap).inverse();
    for (int k = 1; k < m; ++k) {
        MPoly tx = MPoly::var(VarId::t(k)) * x;
        f = f * pochhammer_series(tx, xcap, qcap).inverse();
    }
    return f;
}

} // namespace

bool rs_generating_check(int m, int xcap, int qcap) {
    if (m < 2 || xcap < 0 || qcap < 0)
        throw InvalidArguments("rs_generating_check needs m >= 2 and non-negative caps");
    TruncSeries f = generating_series(m, xcap, qcap);
    MPoly q = MPoly::var(VarId::q());
    for (int n = 0; n <= xcap; ++n) {
        MPoly lhs = (pochhammer(q, q, n) * f.coeff(n)).truncate_in(VarId::q(), qcap);
        MPoly rhs = rs(n, m).value.truncate_in(VarId::q(), qcap);
        if (lhs != rhs) return false;
    }
    return true;
}

bool rs_functional_series_check(int m, int xcap, int qcap) {
    if (m < 2 || xcap < 0 || qcap < 0)
        throw InvalidArguments("rs_functional_series_check needs m >= 2 and non-negative caps");
    TruncSeries f = generating_series(m, xcap, qcap);
    MPoly x = MPoly::var(VarId::x());
    MPoly poly = MPoly(1) - x;
    for (int k = 1; k < m; ++k)
        poly *= MPoly(1) - MPoly::var(VarId::t(k)) * x;
    TruncSeries lhs = TruncSeries::from_poly(poly, xcap, qcap) * f;
    return lhs == f.shift_q();
}

} // namespace qflag
