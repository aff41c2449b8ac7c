#ifndef QFLAG_ROGERS_SZEGO_HPP
#define QFLAG_ROGERS_SZEGO_HPP

#include "qflag/qkernel.hpp"
#include "qflag/series.hpp"

namespace qflag {

// H_n(t_1, ..., t_{m-1}) = sum over compositions (k_1..k_m) of n of
// binom(n; k)_q t_1^{k_1} ... t_{m-1}^{k_{m-1}}.
struct RSPoly {
    int n;
    int m;
    MPoly value;
};

// Homogeneous form H~_n(t_1, ..., t_m); every term has total t-degree n.
struct RSHomogeneous {
    int n;
    int m;
    MPoly value;
};

// Defining composition sums (memoized); m >= 2, n >= 0.
RSHomogeneous rs_homogeneous(int n, int m);
RSPoly rs(int n, int m);

// Single-variable recursion H_{n+1} = (1+t)H_n + t(q^n - 1)H_{n-1}; n >= 1.
bool rs_single_recursion_check(int n);

// sum_{i=0}^{m-1} e_{i+1}(t_1..t_{m-1},1) Pi_{j<i}(q^{n-j}-1) H_{n-i};
// must equal rs(n+1, m). Requires n >= m-1.
RSPoly rs_recursion_rhs(int n, int m);

// sum_{i=0}^{|J|} e_i(t_J) Pi_{j<i}(q^{n-j}-1) H_{n-i}(t); must equal
// rs(n, m) with t_j replaced by t_j q for j in J. Requires n >= |J| >= 1,
// J a subset of {1..m-1}.
MPoly rs_qshift_rhs(int n, int m, const SubsetIndicator& J);

// Applies t_j -> t_j * q for every j in J.
MPoly rs_apply_qshift(const MPoly& value, const SubsetIndicator& J);

// Generating function check: with F = Pi_k (t_k x; q)^-1 * (x; q)^-1 on
// truncations (factor lists cut at index Q), verifies
// (q)_n * [x^n] F == rs(n, m) mod q^{Q+1} for every n <= N.
bool rs_generating_check(int m, int xcap, int qcap);

// Functional relation on truncations:
// (1 - t_1 x)...(1 - t_{m-1} x)(1 - x) F(x, t) == F(xq, t).
bool rs_functional_series_check(int m, int xcap, int qcap);

// Truncated product Pi_{i=0}^{Q} (1 - a q^i); later factors are 1 mod q^{Q+1}.
TruncSeries pochhammer_series(const MPoly& a, int xcap, int qcap);

namespace detail {
void clear_rogers_szego_caches();
}

} // namespace qflag

#endif
