#ifndef QFLAG_SERIES_HPP
#define QFLAG_SERIES_HPP

#include <vector>

#include "qflag/mpoly.hpp"

namespace qflag {

// Formal power series truncated jointly in x-degree and q-degree: exact
// arithmetic modulo the ideal (x^{N+1}, q^{Q+1}). The x^n coefficients are
// x-free polynomials in the remaining variables, each reduced mod q^{Q+1}.
class TruncSeries {
public:
    TruncSeries(int xcap, int qcap);

    static TruncSeries from_poly(const MPoly& p, int xcap, int qcap);
    static TruncSeries one(int xcap, int qcap);

    int xcap() const { return xcap_; }
    int qcap() const { return qcap_; }
    const MPoly& coeff(int xdeg) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { a += b; return a; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { a -= b; return a; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    // Multiplicative inverse modulo (x^{N+1}, q^{Q+1}); requires the
    // (x-degree 0, q-degree 0) part to be exactly +-1, else NotAUnit.
    TruncSeries inverse() const;

    // Substitutes x -> xq and re-truncates: coefficient of x^n gains q^n.
    TruncSeries shift_q() const;

private:
    void check_caps(const TruncSeries& o) const;

    int xcap_;
    int qcap_;
    std::vector<MPoly> coeffs_;
};

} // namespace qflag

#endif
