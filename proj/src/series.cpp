#include "qflag/series.hpp"

namespace qflag {

TruncSeries::TruncSeries(int xcap, int qcap) : xcap_(xcap), qcap_(qcap) {
    if (xcap < 0 || qcap < 0)
        throw InvalidArguments("series caps must be non-negative");
    coeffs_.resize(size_t(xcap) + 1);
}

TruncSeries TruncSeries::from_poly(const MPoly& p, int xcap, int qcap) {
    TruncSeries s(xcap, qcap);
    for (const auto& [mono, c] : p.terms()) {
        int xd = mono[VarId::x()];
        if (xd > xcap || int(mono[VarId::q()]) > qcap) continue;
        Monomial rest = mono;
        rest.exp[size_t(VarId::x().index())] = 0;
        s.coeffs_[size_t(xd)].add_term(rest, c);
    }
    return s;
}

TruncSeries TruncSeries::one(int xcap, int qcap) {
    return from_poly(MPoly(1), xcap, qcap);
}

const MPoly& TruncSeries::coeff(int xdeg) const {
    if (xdeg < 0 || xdeg > xcap_)
        throw InvalidArguments("x-degree out of range");
    return coeffs_[size_t(xdeg)];
}

void TruncSeries::check_caps(const TruncSeries& o) const {
    if (xcap_ != o.xcap_ || qcap_ != o.qcap_)
        throw CapMismatch("series truncation caps differ");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_caps(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check_caps(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_caps(b);
    TruncSeries r(a.xcap_, a.qcap_);
    for (int i = 0; i <= a.xcap_; ++i) {
        if (a.coeffs_[size_t(i)].is_zero()) continue;
        for (int j = 0; i + j <= a.xcap_; ++j) {
            if (b.coeffs_[size_t(j)].is_zero()) continue;
            r.coeffs_[size_t(i + j)] +=
                (a.coeffs_[size_t(i)] * b.coeffs_[size_t(j)]).truncate_in(VarId::q(), a.qcap_);
        }
    }
    for (auto& c : r.coeffs_) c = c.truncate_in(VarId::q(), a.qcap_);
    return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.xcap_ == b.xcap_ && a.qcap_ == b.qcap_ && a.coeffs_ == b.coeffs_;
}

TruncSeries TruncSeries::inverse() const {
    // Invert the x^0 coefficient q-adically first. Termination needs its
    // q-constant slice to be exactly +-1.
    const MPoly& a0 = coeffs_[0];
    MPoly qslice = a0.truncate_in(VarId::q(), 0);
    int unit;
    if (qslice == MPoly(1)) unit = 1;
    else if (qslice == MPoly(-1)) unit = -1;
    else throw NotAUnit("series constant term is not +-1");

    // a0 = c(1 + c*rest) with rest of positive q-degree, so the geometric
    // expansion of the inverse stops after qcap steps.
    MPoly rest = a0 - MPoly(unit);
    MPoly scaled = MPoly(unit) * rest;
    MPoly inv0(unit);
    MPoly power(unit); // c * (-c*rest)^k accumulated
    for (int k = 1; k <= qcap_; ++k) {
        power = (power * -scaled).truncate_in(VarId::q(), qcap_);
        if (power.is_zero()) break;
        inv0 += power;
    }

    TruncSeries r(xcap_, qcap_);
    r.coeffs_[0] = inv0;
    for (int n = 1; n <= xcap_; ++n) {
        MPoly s;
        for (int k = 1; k <= n; ++k) {
            if (coeffs_[size_t(k)].is_zero()) continue;
            s += coeffs_[size_t(k)] * r.coeffs_[size_t(n - k)];
        }
        r.coeffs_[size_t(n)] = ((-s) * inv0).truncate_in(VarId::q(), qcap_);
    }
    return r;
}

TruncSeries TruncSeries::shift_q() const {
    TruncSeries r(xcap_, qcap_);
    for (int n = 0; n <= xcap_; ++n) {
        MPoly qn = MPoly::var(VarId::q(), n);
        r.coeffs_[size_t(n)] = (coeffs_[size_t(n)] * qn).truncate_in(VarId::q(), qcap_);
    }
    return r;
}

} // namespace qflag
