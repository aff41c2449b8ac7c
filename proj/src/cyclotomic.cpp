#include "qflag/cyclotomic.hpp"

#include <mutex>
#include <sstream>

#include "qflag/qkernel.hpp"
#include "qflag/rogers_szego.hpp"

namespace qflag {

namespace {

std::mutex g_mutex;
std::map<int, MPoly> g_cyclotomic;
std::map<int, std::vector<Int>> g_phi_coeffs;

MPoly cyclotomic_nolock(int m) {
    auto it = g_cyclotomic.find(m);
    if (it != g_cyclotomic.end()) return it->second;
    MPoly x = MPoly::var(VarId::x());
    MPoly value;
    if (m == 1) {
        value = x - MPoly(1);
    } else {
        MPoly num = MPoly::var(VarId::x(), m) - MPoly(1);
        MPoly den(1);
        for (int d = 1; d < m; ++d)
            if (m % d == 0) den *= cyclotomic_nolock(d);
        value = num.divide_exact(den);
    }
    g_cyclotomic.emplace(m, value);
    return value;
}

// Monic coefficient vector of Phi_m, index i = coefficient of x^i.
const std::vector<Int>& phi_coeffs(int m) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_phi_coeffs.find(m);
    if (it != g_phi_coeffs.end()) return it->second;
    MPoly phi = cyclotomic_nolock(m);
    int deg = phi.degree_in(VarId::x());
    std::vector<Int> coeffs(size_t(deg) + 1, Int(0));
    for (const auto& [mono, c] : phi.terms())
        coeffs[mono[VarId::x()]] = c;
    return g_phi_coeffs.emplace(m, std::move(coeffs)).first->second;
}

} // namespace

MPoly cyclotomic_polynomial(int m) {
    if (m < 1) throw InvalidArguments("cyclotomic_polynomial needs m >= 1");
    std::lock_guard<std::mutex> lock(g_mutex);
    return cyclotomic_nolock(m);
}

CycInt::CycInt(int m) : m_(m) {
    if (m < 1) throw InvalidArguments("conductor must be >= 1");
    coords_.assign(phi_coeffs(m).size() - 1, Int(0));
}

CycInt::CycInt(int m, const Int& value) : CycInt(m) {
    coords_[0] = value; // deg Phi_m >= 1 for every m
}

CycInt CycInt::omega_pow(int m, long e) {
    long r = e % m;
    if (r < 0) r += m;
    std::vector<Int> coeffs(size_t(r) + 1, Int(0));
    coeffs[size_t(r)] = 1;
    return reduce(m, std::move(coeffs));
}

CycInt CycInt::reduce(int m, std::vector<Int> coeffs) {
    const std::vector<Int>& phi = phi_coeffs(m);
    size_t d = phi.size() - 1; // Phi_m is monic of degree d
    for (size_t i = coeffs.size(); i-- > d;) {
        Int lead = coeffs[i];
        if (lead == 0) continue;
        for (size_t j = 0; j <= d; ++j)
            coeffs[i - d + j] -= lead * phi[j];
    }
    CycInt r(m);
    for (size_t i = 0; i < r.coords_.size() && i < coeffs.size(); ++i)
        r.coords_[i] = coeffs[i];
    return r;
}

bool CycInt::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycInt::is_rational_integral() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    if (m_ != o.m_) throw InvalidArguments("conductor mismatch");
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    if (m_ != o.m_) throw InvalidArguments("conductor mismatch");
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    if (a.m_ != b.m_) throw InvalidArguments("conductor mismatch");
    std::vector<Int> prod(a.coords_.size() + b.coords_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == 0) continue;
        for (size_t j = 0; j < b.coords_.size(); ++j)
            prod[i + j] += a.coords_[i] * b.coords_[j];
    }
    return CycInt::reduce(a.m_, std::move(prod));
}

CycInt CycInt::operator-() const {
    CycInt r(m_);
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = -coords_[i];
    return r;
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        bool neg = coords_[i] < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Int mag = neg ? Int(-coords_[i]) : coords_[i];
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "w";
            if (i >= 2) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycPoly::CycPoly(int m) : m_(m) {
    if (m < 1) throw InvalidArguments("conductor must be >= 1");
}

CycPoly CycPoly::from_qpoly(int m, const MPoly& p) {
    CycPoly r(m);
    for (const auto& [mono, c] : p.terms()) {
        Monomial rest = mono;
        rest.exp[size_t(VarId::q().index())] = 0;
        if (!rest.is_unit())
            throw InvalidArguments("from_qpoly expects a polynomial in q only");
        r.add_term(long(mono[VarId::q()]), CycInt(m, c));
    }
    return r;
}

bool CycPoly::is_rational_integral() const {
    for (const auto& [e, c] : coeffs_)
        if (!c.is_rational_integral()) return false;
    return true;
}

void CycPoly::add_term(long qexp, const CycInt& c) {
    if (c.conductor() != m_) throw InvalidArguments("conductor mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(qexp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

CycPoly& CycPoly::operator+=(const CycPoly& o) {
    if (m_ != o.m_) throw InvalidArguments("conductor mismatch");
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

CycPoly& CycPoly::operator-=(const CycPoly& o) {
    if (m_ != o.m_) throw InvalidArguments("conductor mismatch");
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
    if (a.m_ != b.m_) throw InvalidArguments("conductor mismatch");
    CycPoly r(a.m_);
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

std::string CycPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (e >= 1) {
            os << "*q";
            if (e >= 2) os << "^" << e;
        }
    }
    return os.str();
}

CycPoly rs_eval_unit_monomials(const MPoly& value, int m,
                               const std::vector<std::pair<long, long>>& assign) {
    CycPoly out(m);
    // Collect raw omega-exponent sums per q-exponent, reduce once per bucket.
    std::map<long, std::map<long, Int>> buckets; // qexp -> (wexp -> coeff)
    for (const auto& [mono, c] : value.terms()) {
        long qexp = mono[VarId::q()];
        long wexp = 0;
        for (size_t i = 0; i < assign.size(); ++i) {
            uint16_t k = mono[VarId::t(int(i) + 1)];
            if (k == 0) continue;
            wexp += assign[i].first * k;
            qexp += assign[i].second * k;
        }
        buckets[qexp][((wexp % m) + m) % m] += c;
    }
    for (const auto& [qexp, wmap] : buckets) {
        std::vector<Int> coeffs(size_t(m), Int(0));
        for (const auto& [wexp, c] : wmap) coeffs[size_t(wexp)] += c;
        out.add_term(qexp, CycInt::reduce(m, coeffs));
    }
    return out;
}

CycPoly rs_eval_roots(int n, int m, bool scaled) {
    if (n < 0 || m < 2) throw InvalidArguments("rs_eval_roots needs n >= 0, m >= 2");
    std::vector<std::pair<long, long>> assign;
    for (int i = 1; i < m; ++i)
        assign.emplace_back(long(i), scaled ? 1L : 0L);
    return rs_eval_unit_monomials(rs(n, m).value, m, assign);
}

MPoly special1_formula(int n, int m) {
    if (n < 0 || m < 2) throw InvalidArguments("special1_formula needs n >= 0, m >= 2");
    if (n % m != 0) return MPoly();
    MPoly prod(1);
    for (int j = 1; j < n; ++j)
        if (j % m != 0)
            prod *= MPoly(1) - MPoly::var(VarId::q(), j);
    return prod;
}

MPoly special3_formula(int n, int m) {
    if (n < 0 || m < 2) throw InvalidArguments("special3_formula needs n >= 0, m >= 2");
    MPoly prod(1);
    for (int j = 1; j <= n; ++j)
        if (j % m != 0)
            prod *= MPoly(1) - MPoly::var(VarId::q(), j);
    return prod;
}

bool special2_check(int n, int m) {
    if (n < 0 || m < 2) throw InvalidArguments("special2_check needs n >= 0, m >= 2");
    // q = u^m, t_i = u^i makes every fractional power q^{j/m} = u^j exact.
    MPoly lhs = rs(n, m).value.substitute(VarId::q(), MPoly::var(VarId::u(), m));
    for (int i = 1; i < m; ++i)
        lhs = lhs.substitute(VarId::t(i), MPoly::var(VarId::u(), i));
    MPoly rhs(1);
    for (int j = 1; j <= n; ++j) {
        MPoly factor;
        for (int l = 0; l < m; ++l)
            factor += MPoly::var(VarId::u(), j * l);
        rhs *= factor;
    }
    return lhs == rhs;
}

bool special3_via_qshift_check(int n, int m) {
    if (m < 2) throw InvalidArguments("special3_via_qshift_check needs m >= 2");
    if (n < m) throw InvalidArguments("special3_via_qshift_check needs n >= m");
    // The functional equation's coefficients e_i(w, ..., w^{m-1}) must be
    // (-1)^i; w, ..., w^{m-1} are the roots of x^{m-1} + ... + 1.
    std::vector<CycInt> roots;
    for (int i = 1; i < m; ++i) roots.push_back(CycInt::omega_pow(m, i));
    for (int i = 0; i < m; ++i) {
        CycInt expect(m, Int(i % 2 == 0 ? 1 : -1));
        if (cyc_elementary_symmetric(i, roots) != expect) return false;
    }
    // sum_{i=0}^{m-1} e_i(t_J) (-1)^i (q)_n/(q)_{n-i} H_{n-i}(w, ...) with
    // both signs folded: Pi_{j<i}(1 - q^{n-j}) times the unscaled value.
    MPoly total;
    for (int i = 0; i < m; ++i) {
        MPoly factor(1);
        for (int j = 0; j < i; ++j)
            factor *= MPoly(1) - MPoly::var(VarId::q(), n - j);
        total += factor * special1_formula(n - i, m);
    }
    return total == special3_formula(n, m);
}

bool h1_qshift_chain_check(int m) {
    if (m < 2) throw InvalidArguments("h1_qshift_chain_check needs m >= 2");
    const MPoly h1 = rs(1, m).value; // 1 + t_1 + ... + t_{m-1}
    std::vector<std::pair<long, long>> assign;
    for (int i = 1; i < m; ++i) assign.emplace_back(long(i), 0L);
    CycPoly prev = rs_eval_unit_monomials(h1, m, assign);
    MPoly qminus1 = MPoly::var(VarId::q()) - MPoly(1);
    for (int l = 1; l < m; ++l) {
        assign[size_t(l - 1)].second = 1;
        CycPoly cur = rs_eval_unit_monomials(h1, m, assign);
        // One application of the functional equation with J = {l}:
        // H_1(.., t_l q, ..) = H_1(..) + t_l (q - 1) H_0 at t_l = w^l.
        CycPoly step = prev;
        CycPoly shift = CycPoly::from_qpoly(m, qminus1);
        CycPoly wl(m);
        wl.add_term(0, CycInt::omega_pow(m, l));
        step += wl * shift;
        if (cur != step) return false;
        // Closed form after l steps: (w + ... + w^l)(q - 1).
        CycInt partial(m);
        for (int i = 1; i <= l; ++i) partial += CycInt::omega_pow(m, i);
        CycPoly closed(m);
        closed.add_term(0, partial);
        closed = closed * shift;
        if (cur != closed) return false;
        prev = cur;
    }
    return prev == CycPoly::from_qpoly(m, MPoly(1) - MPoly::var(VarId::q()));
}

CycInt cyc_elementary_symmetric(int i, const std::vector<CycInt>& values) {
    if (i < 0 || size_t(i) > values.size())
        throw IndexOutOfRange("elementary symmetric index out of range");
    if (values.empty() && i == 0)
        throw InvalidArguments("need at least one value to infer the conductor");
    int m = values.front().conductor();
    std::vector<CycInt> e(size_t(i) + 1, CycInt(m));
    e[0] = CycInt(m, Int(1));
    size_t processed = 0;
    for (const auto& v : values) {
        ++processed;
        size_t top = std::min(size_t(i), processed);
        for (size_t j = top; j >= 1; --j)
            e[j] += e[j - 1] * v;
    }
    return e[size_t(i)];
}

} // namespace qflag
