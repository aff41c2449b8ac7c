#include "qflag/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace qflag {

VarId VarId::t(int i) {
    if (i < 1 || i > kMaxT)
        throw InvalidArguments("t-variable index out of range: t" + std::to_string(i));
    return VarId(2 + i);
}

std::string VarId::name() const {
    switch (idx_) {
    case 0: return "q";
    case 1: return "x";
    case 2: return "u";
    default: return "t" + std::to_string(idx_ - 2);
    }
}

std::optional<VarId> VarId::parse(std::string_view s) {
    if (s == "q") return q();
    if (s == "x") return x();
    if (s == "u") return u();
    if (s.size() >= 2 && s[0] == 't') {
        int i = 0;
        for (size_t p = 1; p < s.size(); ++p) {
            if (!std::isdigit(static_cast<unsigned char>(s[p]))) return std::nullopt;
            i = i * 10 + (s[p] - '0');
            if (i > kMaxT) return std::nullopt;
        }
        if (i >= 1) return t(i);
    }
    return std::nullopt;
}

int Monomial::degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
}

bool Monomial::is_unit() const {
    for (auto e : exp)
        if (e != 0) return false;
    return true;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    for (size_t i = 0; i < exp.size(); ++i)
        r.exp[i] = static_cast<uint16_t>(exp[i] + o.exp[i]);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > o.exp[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    for (size_t i = 0; i < exp.size(); ++i)
        r.exp[i] = static_cast<uint16_t>(exp[i] - o.exp[i]);
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp < b.exp;
}

namespace {

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (auto e : m.exp) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

MPoly::MPoly(Int c) {
    if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

MPoly MPoly::var(VarId v, int exponent) {
    if (exponent < 0)
        throw InvalidArguments("negative exponent in MPoly::var");
    if (exponent == 0) return MPoly(1);
    Monomial m;
    m.exp[size_t(v.index())] = static_cast<uint16_t>(exponent);
    return term(Int(1), m);
}

MPoly MPoly::term(Int coeff, const Monomial& mono) {
    MPoly p;
    if (coeff != 0) p.terms_.emplace(mono, std::move(coeff));
    return p;
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           terms_.begin()->second == 1;
}

int MPoly::degree_in(VarId v) const {
    int d = -1;
    for (const auto& [mono, c] : terms_)
        d = std::max(d, int(mono[v]));
    return terms_.empty() ? -1 : std::max(d, 0);
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_)
        d = std::max(d, mono.degree());
    return d;
}

Int MPoly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Int(0) : it->second;
}

void MPoly::add_term(const Monomial& mono, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    // Iterate the smaller operand outermost; accumulate unordered, then
    // restore canonical order once.
    const MPoly& small = a.term_count() <= b.term_count() ? a : b;
    const MPoly& big = a.term_count() <= b.term_count() ? b : a;
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    acc.reserve(big.term_count() * 2);
    for (const auto& [ms, cs] : small.terms_)
        for (const auto& [mb, cb] : big.terms_)
            acc[ms.times(mb)] += cs * cb;
    MPoly r;
    for (auto& [mono, c] : acc)
        if (c != 0) r.terms_.emplace(mono, std::move(c));
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly MPoly::divide_exact(const MPoly& divisor) const {
    if (divisor.is_zero())
        throw InvalidArguments("division by the zero polynomial");
    MPoly rem = *this;
    MPoly quot;
    const auto& dlead = *divisor.terms_.rbegin(); // largest in graded lex
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        if (!dlead.first.divides(rlead.first))
            throw NotDivisible("leading monomial not divisible");
        Int qc, rquot;
        mpz_tdiv_qr(qc.get_mpz_t(), rquot.get_mpz_t(),
                    rlead.second.get_mpz_t(), dlead.second.get_mpz_t());
        if (rquot != 0)
            throw NotDivisible("leading coefficient not divisible");
        Monomial qm = rlead.first.divided_by(dlead.first);
        quot.add_term(qm, qc);
        for (const auto& [mono, c] : divisor.terms_)
            rem.add_term(qm.times(mono), -(qc * c));
    }
    return quot;
}

MPoly MPoly::substitute(VarId v, const MPoly& r) const {
    // Group by exponent of v, then fold with precomputed powers of r.
    std::map<int, MPoly> slices;
    for (const auto& [mono, c] : terms_) {
        int e = mono[v];
        Monomial rest = mono;
        rest.exp[size_t(v.index())] = 0;
        slices[e].add_term(rest, c);
    }
    MPoly out;
    MPoly power(1);
    int cur = 0;
    for (const auto& [e, slice] : slices) {
        while (cur < e) {
            power *= r;
            ++cur;
        }
        out += slice * power;
    }
    return out;
}

Int MPoly::eval(const std::map<VarId, Int>& assignment) const {
    Int total = 0;
    for (const auto& [mono, c] : terms_) {
        Int v = c;
        for (int i = 0; i < VarId::kCount; ++i) {
            uint16_t e = mono.exp[size_t(i)];
            if (e == 0) continue;
            VarId var = i == 0 ? VarId::q() : i == 1 ? VarId::x()
                        : i == 2 ? VarId::u() : VarId::t(i - 2);
            auto it = assignment.find(var);
            if (it == assignment.end())
                throw MissingVariable("no value assigned to " + var.name());
            Int p;
            mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), e);
            v *= p;
        }
        total += v;
    }
    return total;
}

MPoly MPoly::truncate_in(VarId v, int cap) const {
    MPoly r;
    for (const auto& [mono, c] : terms_)
        if (int(mono[v]) <= cap) r.terms_.emplace(mono, c);
    return r;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Int mag = neg ? Int(-c) : c;
        bool needCoeff = mag != 1 || mono.is_unit();
        bool needStar = false;
        if (needCoeff) {
            os << mag.get_str();
            needStar = true;
        }
        for (int i = 0; i < VarId::kCount; ++i) {
            uint16_t e = mono.exp[size_t(i)];
            if (e == 0) continue;
            if (needStar) os << "*";
            needStar = true;
            VarId var = i == 0 ? VarId::q() : i == 1 ? VarId::x()
                        : i == 2 ? VarId::u() : VarId::t(i - 2);
            os << var.name();
            if (e >= 2) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number at position " + std::to_string(start));
        return std::string(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected a variable at position " + std::to_string(start));
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace

MPoly MPoly::parse(std::string_view text) {
    Lexer lx{text};
    MPoly out;
    bool expect_term = true;
    int sign = 1;
    if (lx.eof()) throw ParseError("empty polynomial text");
    while (!lx.eof()) {
        if (!expect_term) {
            if (lx.consume('+')) sign = 1;
            else if (lx.consume('-')) sign = -1;
            else throw ParseError("expected + or - at position " + std::to_string(lx.pos));
            expect_term = true;
            continue;
        }
        while (lx.consume('-')) sign = -sign;
        while (lx.consume('+')) {}
        Int coeff = 1;
        Monomial mono;
        bool saw_factor = false;
        if (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coeff = Int(lx.number());
            saw_factor = true;
        }
        while (true) {
            bool starred = lx.consume('*');
            if (!starred && saw_factor) {
                // factors must be *-separated once the term has started
                if (lx.eof() || lx.peek() == '+' || lx.peek() == '-') break;
                throw ParseError("expected * between factors at position " +
                                 std::to_string(lx.pos));
            }
            if (lx.eof()) {
                if (starred) throw ParseError("dangling * at end of input");
                break;
            }
            if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                coeff *= Int(lx.number());
            } else {
                std::string id = lx.ident();
                auto v = VarId::parse(id);
                if (!v) throw ParseError("unknown variable '" + id + "'");
                int e = 1;
                if (lx.consume('^')) e = std::stoi(lx.number());
                mono.exp[size_t(v->index())] =
                    static_cast<uint16_t>(mono.exp[size_t(v->index())] + e);
            }
            saw_factor = true;
        }
        if (!saw_factor) throw ParseError("empty term");
        out.add_term(mono, sign * coeff);
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw ParseError("trailing sign without a term");
    return out;
}

MPoly elementary_symmetric(int i, const std::vector<MPoly>& values) {
    if (i < 0 || size_t(i) > values.size())
        throw IndexOutOfRange("elementary symmetric index " + std::to_string(i) +
                              " out of range for " + std::to_string(values.size()) + " values");
    std::vector<MPoly> e(size_t(i) + 1);
    e[0] = MPoly(1);
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
