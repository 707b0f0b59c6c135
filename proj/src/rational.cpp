#include "skein/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace skein {

namespace {

// Dense polynomial helpers (coefficient of t^i at index i, no trailing zeros).
using Dense = std::vector<Rational>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& p, int shift) {
    Dense d;
    if (p.is_zero()) return d;
    d.assign(static_cast<size_t>(p.highest_exp() - shift) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e - shift)] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
    LaurentPoly r;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) r += LaurentPoly::monomial(d[i], static_cast<int>(i) + shift);
    return r;
}

// Exact long division over Q[t]; remainder must come out zero when used
// for cofactor extraction.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    Dense q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        size_t off = a.size() - b.size();
        Rational f = a.back() / lead;
        q[off] = f;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        trim(a);
    }
    return {q, a};
}

// Primitive integer form: multiply through by the lcm of denominators,
// divide by the gcd of numerators. Content is discarded (gcd use only).
std::vector<mpz_class> primitive_int(const Dense& p) {
    std::vector<mpz_class> z(p.size());
    mpz_class lcm_den(1);
    for (const auto& c : p)
        if (c != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    for (size_t i = 0; i < p.size(); ++i) {
        mpz_class num(p[i].get_num());
        mpz_class den(p[i].get_den());
        z[i] = num * (lcm_den / den);
    }
    mpz_class content(0);
    for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content != 0)
        for (auto& c : z) c /= content;
    return z;
}

void trim_int(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(std::vector<mpz_class>& p) {
    mpz_class content(0);
    for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : p) c /= content;
}

// Primitive PRS gcd over Z[t]; content-stripped after each pseudo-remainder
// step to keep coefficient growth in check.
std::vector<mpz_class> gcd_int(std::vector<mpz_class> a, std::vector<mpz_class> b) {
    trim_int(a);
    trim_int(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return {mpz_class(1)};  // nonzero constant divides everything
        // pseudo-remainder of a by b
        while (a.size() >= b.size() && !a.empty()) {
            mpz_class la = a.back(), lb = b.back(), g;
            mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
            mpz_class fa = lb / g, fb = la / g;
            size_t off = a.size() - b.size();
            for (auto& c : a) c *= fa;
            for (size_t j = 0; j < b.size(); ++j) a[off + j] -= fb * b[j];
            trim_int(a);
        }
        make_primitive(a);
        std::swap(a, b);
    }
    make_primitive(a);
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

Dense dense_gcd(const Dense& a, const Dense& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    auto g = gcd_int(primitive_int(a), primitive_int(b));
    Dense r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = Rational(g[i]);
    return r;
}

// ---- parsing ------------------------------------------------------------

struct Parser {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at offset " + std::to_string(i) + ": " + why +
                                    " in \"" + std::string(s) + "\"");
    }
    mpz_class integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return mpz_class(std::string(s.substr(start, i - start)));
    }
    int small_int() {
        bool neg = accept('-');
        if (!neg) (void)accept('+');
        mpz_class v = integer();
        if (!v.fits_sint_p()) fail("exponent out of range");
        int r = static_cast<int>(v.get_si());
        return neg ? -r : r;
    }
    // [digits[/digits]] — a rational literal
    Rational rational_literal() {
        mpz_class n = integer();
        if (accept('/')) {
            mpz_class d = integer();
            if (d == 0) fail("zero denominator in rational literal");
            Rational q(n, d);
            q.canonicalize();
            return q;
        }
        return Rational(n);
    }
    // term := number ['*' tpart] | tpart ;  tpart := 't' ['^' int]
    // Returns (coefficient, exponent).
    std::pair<Rational, int> term() {
        skip_ws();
        Rational c(1);
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            c = rational_literal();
            have_coeff = true;
        }
        int exp = 0;
        bool have_t = false;
        size_t save = i;
        if (have_coeff && !accept('*')) {
            // allow juxtaposition like "2t^3"
            i = save;
        }
        skip_ws();
        if (i < s.size() && s[i] == 't') {
            ++i;
            have_t = true;
            exp = 1;
            if (accept('^')) exp = small_int();
        }
        if (!have_coeff && !have_t) fail("expected term");
        return {c, have_t ? exp : 0};
    }
};

}  // namespace

// ---- LaurentPoly ----------------------------------------------------------

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
    LaurentPoly p;
    if (c != 0) p.terms_[exp] = c;
    return p;
}

LaurentPoly LaurentPoly::t(int exp) { return monomial(Rational(1), exp); }

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::lowest_exp() const {
    if (is_zero()) throw std::logic_error("lowest_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::highest_exp() const {
    if (is_zero()) throw std::logic_error("highest_exp of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exp, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::invert_t() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int d) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, co] : terms_) r.terms_[e] = co * c;
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    Parser p{text};
    LaurentPoly r;
    bool neg = false;
    if (p.accept('-')) neg = true;
    else (void)p.accept('+');
    while (true) {
        auto [c, e] = p.term();
        r.add_term(e, neg ? -c : c);
        if (p.eof()) break;
        if (p.accept('+')) neg = false;
        else if (p.accept('-')) neg = true;
        else p.fail("expected '+' or '-'");
    }
    return r;
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Dense da = to_dense(a, a.lowest_exp());
    Dense db = to_dense(b, b.lowest_exp());
    Dense g = dense_gcd(da, db);
    if (!g.empty() && g.back() != 1) {
        Rational inv = 1 / g.back();
        for (auto& c : g) c *= inv;
    }
    return from_dense(g, 0);
}

// ---- RatFunc --------------------------------------------------------------

RatFunc::RatFunc(const Rational& c) : num_(c), den_(LaurentPoly(1L)) {}
RatFunc::RatFunc(long c) : num_(c), den_(LaurentPoly(1L)) {}
RatFunc::RatFunc(const LaurentPoly& p) : num_(p), den_(LaurentPoly(1L)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    canonicalize();
}

RatFunc RatFunc::t(int exp) { return RatFunc(LaurentPoly::t(exp)); }

RatFunc RatFunc::parse(std::string_view text) { return RatFunc(LaurentPoly::parse(text)); }

bool RatFunc::is_one() const { return num_.is_one() && den_.is_one(); }

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1L);
        return;
    }
    if (den_.is_one()) return;
    int e = num_.lowest_exp(), f = den_.lowest_exp();
    int shift = e - f;
    // monomial denominator: only the t-power and the constant move
    if (den_.terms().size() == 1) {
        Rational inv = 1 / den_.terms().begin()->second;
        num_ = num_.shifted(-f).scaled(inv);
        den_ = LaurentPoly(1L);
        return;
    }
    Dense n0 = to_dense(num_, e);
    Dense d0 = to_dense(den_, f);
    if (n0.size() > 1) {
        Dense g = dense_gcd(n0, d0);
        if (g.size() > 1) {
            auto [qn, rn] = divmod(n0, g);
            auto [qd, rd] = divmod(d0, g);
            if (!rn.empty() || !rd.empty()) throw std::logic_error("gcd does not divide");
            n0 = std::move(qn);
            d0 = std::move(qd);
        }
    }
    Rational lead = d0.back();
    if (lead != 1) {
        Rational inv = 1 / lead;
        for (auto& c : n0) c *= inv;
        for (auto& c : d0) c *= inv;
    }
    num_ = from_dense(n0, shift);
    den_ = from_dense(d0, 0);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero() || den_.is_one()) {
            if (num_.is_zero()) den_ = LaurentPoly(1L);
            return *this;
        }
        canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
        if (num_.is_zero() || den_.is_one()) {
            if (num_.is_zero()) den_ = LaurentPoly(1L);
            return *this;
        }
        canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    canonicalize();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::invalid_argument("RatFunc: inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
}

RatFunc RatFunc::invert_t() const {
    RatFunc r;
    r.num_ = num_.invert_t();
    r.den_ = den_.invert_t();
    r.canonicalize();
    return r;
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
    if (den_.is_one()) return num_;
    return std::nullopt;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

bool equal_cross(const RatFunc& a, const RatFunc& b) {
    return a.num() * b.den() == b.num() * a.den();
}

}  // namespace skein
