#include "skein/torus.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace skein {

CanonicalPair canonical_pair(int p, int q) {
    if (p == 0 && q == 0) return {true, 0, 0};
    if (p < 0 || (p == 0 && q < 0)) return {false, -p, -q};
    return {false, p, q};
}

TorusElement TorusElement::unit() { return scalar(RatFunc(1L)); }

TorusElement TorusElement::scalar(const RatFunc& c) {
    TorusElement e;
    e.scalar_ = c;
    return e;
}

TorusElement TorusElement::basis(int p, int q) {
    TorusElement e;
    e.add(p, q, RatFunc(1L));
    return e;
}

void TorusElement::add(int p, int q, const RatFunc& c) {
    if (c.is_zero()) return;
    CanonicalPair cp = canonical_pair(p, q);
    if (cp.unit_marker) {
        scalar_ += c * RatFunc(2L);
        return;
    }
    auto key = std::make_pair(cp.p, cp.q);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFunc TorusElement::coeff(int p, int q) const {
    CanonicalPair cp = canonical_pair(p, q);
    if (cp.unit_marker) throw std::invalid_argument("coeff of (0,0); query the scalar");
    auto it = terms_.find({cp.p, cp.q});
    return it == terms_.end() ? RatFunc() : it->second;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    scalar_ += o.scalar_;
    for (const auto& [pq, c] : o.terms_) add(pq.first, pq.second, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    scalar_ -= o.scalar_;
    for (const auto& [pq, c] : o.terms_) add(pq.first, pq.second, -c);
    return *this;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    TorusElement r;
    r.scalar_ = a.scalar_ * b.scalar_;
    for (const auto& [pq, c] : b.terms_) r.add(pq.first, pq.second, a.scalar_ * c);
    for (const auto& [pq, c] : a.terms_) r.add(pq.first, pq.second, b.scalar_ * c);
    for (const auto& [uv, cu] : a.terms_) {
        auto [p, q] = uv;
        for (const auto& [rs, cv] : b.terms_) {
            auto [rr, ss] = rs;
            int det = p * ss - q * rr;
            RatFunc c = cu * cv;
            r.add(p + rr, q + ss, c * RatFunc::t(det));
            r.add(p - rr, q - ss, c * RatFunc::t(-det));
        }
    }
    return r;
}

TorusElement TorusElement::operator-() const {
    TorusElement r;
    r.scalar_ = -scalar_;
    for (const auto& [pq, c] : terms_) r.terms_[pq] = -c;
    return r;
}

TorusElement TorusElement::scaled(const RatFunc& c) const {
    TorusElement r;
    if (c.is_zero()) return r;
    r.scalar_ = scalar_ * c;
    for (const auto& [pq, co] : terms_) r.terms_[pq] = co * c;
    return r;
}

TorusElement TorusElement::mirror() const {
    TorusElement r;
    r.scalar_ = scalar_.invert_t();
    for (const auto& [pq, c] : terms_) r.add(pq.first, -pq.second, c.invert_t());
    return r;
}

int TorusElement::max_p() const {
    int m = 0;
    for (const auto& [pq, c] : terms_) m = std::max(m, pq.first);
    return m;
}

int TorusElement::max_abs_q() const {
    int m = 0;
    for (const auto& [pq, c] : terms_) m = std::max(m, std::abs(pq.second));
    return m;
}

std::string TorusElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const RatFunc& c, const std::string& basis_txt) {
        std::string cs = c.str();
        bool neg = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool multi = cs.find(' ') != std::string::npos;
        if (basis_txt.empty()) {
            os << (multi ? "(" + cs + ")" : cs);
            return;
        }
        if (cs == "1") {
            os << basis_txt;
        } else if (multi) {
            os << "(" << cs << ")*" << basis_txt;
        } else {
            os << cs << "*" << basis_txt;
        }
    };
    if (!scalar_.is_zero()) emit(scalar_, "");
    for (const auto& [pq, c] : terms_) {
        std::ostringstream b;
        b << "(" << pq.first << "," << pq.second << ")";
        emit(c, b.str());
    }
    return os.str();
}

namespace {

struct TorusParser {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
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
        throw std::invalid_argument("torus parse error at offset " + std::to_string(i) + ": " +
                                    why + " in \"" + std::string(s) + "\"");
    }

    // A parenthesized group is either a basis pair "(p,q)" or a
    // coefficient "(laurent)"; look ahead for a comma at depth 1.
    bool paren_is_pair() {
        size_t j = i;  // s[i] == '('
        int depth = 0;
        for (; j < s.size(); ++j) {
            if (s[j] == '(') ++depth;
            else if (s[j] == ')') {
                if (--depth == 0) return false;
            } else if (s[j] == ',' && depth == 1)
                return true;
        }
        fail("unbalanced parentheses");
    }

    int integer_signed() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return std::atoi(std::string(s.substr(start, i - start)).c_str());
    }

    std::pair<int, int> pair_group() {
        if (!accept('(')) fail("expected '('");
        int p = integer_signed();
        if (!accept(',')) fail("expected ','");
        int q = integer_signed();
        if (!accept(')')) fail("expected ')'");
        return {p, q};
    }

    std::string paren_coeff() {
        if (!accept('(')) fail("expected '('");
        size_t start = i;
        int depth = 1;
        for (; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')') {
                if (--depth == 0) break;
            }
        }
        if (depth != 0) fail("unbalanced parentheses");
        std::string inner(s.substr(start, i - start));
        ++i;  // consume ')'
        return inner;
    }

    // A simple (unparenthesized) coefficient monomial: [rational]['*']['t'['^'int]]
    RatFunc simple_coeff() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            while (i < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
                ++i;
        }
        // optional '*' then t-part, or directly the t-part
        size_t after_num = i;
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            size_t save = i;
            ++i;
            skip_ws();
            if (i < s.size() && s[i] == 't') {
                ++i;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                }
            } else {
                i = save;  // '*' belongs to the pair part
            }
        } else if (i < s.size() && s[i] == 't') {
            ++i;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
        } else {
            i = after_num;
        }
        if (i == start) fail("expected coefficient");
        return RatFunc(LaurentPoly::parse(s.substr(start, i - start)));
    }
};

}  // namespace

TorusElement TorusElement::parse(std::string_view text) {
    TorusParser p{text};
    TorusElement out;
    bool neg = false;
    if (p.accept('-')) neg = true;
    else (void)p.accept('+');
    while (true) {
        RatFunc coeff(1L);
        bool have_coeff = false;
        p.skip_ws();
        if (p.i < p.s.size() && p.s[p.i] == '(' && !p.paren_is_pair()) {
            coeff = RatFunc(LaurentPoly::parse(p.paren_coeff()));
            have_coeff = true;
        } else if (p.i < p.s.size() && p.s[p.i] != '(') {
            coeff = p.simple_coeff();
            have_coeff = true;
        }
        if (neg) coeff = -coeff;
        p.skip_ws();
        bool star = p.accept('*');
        p.skip_ws();
        if (p.i < p.s.size() && p.s[p.i] == '(') {
            auto [pp, qq] = p.pair_group();
            out.add(pp, qq, coeff);
        } else {
            if (star || !have_coeff) p.fail("expected basis pair");
            out.add_scalar(coeff);
        }
        if (p.eof()) break;
        if (p.accept('+')) neg = false;
        else if (p.accept('-')) neg = true;
        else p.fail("expected '+' or '-'");
    }
    return out;
}

TorusElement meridian_power(int n) {
    if (n < 0) throw std::invalid_argument("meridian_power: negative exponent");
    TorusElement r = TorusElement::unit();
    TorusElement m = TorusElement::basis(0, 1);
    for (int i = 0; i < n; ++i) r = m * r;
    return r;
}

}  // namespace skein
