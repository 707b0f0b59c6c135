#include "skein/xpoly.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace skein {

XPoly::XPoly(const RatFunc& c) {
    if (!c.is_zero()) c_[0] = c;
}

XPoly XPoly::x() { return monomial(RatFunc(1L), 1); }

XPoly XPoly::monomial(const RatFunc& c, int deg) {
    if (deg < 0) throw std::invalid_argument("XPoly: negative degree");
    XPoly p;
    if (!c.is_zero()) p.c_[deg] = c;
    return p;
}

int XPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of zero polynomial");
    return c_.rbegin()->first;
}

RatFunc XPoly::coeff(int deg) const {
    auto it = c_.find(deg);
    return it == c_.end() ? RatFunc() : it->second;
}

void XPoly::add_term(int deg, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.emplace(deg, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

XPoly& XPoly::operator+=(const XPoly& o) {
    for (const auto& [d, c] : o.c_) add_term(d, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    for (const auto& [d, c] : o.c_) add_term(d, -c);
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r;
    for (const auto& [da, ca] : a.c_)
        for (const auto& [db, cb] : b.c_) r.add_term(da + db, ca * cb);
    return r;
}

XPoly XPoly::operator-() const {
    XPoly r;
    for (const auto& [d, c] : c_) r.c_[d] = -c;
    return r;
}

XPoly XPoly::scaled(const RatFunc& s) const {
    XPoly r;
    if (s.is_zero()) return r;
    for (const auto& [d, c] : c_) r.c_[d] = c * s;
    return r;
}

XPoly XPoly::invert_t() const {
    XPoly r;
    for (const auto& [d, c] : c_) r.c_[d] = c.invert_t();
    return r;
}

std::string XPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [d, c] = *it;
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
        if (d == 0) {
            os << (multi ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs == "1") {
            // bare power of x
        } else if (multi) {
            os << "(" << cs << ")*";
        } else {
            os << cs << "*";
        }
        os << "x";
        if (d != 1) os << "^" << d;
    }
    return os.str();
}

XPoly ChebyshevTable::at(int n) {
    if (n < 0) {
        // reflection: T_{-n} = T_n, S_{-n} = -S_{n-2} (S_{-1} = 0)
        if (kind_ == ChebKind::T) return at(-n);
        if (n == -1) return XPoly();
        return -at(-n - 2);
    }
    if (entries_.empty()) {
        entries_.push_back(XPoly(RatFunc(kind_ == ChebKind::T ? 2L : 1L)));
        entries_.push_back(XPoly::x());
    }
    while (static_cast<int>(entries_.size()) <= n) {
        size_t k = entries_.size();
        entries_.push_back(XPoly::x() * entries_[k - 1] - entries_[k - 2]);
    }
    return entries_[static_cast<size_t>(n)];
}

XPoly chebyshev(ChebKind kind, int n) {
    static std::mutex mu;
    static ChebyshevTable t_table(ChebKind::T);
    static ChebyshevTable s_table(ChebKind::S);
    std::scoped_lock lock(mu);
    return (kind == ChebKind::T ? t_table : s_table).at(n);
}

}  // namespace skein
