#include "skein/qplane.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein {

QPlaneElement QPlaneElement::one() { return monomial(RatFunc(1L), 0, 0); }

QPlaneElement QPlaneElement::monomial(const RatFunc& c, int l, int m) {
    QPlaneElement e;
    e.add(l, m, c);
    return e;
}

void QPlaneElement::add(int l, int m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(l, m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFunc QPlaneElement::coeff(int l, int m) const {
    auto it = terms_.find({l, m});
    return it == terms_.end() ? RatFunc() : it->second;
}

QPlaneElement& QPlaneElement::operator+=(const QPlaneElement& o) {
    for (const auto& [lm, c] : o.terms_) add(lm.first, lm.second, c);
    return *this;
}

QPlaneElement& QPlaneElement::operator-=(const QPlaneElement& o) {
    for (const auto& [lm, c] : o.terms_) add(lm.first, lm.second, -c);
    return *this;
}

QPlaneElement operator*(const QPlaneElement& a, const QPlaneElement& b) {
    QPlaneElement r;
    for (const auto& [ab, cu] : a.terms_) {
        auto [ea, eb] = ab;
        for (const auto& [cd, cv] : b.terms_) {
            auto [ec, ed] = cd;
            // (l^a m^b)(l^c m^d) = t^{-2bc} l^{a+c} m^{b+d}
            r.add(ea + ec, eb + ed, cu * cv * RatFunc::t(-2 * eb * ec));
        }
    }
    return r;
}

QPlaneElement QPlaneElement::operator-() const {
    QPlaneElement r;
    for (const auto& [lm, c] : terms_) r.terms_[lm] = -c;
    return r;
}

QPlaneElement QPlaneElement::scaled(const RatFunc& c) const {
    QPlaneElement r;
    if (c.is_zero()) return r;
    for (const auto& [lm, co] : terms_) r.terms_[lm] = co * c;
    return r;
}

QPlaneElement QPlaneElement::mirror() const {
    QPlaneElement r;
    for (const auto& [lm, c] : terms_) r.add(lm.first, -lm.second, c.invert_t());
    return r;
}

bool QPlaneElement::in_quantum_plane() const {
    for (const auto& [lm, c] : terms_)
        if (lm.first < 0 || lm.second < 0) return false;
    return true;
}

int QPlaneElement::min_l() const {
    if (is_zero()) throw std::logic_error("min_l of zero element");
    int m = terms_.begin()->first.first;
    for (const auto& [lm, c] : terms_) m = std::min(m, lm.first);
    return m;
}

int QPlaneElement::min_m() const {
    if (is_zero()) throw std::logic_error("min_m of zero element");
    int m = terms_.begin()->first.second;
    for (const auto& [lm, c] : terms_) m = std::min(m, lm.second);
    return m;
}

std::string QPlaneElement::str() const {
    if (is_zero()) return "0";
    // descending in l, then in m
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [lm, c] = *it;
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
        std::ostringstream b;
        auto [a, m] = lm;
        if (a != 0) {
            b << "l";
            if (a != 1) b << "^" << a;
        }
        if (m != 0) {
            if (a != 0) b << " ";
            b << "m";
            if (m != 1) b << "^" << m;
        }
        std::string bt = b.str();
        bool multi = cs.find(' ') != std::string::npos;
        if (bt.empty()) {
            os << (multi ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << bt;
        } else if (multi) {
            os << "(" << cs << ")*" << bt;
        } else {
            os << cs << "*" << bt;
        }
    }
    return os.str();
}

QPlaneElement from_torus(const TorusElement& u) {
    QPlaneElement r;
    r.add(0, 0, u.scalar_part());
    for (const auto& [pq, c] : u.terms()) {
        auto [p, q] = pq;
        RatFunc w = c * RatFunc::t(-p * q);
        r.add(p, q, w);
        r.add(-p, -q, w);
    }
    return r;
}

ClearedElement clear_to_plane(const QPlaneElement& u) {
    if (u.is_zero()) throw std::invalid_argument("clear_to_plane: zero element");
    int a = std::max(0, -u.min_l());
    int b = std::max(0, -u.min_m());
    ClearedElement out;
    out.l_power = a;
    out.m_power = b;
    out.elem = QPlaneElement::monomial(RatFunc(1L), a, b) * u;
    return out;
}

}  // namespace skein
