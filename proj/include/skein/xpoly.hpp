// Polynomials in the meridian variable x with Q(t) coefficients, and the
// two Chebyshev families T_n, S_n used throughout.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

class XPoly {
public:
    XPoly() = default;
    explicit XPoly(const RatFunc& c);
    static XPoly x();
    static XPoly monomial(const RatFunc& c, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const;  // requires nonzero
    RatFunc coeff(int deg) const;
    const std::map<int, RatFunc>& terms() const { return c_; }

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly operator-() const;
    bool operator==(const XPoly&) const = default;

    XPoly scaled(const RatFunc& c) const;
    XPoly invert_t() const;  // t -> t^-1 in every coefficient

    std::string str() const;  // terms in decreasing degree

private:
    void add_term(int deg, const RatFunc& c);
    std::map<int, RatFunc> c_;  // degree -> nonzero coefficient
};

enum class ChebKind { T, S };

/// T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1}; S_0 = 1, S_1 = x with the
/// same recurrence. Negative indices via T_{-n} = T_n and S_{-n} = -S_{n-2}
/// (so S_{-1} = 0).
XPoly chebyshev(ChebKind kind, int n);

/// The cached table of one family; entries() holds indices 0..max built so
/// far. All coefficients are integers (tested, not enforced by type).
class ChebyshevTable {
public:
    explicit ChebyshevTable(ChebKind kind) : kind_(kind) {}
    ChebKind kind() const { return kind_; }
    XPoly at(int n);  // any integer index
    const std::vector<XPoly>& entries() const { return entries_; }

private:
    ChebKind kind_;
    std::vector<XPoly> entries_;
};

}  // namespace skein
