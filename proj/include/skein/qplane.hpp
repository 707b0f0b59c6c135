// Noncommutative Laurent polynomials in l, m with lm = t^2 ml, written in
// the normal order "l-power first, then m-power":
//
//   (l^a m^b)(l^c m^d) = t^{-2bc} l^{a+c} m^{b+d}.
//
// Includes the substitution from the torus algebra,
// (p,q) -> t^{-pq} (l^p m^q + l^-p m^-q), and left clearing to the
// quantum plane (all exponents nonnegative).
#pragma once

#include <map>
#include <string>
#include <utility>

#include "skein/rational.hpp"
#include "skein/torus.hpp"

namespace skein {

class QPlaneElement {
public:
    QPlaneElement() = default;

    static QPlaneElement one();
    static QPlaneElement monomial(const RatFunc& c, int l, int m);

    void add(int l, int m, const RatFunc& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(int l, int m) const;

    QPlaneElement& operator+=(const QPlaneElement& o);
    QPlaneElement& operator-=(const QPlaneElement& o);
    friend QPlaneElement operator+(QPlaneElement a, const QPlaneElement& b) { return a += b; }
    friend QPlaneElement operator-(QPlaneElement a, const QPlaneElement& b) { return a -= b; }
    friend QPlaneElement operator*(const QPlaneElement& a, const QPlaneElement& b);
    QPlaneElement operator-() const;
    bool operator==(const QPlaneElement&) const = default;

    QPlaneElement scaled(const RatFunc& c) const;

    /// t -> t^-1 in coefficients, m-exponent negated.
    QPlaneElement mirror() const;

    bool in_quantum_plane() const;  // every exponent >= 0
    int min_l() const;              // requires nonzero
    int min_m() const;

    /// "c * l^a m^b", terms sorted by (a,b) descending in a, then b.
    std::string str() const;

private:
    std::map<std::pair<int, int>, RatFunc> terms_;  // (l-exp, m-exp) -> coeff
};

QPlaneElement from_torus(const TorusElement& u);

struct ClearedElement {
    QPlaneElement elem;
    int l_power = 0;  // the left multiplier is l^l_power m^m_power
    int m_power = 0;
};

/// Left-multiplies by the minimal monomial l^A m^B putting u in the
/// quantum plane (A = max(0, -min l-exp), B = max(0, -min m-exp)).
/// Throws on zero input.
ClearedElement clear_to_plane(const QPlaneElement& u);

}  // namespace skein
