// The Kauffman bracket skein algebra of the thickened torus in the basis
// (p,q), p >= 0, with product-to-sum multiplication
//
//   (p,q) * (r,s) = t^{ps-qr} (p+r, q+s) + t^{-(ps-qr)} (p-r, q-s),
//
// the exponent being the signed determinant. The empty-skein (unit)
// coefficient is stored separately; (0,0) is not a stored pair, it
// normalizes to twice the unit.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "skein/rational.hpp"
#include "skein/xpoly.hpp"

namespace skein {

struct CanonicalPair {
    bool unit_marker;  // true: the input was (0,0), meaning 2 * unit
    int p, q;
};

/// (p,q) ~ (-p,-q); canonical representatives have p >= 1, or p = 0 with
/// q >= 1. (0,0) is flagged as the unit marker.
CanonicalPair canonical_pair(int p, int q);

class TorusElement {
public:
    TorusElement() = default;

    static TorusElement unit();
    static TorusElement scalar(const RatFunc& c);
    static TorusElement basis(int p, int q);

    /// Accumulates c * (p,q), canonicalizing the pair ((0,0) feeds the
    /// scalar channel with weight 2).
    void add(int p, int q, const RatFunc& c);
    void add_scalar(const RatFunc& c) { scalar_ += c; }

    bool is_zero() const { return scalar_.is_zero() && terms_.empty(); }
    const RatFunc& scalar_part() const { return scalar_; }
    const std::map<std::pair<int, int>, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(int p, int q) const;

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    /// Product-to-sum multiplication, extended bilinearly.
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
    TorusElement operator-() const;
    bool operator==(const TorusElement&) const = default;

    TorusElement scaled(const RatFunc& c) const;

    /// The mirror: (p,q) -> (p,-q) recanonicalized, t -> t^-1 in every
    /// coefficient (including the scalar).
    TorusElement mirror() const;

    int max_p() const;      // 0 when only the scalar is present
    int max_abs_q() const;  // 0 when only the scalar is present

    /// "c * (p,q)" summands, scalar first, pairs in (p,q) order.
    std::string str() const;

    /// Accepts the same shape: terms `coeff*(p,q)`, `(p,q)`, or bare
    /// Laurent coefficients for the scalar; multi-term coefficients are
    /// parenthesized, e.g. "(t^13 + t)*(1,-3) - t^-1*(1,-5) + 2".
    static TorusElement parse(std::string_view text);

private:
    RatFunc scalar_;
    std::map<std::pair<int, int>, RatFunc> terms_;
};

/// (0,1)^n expanded in the basis by repeated product-to-sum.
TorusElement meridian_power(int n);

}  // namespace skein
