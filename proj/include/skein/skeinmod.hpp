// The Kauffman bracket skein module of the figure-eight knot complement in
// the basis {x^n, x^n Y, x^n Z}, the left action of the boundary torus
// algebra on it, the peripheral map phi, and exact preimage solving.
//
// The action is generated by two closed-form families (encoded axioms;
// their mutual coherence with the product-to-sum formula is what the
// module-coherence property test certifies):
//
//   t^{-q}(1,q) . 1 = (t^2 S_{q+2} - t^-2 S_{q-2}) Y
//                   + (t^2 S_q     - t^-2 S_{q-4}) Z
//                   + (t^2 S_{q+2} - t^-2 S_{q-4})
//
//   (1,q) . Y = -t^2  phi((1,q+2)) + t^{q+2} T_{q+2}(x) Y + t^{q+2} T_q(x)
//   (1,q) . Z = -t^-2 phi((1,q-2)) + t^{q-2} T_{q-2}(x) Z + t^{q-2} T_q(x)
//
// together with the reductions
//   (0,q) . s          = T_q(x) s
//   (1,q) . x^n B      = t (1,q+1) . x^{n-1} B + t^-1 (1,q-1) . x^{n-1} B
//   (p,q) . s (p >= 2) = t^-q (1,0) . ((p-1,q) . s) - t^{-2q} (p-2,q) . s
#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "skein/torus.hpp"
#include "skein/xpoly.hpp"

namespace skein {

enum class Channel { Unit = 0, Y = 1, Z = 2 };

class SkeinElement {
public:
    SkeinElement() = default;
    SkeinElement(XPoly unit_part, XPoly y_part, XPoly z_part);

    static SkeinElement one();
    static SkeinElement basis(int n, Channel b);  // x^n B

    const XPoly& unit_part() const { return unit_; }
    const XPoly& y_part() const { return y_; }
    const XPoly& z_part() const { return z_; }
    const XPoly& part(Channel b) const;

    bool is_zero() const { return unit_.is_zero() && y_.is_zero() && z_.is_zero(); }

    SkeinElement& operator+=(const SkeinElement& o);
    SkeinElement& operator-=(const SkeinElement& o);
    friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
    friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
    SkeinElement operator-() const;
    bool operator==(const SkeinElement&) const = default;

    SkeinElement scaled(const RatFunc& c) const;
    SkeinElement times_poly(const XPoly& p) const;  // multiply every channel

    /// Mirror: swap the Y and Z channels, t -> t^-1 in every coefficient.
    SkeinElement mirror() const;

    /// "A(x) + (B(x))*Y + (C(x))*Z"
    std::string str() const;

private:
    XPoly unit_, y_, z_;
};

/// The two stored rewrite constants expressing y^2 and z^2 in the
/// {1, Y, Z} presentation (y = t^-2 (Y-1), z = t^2 (Z-1)). Not used by the
/// engine; kept as data with the mirror-pairing test.
struct YZReductionRules {
    SkeinElement y_squared;
    SkeinElement z_squared;
};
YZReductionRules yz_reduction_rules();

/// Left-module action engine with a pure-function memo cache keyed by
/// (p, q, n, channel). Safe for concurrent use; inserts are idempotent.
class ActionEngine {
public:
    SkeinElement act(const TorusElement& u, const SkeinElement& s);
    SkeinElement phi(const TorusElement& u);  // act on the empty skein

private:
    SkeinElement basis_action(int p, int q, int n, Channel b);
    SkeinElement act_pair(int p, int q, const SkeinElement& s);
    std::optional<SkeinElement> memo_get(const std::tuple<int, int, int, int>& k);
    void memo_put(const std::tuple<int, int, int, int>& k, const SkeinElement& v);

    std::map<std::tuple<int, int, int, int>, SkeinElement> memo_;
    std::mutex mu_;
};

/// Shared-engine convenience entry points.
SkeinElement act(const TorusElement& u, const SkeinElement& s);
SkeinElement phi(const TorusElement& u);

struct PreimageWindow {
    int pmax;
    int qmin, qmax;
};

struct PreimageResult {
    TorusElement value;
    bool unique;
};

/// Finds v supported on the scalar, (0,q) with q in the window, and (p,q)
/// with 1 <= p <= pmax, q in the window, such that phi(v) = target. Empty
/// when no such v exists; free directions (when the window meets the
/// kernel) are pinned to zero deterministically.
std::optional<PreimageResult> solve_preimage_full(const SkeinElement& target, PreimageWindow w);
std::optional<TorusElement> solve_preimage(const SkeinElement& target, int pmax, int qmin,
                                           int qmax);

}  // namespace skein
