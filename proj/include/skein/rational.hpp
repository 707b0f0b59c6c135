// Exact arithmetic in Q(t): Laurent polynomials in t over the rationals,
// and rational functions kept in canonical reduced form. Everything in the
// project stores its coefficients in these types; there is no floating
// point anywhere.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace skein {

using Rational = mpq_class;

/// A finite sum of c * t^k with k any integer and c a nonzero rational.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    explicit LaurentPoly(long c);

    static LaurentPoly monomial(const Rational& c, int exp);
    static LaurentPoly t(int exp = 1);

    /// Parses the signed monomial list format, e.g. "-t^-6 + t^2",
    /// "2*t^3 - 1/2", "t". Throws std::invalid_argument on bad input.
    static LaurentPoly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int exp) const;
    int lowest_exp() const;   // requires nonzero
    int highest_exp() const;  // requires nonzero

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly invert_t() const;      // t -> t^-1 (every exponent negated)
    LaurentPoly shifted(int d) const;  // multiply by t^d
    LaurentPoly scaled(const Rational& c) const;

    /// Signed monomial list, exponents in decreasing order.
    std::string str() const;

private:
    void add_term(int exp, const Rational& c);
    std::map<int, Rational> terms_;  // exponent -> nonzero coefficient
};

/// Monic gcd over Q[t] of the polynomial parts (inputs shifted so their
/// lowest exponent is 0). Constant 1 when coprime.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// num/den in canonical form: den is an ordinary polynomial (lowest
/// exponent 0) with leading coefficient 1, and shares no factor with num.
/// The numerator absorbs the t-power, so it may have negative exponents.
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly(1L)) {}
    RatFunc(const Rational& c);  // NOLINT: implicit by design
    RatFunc(long c);             // NOLINT
    explicit RatFunc(const LaurentPoly& p);
    RatFunc(LaurentPoly num, LaurentPoly den);  // throws on zero denominator

    static RatFunc t(int exp = 1);
    /// Parses a Laurent polynomial (same grammar as LaurentPoly::parse).
    static RatFunc parse(std::string_view text);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;

    /// Canonical forms are unique, so representation equality is equality.
    bool operator==(const RatFunc&) const = default;

    RatFunc inverse() const;   // throws on zero
    RatFunc invert_t() const;  // the substitution t -> t^-1

    /// The Laurent polynomial when the canonical denominator is 1.
    std::optional<LaurentPoly> as_laurent() const;

    std::string str() const;

private:
    void canonicalize();
    LaurentPoly num_, den_;
};

/// Equality by cross-multiplication; agrees with operator== (tested).
bool equal_cross(const RatFunc& a, const RatFunc& b);

}  // namespace skein
