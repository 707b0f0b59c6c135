#include "skein/skeinmod.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "skein/linsolve.hpp"

namespace skein {

SkeinElement::SkeinElement(XPoly unit_part, XPoly y_part, XPoly z_part)
    : unit_(std::move(unit_part)), y_(std::move(y_part)), z_(std::move(z_part)) {}

SkeinElement SkeinElement::one() { return SkeinElement(XPoly(RatFunc(1L)), XPoly(), XPoly()); }

SkeinElement SkeinElement::basis(int n, Channel b) {
    XPoly p = XPoly::monomial(RatFunc(1L), n);
    switch (b) {
        case Channel::Unit: return SkeinElement(p, XPoly(), XPoly());
        case Channel::Y: return SkeinElement(XPoly(), p, XPoly());
        case Channel::Z: return SkeinElement(XPoly(), XPoly(), p);
    }
    throw std::logic_error("bad channel");
}

const XPoly& SkeinElement::part(Channel b) const {
    switch (b) {
        case Channel::Unit: return unit_;
        case Channel::Y: return y_;
        case Channel::Z: return z_;
    }
    throw std::logic_error("bad channel");
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& o) {
    unit_ += o.unit_;
    y_ += o.y_;
    z_ += o.z_;
    return *this;
}

SkeinElement& SkeinElement::operator-=(const SkeinElement& o) {
    unit_ -= o.unit_;
    y_ -= o.y_;
    z_ -= o.z_;
    return *this;
}

SkeinElement SkeinElement::operator-() const { return SkeinElement(-unit_, -y_, -z_); }

SkeinElement SkeinElement::scaled(const RatFunc& c) const {
    return SkeinElement(unit_.scaled(c), y_.scaled(c), z_.scaled(c));
}

SkeinElement SkeinElement::times_poly(const XPoly& p) const {
    return SkeinElement(unit_ * p, y_ * p, z_ * p);
}

SkeinElement SkeinElement::mirror() const {
    return SkeinElement(unit_.invert_t(), z_.invert_t(), y_.invert_t());
}

std::string SkeinElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const XPoly& p, const char* name) {
        if (p.is_zero()) return;
        if (!first) os << " + ";
        first = false;
        if (!name) {
            os << p.str();
            return;
        }
        os << "(" << p.str() << ")*" << name;
    };
    emit(unit_, nullptr);
    emit(y_, "Y");
    emit(z_, "Z");
    return os.str();
}

YZReductionRules yz_reduction_rules() {
    // y^2 = -t^-2 x^2 y - t^-6 z - 2 t^-4 x^2 + t^-4 + 1 rewritten through
    // y = t^-2(Y-1), z = t^2(Z-1):
    //   y^2 -> -t^-4 x^2 Y - t^-4 Z + (-t^-4 x^2 + 2 t^-4 + 1)
    YZReductionRules r;
    XPoly x2 = XPoly::monomial(RatFunc(1L), 2);
    r.y_squared = SkeinElement(
        x2.scaled(-RatFunc::t(-4)) + XPoly(RatFunc(LaurentPoly::parse("2*t^-4 + 1"))),
        x2.scaled(-RatFunc::t(-4)), XPoly(-RatFunc::t(-4)));
    r.z_squared = r.y_squared.mirror();
    return r;
}

namespace {

// t^q [ (t^2 S_{q+2} - t^-2 S_{q-2}) Y + (t^2 S_q - t^-2 S_{q-4}) Z
//       + (t^2 S_{q+2} - t^-2 S_{q-4}) ]
SkeinElement closed_form_1q(int q) {
    RatFunc t2 = RatFunc::t(2), tm2 = RatFunc::t(-2);
    XPoly sq2 = chebyshev(ChebKind::S, q + 2);
    XPoly sq = chebyshev(ChebKind::S, q);
    XPoly sqm2 = chebyshev(ChebKind::S, q - 2);
    XPoly sqm4 = chebyshev(ChebKind::S, q - 4);
    SkeinElement e(sq2.scaled(t2) - sqm4.scaled(tm2), sq2.scaled(t2) - sqm2.scaled(tm2),
                   sq.scaled(t2) - sqm4.scaled(tm2));
    return e.scaled(RatFunc::t(q));
}

}  // namespace

std::optional<SkeinElement> ActionEngine::memo_get(const std::tuple<int, int, int, int>& k) {
    std::scoped_lock lock(mu_);
    auto it = memo_.find(k);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

void ActionEngine::memo_put(const std::tuple<int, int, int, int>& k, const SkeinElement& v) {
    std::scoped_lock lock(mu_);
    memo_.emplace(k, v);
}

// Action of (p,q) on the basis skein x^n B.
SkeinElement ActionEngine::basis_action(int p, int q, int n, Channel b) {
    if (p == 0) return SkeinElement::basis(n, b).times_poly(chebyshev(ChebKind::T, q));
    auto key = std::make_tuple(p, q, n, static_cast<int>(b));
    if (auto hit = memo_get(key)) return *hit;

    SkeinElement out;
    if (p == 1 && n > 0) {
        // x^n B = (0,1) . x^{n-1} B and (1,q)*(0,1) = t (1,q+1) + t^-1 (1,q-1)
        out = basis_action(1, q + 1, n - 1, b).scaled(RatFunc::t(1)) +
              basis_action(1, q - 1, n - 1, b).scaled(RatFunc::t(-1));
    } else if (p == 1) {
        switch (b) {
            case Channel::Unit: out = closed_form_1q(q); break;
            case Channel::Y:
                out = basis_action(1, q + 2, 0, Channel::Unit).scaled(-RatFunc::t(2)) +
                      SkeinElement(chebyshev(ChebKind::T, q).scaled(RatFunc::t(q + 2)),
                                   chebyshev(ChebKind::T, q + 2).scaled(RatFunc::t(q + 2)),
                                   XPoly());
                break;
            case Channel::Z:
                out = basis_action(1, q - 2, 0, Channel::Unit).scaled(-RatFunc::t(-2)) +
                      SkeinElement(chebyshev(ChebKind::T, q).scaled(RatFunc::t(q - 2)), XPoly(),
                                   chebyshev(ChebKind::T, q - 2).scaled(RatFunc::t(q - 2)));
                break;
        }
    } else {
        // (p,q) = t^-q (1,0)*(p-1,q) - t^-2q (p-2,q)
        SkeinElement inner = basis_action(p - 1, q, n, b);
        out = act_pair(1, 0, inner).scaled(RatFunc::t(-q)) -
              basis_action(p - 2, q, n, b).scaled(RatFunc::t(-2 * q));
    }
    memo_put(key, out);
    return out;
}

SkeinElement ActionEngine::act_pair(int p, int q, const SkeinElement& s) {
    SkeinElement out;
    for (Channel b : {Channel::Unit, Channel::Y, Channel::Z}) {
        for (const auto& [n, c] : s.part(b).terms())
            out += basis_action(p, q, n, b).scaled(c);
    }
    return out;
}

SkeinElement ActionEngine::act(const TorusElement& u, const SkeinElement& s) {
    SkeinElement out = s.scaled(u.scalar_part());
    for (const auto& [pq, c] : u.terms()) out += act_pair(pq.first, pq.second, s).scaled(c);
    return out;
}

SkeinElement ActionEngine::phi(const TorusElement& u) { return act(u, SkeinElement::one()); }

namespace {
ActionEngine& shared_engine() {
    static ActionEngine engine;
    return engine;
}
}  // namespace

SkeinElement act(const TorusElement& u, const SkeinElement& s) {
    return shared_engine().act(u, s);
}

SkeinElement phi(const TorusElement& u) { return shared_engine().phi(u); }

std::optional<PreimageResult> solve_preimage_full(const SkeinElement& target, PreimageWindow w) {
    if (w.qmin > w.qmax) throw std::invalid_argument("solve_preimage: empty window");

    // unknown order: scalar, (0,q) ascending, (1,q) ascending, (2,q), ...
    std::vector<TorusElement> basis_elems;
    basis_elems.push_back(TorusElement::unit());
    for (int q = std::max(1, w.qmin); q <= w.qmax; ++q)
        basis_elems.push_back(TorusElement::basis(0, q));
    for (int p = 1; p <= w.pmax; ++p)
        for (int q = w.qmin; q <= w.qmax; ++q) basis_elems.push_back(TorusElement::basis(p, q));

    // equations: one per (channel, x-degree) appearing anywhere
    std::vector<SkeinElement> images;
    images.reserve(basis_elems.size());
    for (const auto& e : basis_elems) images.push_back(phi(e));

    std::map<std::pair<int, int>, int> eq_index;  // (channel, degree) -> row
    auto note = [&](const SkeinElement& s) {
        for (Channel b : {Channel::Unit, Channel::Y, Channel::Z})
            for (const auto& [n, c] : s.part(b).terms())
                eq_index.emplace(std::make_pair(static_cast<int>(b), n),
                                 static_cast<int>(eq_index.size()));
    };
    note(target);
    for (const auto& im : images) note(im);

    LinearSystem sys;
    sys.ncols = static_cast<int>(basis_elems.size());
    std::vector<std::map<int, RatFunc>> rows(eq_index.size());
    std::vector<RatFunc> rhs(eq_index.size());
    for (size_t col = 0; col < images.size(); ++col)
        for (Channel b : {Channel::Unit, Channel::Y, Channel::Z})
            for (const auto& [n, c] : images[col].part(b).terms())
                rows[static_cast<size_t>(
                    eq_index.at({static_cast<int>(b), n}))][static_cast<int>(col)] = c;
    for (Channel b : {Channel::Unit, Channel::Y, Channel::Z})
        for (const auto& [n, c] : target.part(b).terms())
            rhs[static_cast<size_t>(eq_index.at({static_cast<int>(b), n}))] = c;
    for (size_t r = 0; r < rows.size(); ++r) sys.add_row(std::move(rows[r]), std::move(rhs[r]));

    auto sol = solve_linear(std::move(sys));
    if (!sol) return std::nullopt;

    PreimageResult out;
    out.unique = sol->unique;
    for (size_t col = 0; col < basis_elems.size(); ++col) {
        if (sol->values[col].is_zero()) continue;
        out.value += basis_elems[col].scaled(sol->values[col]);
    }
    return out;
}

std::optional<TorusElement> solve_preimage(const SkeinElement& target, int pmax, int qmin,
                                           int qmax) {
    auto r = solve_preimage_full(target, PreimageWindow{pmax, qmin, qmax});
    if (!r) return std::nullopt;
    return r->value;
}

}  // namespace skein
