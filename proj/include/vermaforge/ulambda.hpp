#pragma once

// The associative algebra on C[h] twisted by a ladder pair e, f with
//   h e = e (h + 2t),  h f = f (h - 2t),  e f = T1(h),  f e = T2(h),
//   T1(h) = (t h - h^2/2 + c) / 2,        T2(h) = T1(h) - t h.
// At t = 1 and c = lambda(lambda+2)/2 this is the quotient of the enveloping
// algebra of sl2 by the Casimir value; with t symbolic, (x y - y x)/t at
// t = 0 is the Poisson bracket of the leaf {2 e f + h^2/2 = c}.
//
// Normal form: powers of e or f on the LEFT of polynomials in h. The
// conversion from the opposite convention is centralized in from_right_form.

#include "vermaforge/poly.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace vermaforge::ulambda {

using exact::Poly;
using exact::PolyRing;
using exact::Rational;
using exact::RingPtr;

struct UParams {
    RingPtr ring;   // contains "h", plus "t" when the deformation is symbolic
    Poly t;         // constant 1 or the variable t
    Poly c;         // central constant (lambda(lambda+2)/2 for the quadric leaf)
    Poly T1, T2;    // in ring
    bool t_symbolic = false;
    std::optional<Rational> lambda;

    Poly hvar() const { return Poly::variable(ring, "h"); }
};

namespace detail {

inline UParams make_params(RingPtr ring, Poly tval, Poly cval, bool tsym,
                           std::optional<Rational> lambda) {
    UParams p;
    p.ring = ring;
    p.t = std::move(tval);
    p.c = std::move(cval);
    p.t_symbolic = tsym;
    p.lambda = std::move(lambda);
    Poly h = p.hvar();
    Rational half(1, 2);
    p.T1 = (p.t * h - h * h * half + p.c) * half;
    p.T2 = p.T1 - p.t * h;
    return p;
}

}  // namespace detail

// t = 1 algebra for a fixed rational lambda. Extra symbols widen the
// coefficient ring (used by the induced-module engine).
inline UParams u_lambda(const Rational& lambda, std::vector<std::string> extra = {}) {
    std::vector<std::string> vars{"h"};
    vars.insert(vars.end(), extra.begin(), extra.end());
    RingPtr ring = PolyRing::make(vars);
    Rational c = lambda * (lambda + Rational(2)) / Rational(2);
    return detail::make_params(ring, Poly::constant(ring, Rational(1)),
                               Poly::constant(ring, c), false, lambda);
}

// Symbolic t with leaf constant c = lambda(lambda+2)/2 (or 0 for the cone).
inline UParams u_deformed(const Rational& leaf_constant, std::vector<std::string> extra = {},
                          std::optional<Rational> lambda = {}) {
    std::vector<std::string> vars{"h", "t"};
    vars.insert(vars.end(), extra.begin(), extra.end());
    RingPtr ring = PolyRing::make(vars);
    return detail::make_params(ring, Poly::variable(ring, "t"),
                               Poly::constant(ring, leaf_constant), true, lambda);
}

// T1 has roots 1 +- (lambda+1); they differ by an even integer exactly for
// integer lambda, which is the degenerate case rejected by the band model.
inline bool lambda_is_degenerate(const Rational& lambda) { return lambda.is_integer(); }

class UElement {
public:
    std::map<int, Poly> comp;  // degree -> coefficient polynomial in h

    bool is_zero() const { return comp.empty(); }

    void add(int deg, const Poly& p) {
        if (p.is_zero()) return;
        auto it = comp.find(deg);
        if (it == comp.end()) {
            comp.emplace(deg, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) comp.erase(it);
        }
    }

    UElement& operator+=(const UElement& o) {
        for (const auto& [d, p] : o.comp) add(d, p);
        return *this;
    }
    UElement& operator-=(const UElement& o) {
        for (const auto& [d, p] : o.comp) add(d, -p);
        return *this;
    }
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    UElement operator-() const {
        UElement r;
        for (const auto& [d, p] : comp) r.comp[d] = -p;
        return r;
    }
    UElement& operator*=(const Poly& s) {
        if (s.is_zero()) {
            comp.clear();
            return *this;
        }
        for (auto& [d, p] : comp) p = p * s;
        return *this;
    }

    friend bool operator==(const UElement& a, const UElement& b) { return a.comp == b.comp; }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

    std::string to_string() const {
        if (comp.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [d, p] : comp) {
            if (!first) out << " + ";
            first = false;
            if (d > 0) out << "e^" << d << "*";
            if (d < 0) out << "f^" << -d << "*";
            out << "(" << p.to_string() << ")";
        }
        return out.str();
    }
};

inline UElement u_zero() { return UElement(); }

inline UElement u_poly(const Poly& p) {
    UElement r;
    r.add(0, p);
    return r;
}

inline UElement u_one(const UParams& p) { return u_poly(Poly::constant(p.ring, Rational(1))); }
inline UElement u_h(const UParams& p) { return u_poly(p.hvar()); }

inline UElement u_e(const UParams& p, int k = 1, std::optional<Poly> coeff = {}) {
    UElement r;
    r.add(k, coeff ? *coeff : Poly::constant(p.ring, Rational(1)));
    return r;
}
inline UElement u_f(const UParams& p, int k = 1, std::optional<Poly> coeff = {}) {
    UElement r;
    r.add(-k, coeff ? *coeff : Poly::constant(p.ring, Rational(1)));
    return r;
}

// p(h) -> p(h + steps * t).
inline Poly shift_h(const UParams& par, const Poly& p, long steps) {
    if (steps == 0 || p.degree("h") <= 0) return p;
    Poly repl = par.hvar() + par.t * Rational(steps);
    return p.subst("h", repl);
}

// Paper-style generators carry polynomials on the other side of the ladder
// element: p(h) * f^k = f^k * p(h - 2 k t) and p(h) * e^k = e^k * p(h + 2 k t).
inline UElement from_right_form(const UParams& par, int deg, const Poly& p) {
    UElement r;
    r.add(deg, shift_h(par, p, 2L * deg));
    return r;
}

namespace detail {

// Product of the basis elements g_{d1} p1 * g_{d2} p2 in normal form, where
// g_d is e^d (d > 0), 1 (d = 0) or f^{-d} (d < 0).
inline UElement term_product(const UParams& par, int d1, const Poly& p1, int d2, const Poly& p2) {
    UElement out;
    if (d1 >= 0 && d2 >= 0) {
        out.add(d1 + d2, shift_h(par, p1, 2L * d2) * p2);
        return out;
    }
    if (d1 <= 0 && d2 <= 0) {
        out.add(d1 + d2, shift_h(par, p1, 2L * d2) * p2);
        return out;
    }
    if (d1 > 0) {
        // e^a (f^b after moving p1 across): e^a f^b = rem * prod T1(h - 2 s t)
        long a = d1, b = -d2;
        long m = std::min(a, b);
        Poly acc = shift_h(par, p1, 2L * d2) * p2;
        for (long s = b - m; s <= b - 1; ++s) acc = acc * shift_h(par, par.T1, -2L * s);
        out.add(static_cast<int>(a - b), acc);
        return out;
    }
    // f^a e^b = rem * prod T2(h + 2 s t)
    long a = -d1, b = d2;
    long m = std::min(a, b);
    Poly acc = shift_h(par, p1, 2L * d2) * p2;
    for (long s = b - m; s <= b - 1; ++s) acc = acc * shift_h(par, par.T2, 2L * s);
    out.add(static_cast<int>(b - a), acc);
    return out;
}

}  // namespace detail

inline UElement u_product(const UParams& par, const UElement& x, const UElement& y) {
    UElement out;
    for (const auto& [d1, p1] : x.comp)
        for (const auto& [d2, p2] : y.comp) out += detail::term_product(par, d1, p1, d2, p2);
    return out;
}

inline UElement u_bracket(const UParams& par, const UElement& x, const UElement& y) {
    return u_product(par, x, y) - u_product(par, y, x);
}

// (x y - y x) / t with symbolic t; exact by construction, a division failure
// signals an implementation bug.
inline UElement lie_bracket_div_t(const UParams& par, const UElement& x, const UElement& y) {
    if (!par.t_symbolic) throw std::domain_error("lie_bracket_div_t: t must be symbolic");
    UElement b = u_bracket(par, x, y);
    UElement out;
    for (const auto& [d, p] : b.comp) out.add(d, p.divexact(par.t));
    return out;
}

// Poisson bracket of the degenerate leaf: divide by t, then set t = 0.
inline UElement poisson_bracket(const UParams& par, const UElement& x, const UElement& y) {
    UElement b = lie_bracket_div_t(par, x, y);
    UElement out;
    for (const auto& [d, p] : b.comp) out.add(d, p.eval({{"t", Rational(0)}}));
    return out;
}

// The antiautomorphism swapping e and f and fixing h: on normal forms,
// sigma(e^k p(h)) = f^k p(h - 2 k t) and sigma(f^k p(h)) = e^k p(h + 2 k t).
inline UElement u_sigma(const UParams& par, const UElement& x) {
    UElement out;
    for (const auto& [d, p] : x.comp) out.add(-d, shift_h(par, p, -2L * d));
    return out;
}

}  // namespace vermaforge::ulambda
