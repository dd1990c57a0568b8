#pragma once

// Band realization: bi-infinite matrices restricted to a finite index window
// [-W, W], written as sums of diagonal sequences times powers of the shift
// ladder (e f = f e = 1). gamma_s sends e to (T1(s - 2i))_i * e, fixes f and
// evaluates polynomials in h on the arithmetic progression s - 2i.
//
// The degenerate algebra with one broken ladder bond is modeled by matrix
// units E_{ab} where an e-type unit crossing the bond is the zero element.

#include "vermaforge/poly.hpp"
#include "vermaforge/ulambda.hpp"

#include <map>
#include <vector>

namespace vermaforge::ulambda {

struct WindowOverflow : std::runtime_error {
    WindowOverflow() : std::runtime_error("band window overflow") {}
};

class BandElement {
public:
    explicit BandElement(int window) : w_(window) {
        if (window < 1) throw std::invalid_argument("BandElement: window must be >= 1");
    }

    int window() const { return w_; }
    int lo() const { return -w_; }
    int hi() const { return w_; }

    Rational get(int offset, int i) const {
        auto it = diag_.find(offset);
        if (it == diag_.end()) return Rational(0);
        return it->second.at(static_cast<std::size_t>(i + w_));
    }

    void set(int offset, int i, const Rational& v) {
        if (i < lo() || i > hi()) throw WindowOverflow();
        auto& seq = diag_[offset];
        if (seq.empty()) seq.assign(static_cast<std::size_t>(2 * w_ + 1), Rational(0));
        seq[static_cast<std::size_t>(i + w_)] = v;
    }

    const std::map<int, std::vector<Rational>>& diagonals() const { return diag_; }

    BandElement& operator+=(const BandElement& o) {
        check(o);
        for (const auto& [d, seq] : o.diag_)
            for (int i = lo(); i <= hi(); ++i) {
                Rational v = get(d, i) + seq[static_cast<std::size_t>(i + w_)];
                set(d, i, v);
            }
        prune();
        return *this;
    }
    BandElement& operator-=(const BandElement& o) {
        check(o);
        for (const auto& [d, seq] : o.diag_)
            for (int i = lo(); i <= hi(); ++i) {
                Rational v = get(d, i) - seq[static_cast<std::size_t>(i + w_)];
                set(d, i, v);
            }
        prune();
        return *this;
    }
    friend BandElement operator+(BandElement a, const BandElement& b) { return a += b; }
    friend BandElement operator-(BandElement a, const BandElement& b) { return a -= b; }

    // (S g^d)(S' g^d') = S . shift(S') g^{d+d'}, shift consulting index i + d.
    friend BandElement operator*(const BandElement& a, const BandElement& b) {
        a.check(b);
        BandElement r(a.w_);
        for (const auto& [d1, s1] : a.diag_) {
            for (const auto& [d2, s2] : b.diag_) {
                for (int i = a.lo(); i <= a.hi(); ++i) {
                    Rational x = s1[static_cast<std::size_t>(i + a.w_)];
                    if (x.is_zero()) continue;
                    int k = i + d1;
                    if (k < a.lo() || k > a.hi()) throw WindowOverflow();
                    Rational y = s2[static_cast<std::size_t>(k + a.w_)];
                    if (y.is_zero()) continue;
                    Rational v = r.get(d1 + d2, i) + x * y;
                    r.set(d1 + d2, i, v);
                }
            }
        }
        r.prune();
        return r;
    }

    friend bool operator==(const BandElement& a, const BandElement& b) {
        if (a.w_ != b.w_) return false;
        BandElement d = a;
        d -= b;
        return d.diag_.empty();
    }
    friend bool operator!=(const BandElement& a, const BandElement& b) { return !(a == b); }

    bool is_zero() const { return diag_.empty(); }

private:
    void check(const BandElement& o) const {
        if (w_ != o.w_) throw std::invalid_argument("BandElement: window mismatch");
    }
    void prune() {
        for (auto it = diag_.begin(); it != diag_.end();) {
            bool all0 = true;
            for (const auto& v : it->second)
                if (!v.is_zero()) {
                    all0 = false;
                    break;
                }
            it = all0 ? diag_.erase(it) : ++it;
        }
    }

    int w_;
    std::map<int, std::vector<Rational>> diag_;
};

inline BandElement band_diag(int window, const std::vector<Rational>& values, int offset = 0) {
    BandElement b(window);
    for (int i = -window; i <= window; ++i)
        b.set(offset, i, values[static_cast<std::size_t>(i + window)]);
    return b;
}

inline BandElement band_unit_seq(int window, int position, int offset, Rational v = Rational(1)) {
    BandElement b(window);
    b.set(offset, position, v);
    return b;
}

// Evaluates a polynomial in h on the window progression s - 2i.
inline std::vector<Rational> window_values(const UParams& par, const Poly& p, const Rational& s,
                                           int window) {
    std::vector<Rational> out;
    for (int i = -window; i <= window; ++i)
        out.push_back(p.eval_all({{"h", s - Rational(2) * Rational(i)}}));
    return out;
}

// Image of a normal-form element under the window embedding:
// e -> (T1(s-2i)) * e, f -> f, p(h) -> (p(s-2i)).
inline BandElement gamma_s(const UParams& par, const UElement& x, const Rational& s, int window) {
    if (par.t_symbolic || !(par.t == Poly::constant(par.ring, Rational(1))))
        throw std::domain_error("gamma_s: defined for the t = 1 algebra");
    if (par.lambda && lambda_is_degenerate(*par.lambda))
        throw std::domain_error("gamma_s: degenerate lambda rejected");
    BandElement img_e(window);
    for (int i = -window; i < window; ++i)
        img_e.set(1, i, par.T1.eval_all({{"h", s - Rational(2) * Rational(i)}}));
    BandElement img_f(window);
    for (int i = -window + 1; i <= window; ++i) img_f.set(-1, i, Rational(1));

    BandElement out(window);
    for (const auto& [d, p] : x.comp) {
        BandElement term = band_diag(window, window_values(par, p, s, window));
        if (d > 0) {
            BandElement pw = img_e;
            for (int k = 1; k < d; ++k) pw = pw * img_e;
            out += pw * term;
        } else if (d < 0) {
            BandElement pw = img_f;
            for (int k = 1; k < -d; ++k) pw = pw * img_f;
            out += pw * term;
        } else {
            out += term;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degenerate ladder algebra with a broken bond between positions i0 and
// i0 + 1: an e-type unit E_{ab} (a < b) is zero exactly when a <= i0 < b.
// The induced module has its highest vector killed by everything except the
// lower-left corner block {E_{ab}: a >= 1, b <= 0}; diagonal units act by mu
// for index <= 0 and by 0 above.

namespace degenerate {

using CornerMono = std::map<std::pair<int, int>, int>;

struct Element {
    std::map<CornerMono, Poly> t;

    bool is_zero() const { return t.empty(); }
    void add(const CornerMono& m, const Poly& c) {
        if (c.is_zero()) return;
        auto it = t.find(m);
        if (it == t.end()) {
            t.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.t) add(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.t) add(m, -c);
        return *this;
    }
    Element& operator*=(const Poly& s) {
        if (s.is_zero()) {
            t.clear();
            return *this;
        }
        for (auto& [m, c] : t) c = c * s;
        return *this;
    }
};

struct Model {
    int broken;  // bond between broken and broken + 1
    int window;
    RingPtr ring = young::mu_ring();

    bool present(int a, int b) const { return !(a < b && a <= broken && broken < b); }
    bool corner(int a, int b) const { return a >= 1 && b <= 0; }

    Poly chi(int a) const {
        return a <= 0 ? Poly::variable(ring, "mu") : Poly::zero(ring);
    }

    Element act_suffix(int a, int b, const std::vector<std::pair<int, int>>& f,
                       std::size_t pos) const {
        Element res;
        if (!present(a, b)) return res;
        if (a == b) {
            Poly scalar = chi(a);
            long wt = 0;
            for (std::size_t k = pos; k < f.size(); ++k) {
                if (f[k].first == a) ++wt;
                if (f[k].second == a) --wt;
            }
            scalar += Poly::constant(ring, Rational(wt));
            CornerMono m;
            for (std::size_t k = pos; k < f.size(); ++k) m[f[k]]++;
            res.add(m, scalar);
            return res;
        }
        if (corner(a, b)) {
            CornerMono m;
            for (std::size_t k = pos; k < f.size(); ++k) m[f[k]]++;
            m[{a, b}]++;
            res.add(m, Poly::constant(ring, Rational(1)));
            return res;
        }
        if (pos == f.size()) return res;
        auto [c, d] = f[pos];
        if (b == c && present(a, d)) res += act_suffix(a, d, f, pos + 1);
        if (d == a && present(c, b)) {
            Element sub = act_suffix(c, b, f, pos + 1);
            res -= sub;
        }
        Element tail = act_suffix(a, b, f, pos + 1);
        for (const auto& [m, coeff] : tail.t) {
            CornerMono mm = m;
            mm[f[pos]]++;
            res.add(mm, coeff);
        }
        return res;
    }

    Element act(int a, int b, const Element& x) const {
        Element res;
        for (const auto& [m, coeff] : x.t) {
            std::vector<std::pair<int, int>> f;
            for (const auto& [unit, e] : m)
                for (int k = 0; k < e; ++k) f.push_back(unit);
            Element part = act_suffix(a, b, f, 0);
            part *= coeff;
            res += part;
        }
        return res;
    }
};

}  // namespace degenerate

// Builds the nested bracket of consecutive lowering units through the broken
// bond and checks that it generates a singular vector for every central
// parameter: all window raisings act by zero on it, identically in mu.
inline bool degenerate_singular_check(int i0, int window, int level_bound = 0) {
    if (std::abs(i0) + 2 > window)
        throw std::invalid_argument("degenerate_singular_check: window too small");
    (void)level_bound;
    degenerate::Model mdl{i0, window};

    // x = [...[[f_0, f_1], f_2], ..., f_{i0}] for i0 >= 0 and the mirror
    // nesting [...[[f_{i0}, f_{i0+1}], ...], f_0] for i0 <= 0, with
    // f_l = E_{l+1, l}. In the unit calculus the nesting collapses to a
    // single corner unit with a sign.
    auto bracket_unit = [&](std::pair<int, int> x, std::pair<int, int> y, int& out_sign)
        -> std::pair<int, int> {
        bool xy = x.second == y.first && mdl.present(x.first, y.second);
        bool yx = y.second == x.first && mdl.present(y.first, x.second);
        if (xy && !yx) {
            out_sign = 1;
            return {x.first, y.second};
        }
        if (yx && !xy) {
            out_sign = -1;
            return {y.first, x.second};
        }
        throw std::logic_error("degenerate bracket did not collapse to one unit");
    };
    std::pair<int, int> unit;
    int total_sign = 1;
    if (i0 >= 0) {
        unit = {1, 0};
        for (int l = 1; l <= i0; ++l) {
            int s = 0;
            unit = bracket_unit(unit, {l + 1, l}, s);
            total_sign *= s;
        }
    } else {
        unit = {i0 + 1, i0};
        for (int l = i0 + 1; l <= 0; ++l) {
            int s = 0;
            unit = bracket_unit(unit, {l + 1, l}, s);
            total_sign *= s;
        }
    }
    Rational sign(total_sign);

    degenerate::Element xv;
    degenerate::CornerMono m;
    m[unit] = 1;
    xv.add(m, exact::Poly::constant(mdl.ring, sign));
    if (xv.is_zero()) return false;

    for (int j = -window; j < window; ++j) {
        if (!mdl.present(j, j + 1)) continue;  // the broken raising is absent
        degenerate::Element r = mdl.act(j, j + 1, xv);
        if (!r.is_zero()) return false;
    }
    return true;
}

}  // namespace vermaforge::ulambda
