#pragma once

// Sparse multivariate polynomials over Rational with a fixed named variable
// set per ring. Terms are kept in graded lexicographic order on the ring's
// symbol list, no zero coefficients are ever stored, and all arithmetic is
// exact.

#include "vermaforge/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace vermaforge::exact {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
public:
    static RingPtr make(std::vector<std::string> vars) {
        return std::make_shared<const PolyRing>(std::move(vars));
    }

    explicit PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw std::invalid_argument("PolyRing: duplicate variable " + vars_[i]);
    }

    std::size_t size() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& name(std::size_t i) const { return vars_.at(i); }

    bool has(const std::string& v) const {
        for (const auto& s : vars_)
            if (s == v) return true;
        return false;
    }

    std::size_t index(const std::string& v) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == v) return i;
        throw std::invalid_argument("PolyRing: unknown variable " + v);
    }

    friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars_ == b.vars_; }

private:
    std::vector<std::string> vars_;
};

using Mono = std::vector<std::uint32_t>;

inline std::uint64_t mono_degree(const Mono& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded lexicographic order: total degree first, then lex on the symbol list.
struct GradedLexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        std::uint64_t da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

class Poly {
public:
    using Terms = std::map<Mono, Rational, GradedLexLess>;

    Poly() : ring_(PolyRing::make({})) {}
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

    static Poly constant(RingPtr ring, const Rational& c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.t_[Mono(p.ring_->size(), 0)] = c;
        return p;
    }

    static Poly variable(RingPtr ring, const std::string& name) {
        Poly p(ring);
        Mono m(ring->size(), 0);
        m[ring->index(name)] = 1;
        p.t_[m] = Rational(1);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && mono_degree(t_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (t_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("Poly: not a constant");
        return t_.begin()->second;
    }

    std::uint64_t total_degree() const {
        if (t_.empty()) return 0;
        return mono_degree(t_.rbegin()->first);
    }

    long degree(const std::string& var) const {
        std::size_t i = ring_->index(var);
        long d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, static_cast<long>(m[i]));
        return d;  // -1 for the zero polynomial
    }

    Rational coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }

    void add_term(const Mono& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(ring_);
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a.ring_);
        for (const auto& [ma, ca] : a.t_) {
            for (const auto& [mb, cb] : b.t_) {
                Mono m(ma);
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [m, v] : t_) v *= c;
        return *this;
    }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    Poly pow(unsigned long e) const {
        Poly r = constant(ring_, Rational(1));
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return *a.ring_ == *b.ring_ && a.t_ == b.t_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Substitutes exact values for the named variables; the result stays in
    // the same ring with those exponents folded away.
    Poly eval(const std::map<std::string, Rational>& values) const {
        std::vector<std::optional<Rational>> sub(ring_->size());
        for (const auto& [name, val] : values) sub[ring_->index(name)] = val;
        Poly r(ring_);
        for (const auto& [m, c] : t_) {
            Rational cc = c;
            Mono mm = m;
            for (std::size_t i = 0; i < mm.size(); ++i) {
                if (sub[i] && mm[i] > 0) {
                    cc *= sub[i]->pow(mm[i]);
                    mm[i] = 0;
                }
            }
            r.add_term(mm, cc);
        }
        return r;
    }

    Rational eval_all(const std::map<std::string, Rational>& values) const {
        Poly r = eval(values);
        if (!r.is_constant()) throw std::domain_error("Poly: unbound variable in evaluation");
        return r.constant_value();
    }

    // Substitutes a polynomial (possibly of a different ring) for one
    // variable; every other variable must exist in the target ring.
    Poly subst(const std::string& var, const Poly& repl) const {
        const RingPtr& target = repl.ring();
        std::size_t vi = ring_->index(var);
        long dmax = degree(var);
        if (dmax < 0) return remap(target);
        // Horner over powers of `var`.
        std::vector<Poly> layer(static_cast<std::size_t>(dmax) + 1, Poly::zero(target));
        for (const auto& [m, c] : t_) {
            Mono mm = m;
            std::uint32_t k = mm[vi];
            mm[vi] = 0;
            layer[k].add_term(remap_mono(mm, target), c);
        }
        Poly res = layer[static_cast<std::size_t>(dmax)];
        for (long k = dmax - 1; k >= 0; --k) res = res * repl + layer[static_cast<std::size_t>(k)];
        return res;
    }

    Poly derivative(const std::string& var) const {
        std::size_t vi = ring_->index(var);
        Poly r(ring_);
        for (const auto& [m, c] : t_) {
            if (m[vi] == 0) continue;
            Mono mm = m;
            Rational k(static_cast<long>(mm[vi]));
            --mm[vi];
            r.add_term(mm, c * k);
        }
        return r;
    }

    // Exact division; throws if the divisor does not divide exactly.
    Poly divexact(const Poly& d) const {
        check_ring(d);
        if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly q(ring_);
        Poly r = *this;
        const auto& [dm, dc] = *d.t_.rbegin();
        while (!r.is_zero()) {
            const auto& [rm, rc] = *r.t_.rbegin();
            Mono qm(rm);
            for (std::size_t i = 0; i < qm.size(); ++i) {
                if (qm[i] < dm[i]) throw std::domain_error("Poly: inexact division");
                qm[i] -= dm[i];
            }
            Rational qc = rc / dc;
            Poly t(ring_);
            t.t_[qm] = qc;
            q += t;
            r -= t * d;
        }
        return q;
    }

    bool divides(const Poly& num) const {
        try {
            (void)num.divexact(*this);
            return true;
        } catch (const std::domain_error&) {
            return false;
        }
    }

    // Dense coefficient list when the polynomial is univariate in `var`
    // (other variables may appear in the ring but not in any term).
    std::vector<Rational> univariate_coeffs(const std::string& var) const {
        std::size_t vi = ring_->index(var);
        long d = degree(var);
        std::vector<Rational> c(static_cast<std::size_t>(std::max(d, 0L)) + 1, Rational(0));
        for (const auto& [m, v] : t_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                if (i != vi && m[i] != 0)
                    throw std::domain_error("Poly: not univariate in " + var);
            c[m[vi]] = v;
        }
        return c;
    }

    // Coefficient of var^k, as a polynomial in the remaining variables.
    Poly coeff_of(const std::string& var, std::uint32_t k) const {
        std::size_t vi = ring_->index(var);
        Poly r(ring_);
        for (const auto& [m, c] : t_) {
            if (m[vi] != k) continue;
            Mono mm = m;
            mm[vi] = 0;
            r.add_term(mm, c);
        }
        return r;
    }

    Rational leading_coeff() const {
        if (t_.empty()) return Rational(0);
        return t_.rbegin()->second;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly r = *this;
        Rational lc = leading_coeff();
        r *= Rational(1) / lc;
        return r;
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // Canonical form lists terms in descending graded-lex order.
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (first) {
                if (a.sign() < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            first = false;
            bool have_vars = mono_degree(m) > 0;
            if (!have_vars || !a.is_one()) {
                out << a.to_string();
                if (have_vars) out << "*";
            }
            bool first_var = true;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!first_var) out << "*";
                first_var = false;
                out << ring_->name(i);
                if (m[i] > 1) out << "^" << m[i];
            }
        }
        return out.str();
    }

private:
    void check_ring(const Poly& o) const {
        if (!(*ring_ == *o.ring_))
            throw std::invalid_argument("Poly: incompatible variable sets");
    }

    Mono remap_mono(const Mono& m, const RingPtr& target) const {
        Mono out(target->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            out[target->index(ring_->name(i))] = m[i];
        }
        return out;
    }

    Poly remap(const RingPtr& target) const {
        Poly r(target);
        for (const auto& [m, c] : t_) r.add_term(remap_mono(m, target), c);
        return r;
    }

    RingPtr ring_;
    Terms t_;
};

// Largest m with (x - r)^m dividing p, for p univariate and nonzero.
inline int root_multiplicity(const Poly& p, const Rational& r) {
    if (p.is_zero()) throw std::domain_error("root_multiplicity: zero polynomial");
    std::string var;
    for (const auto& name : p.ring()->vars())
        if (p.degree(name) > 0) {
            if (!var.empty()) throw std::domain_error("root_multiplicity: not univariate");
            var = name;
        }
    if (var.empty()) return 0;
    std::vector<Rational> c = p.univariate_coeffs(var);
    int mult = 0;
    while (true) {
        Rational rem(0);
        for (std::size_t i = c.size(); i-- > 0;) rem = rem * r + c[i];
        if (!rem.is_zero() || c.size() == 1) break;
        // Deflate by (x - r) via synthetic division.
        std::vector<Rational> q(c.size() - 1);
        Rational carry = c.back();
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = c[i] + r * carry;
        }
        c = std::move(q);
        ++mult;
    }
    return mult;
}

}  // namespace vermaforge::exact
