#pragma once

// Truncated formal power series in q whose coefficients are exact
// polynomials in a single marker variable a. The truncation order N is a
// hard attribute of every series: mixing orders is an error, never an
// implicit re-truncation.

#include "vermaforge/rational.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vermaforge::qseries {

using exact::Rational;

// Dense polynomial in the marker variable a.
class MarkerPoly {
public:
    MarkerPoly() {}
    explicit MarkerPoly(Rational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    static MarkerPoly a_power(std::size_t k, Rational c = Rational(1)) {
        MarkerPoly p;
        if (c.is_zero()) return p;
        p.c_.assign(k + 1, Rational(0));
        p.c_[k] = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("MarkerPoly: not a constant");
        return c_.empty() ? Rational(0) : c_[0];
    }

    MarkerPoly& operator+=(const MarkerPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    MarkerPoly& operator-=(const MarkerPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend MarkerPoly operator+(MarkerPoly x, const MarkerPoly& y) { return x += y; }
    friend MarkerPoly operator-(MarkerPoly x, const MarkerPoly& y) { return x -= y; }
    MarkerPoly operator-() const {
        MarkerPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend MarkerPoly operator*(const MarkerPoly& x, const MarkerPoly& y) {
        MarkerPoly r;
        if (x.is_zero() || y.is_zero()) return r;
        r.c_.assign(x.c_.size() + y.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.c_.size(); ++j) r.c_[i + j] += x.c_[i] * y.c_[j];
        }
        r.trim();
        return r;
    }
    MarkerPoly& operator*=(const MarkerPoly& o) { return *this = *this * o; }
    MarkerPoly& operator*=(const Rational& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }

    friend bool operator==(const MarkerPoly& x, const MarkerPoly& y) { return x.c_ == y.c_; }
    friend bool operator!=(const MarkerPoly& x, const MarkerPoly& y) { return !(x == y); }

    // d/da evaluated at a = 1.
    Rational derivative_at_one() const {
        Rational s(0);
        for (std::size_t k = 1; k < c_.size(); ++k) s += Rational(static_cast<long>(k)) * c_[k];
        return s;
    }

    Rational value_at_one() const {
        Rational s(0);
        for (const auto& c : c_) s += c;
        return s;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            Rational a = c_[k];
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
            if (k == 0 || !a.is_one()) {
                out << a.to_string();
                if (k > 0) out << "*";
            }
            if (k > 0) {
                out << "a";
                if (k > 1) out << "^" << k;
            }
        }
        return out.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

class Series {
public:
    explicit Series(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
    }

    static Series constant(int order, const Rational& c) {
        Series s(order);
        s.c_[0] = MarkerPoly(c);
        return s;
    }
    static Series one(int order) { return constant(order, Rational(1)); }

    int order() const { return order_; }
    const MarkerPoly& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, MarkerPoly p) { c_.at(static_cast<std::size_t>(k)) = std::move(p); }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    Series operator-() const {
        Series r(order_);
        for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
        return r;
    }
    Series& operator+=(const Series& o) {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend Series operator+(Series x, const Series& y) { return x += y; }
    friend Series operator-(Series x, const Series& y) { return x -= y; }

    friend Series operator*(const Series& x, const Series& y) {
        x.check_order(y);
        Series r(x.order_);
        for (int i = 0; i <= x.order_; ++i) {
            if (x.coeff(i).is_zero()) continue;
            for (int j = 0; i + j <= x.order_; ++j) {
                if (y.coeff(j).is_zero()) continue;
                r.c_[static_cast<std::size_t>(i + j)] += x.coeff(i) * y.coeff(j);
            }
        }
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series& operator*=(const Rational& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend Series operator*(Series x, const Rational& s) { return x *= s; }

    // Multiplicative inverse; the constant term must be a nonzero rational
    // independent of the marker.
    Series inverse() const {
        if (!c_[0].is_constant() || c_[0].is_zero())
            throw std::domain_error("Series: inverse needs a nonzero rational constant term");
        Rational u = Rational(1) / c_[0].constant_value();
        Series r(order_);
        r.c_[0] = MarkerPoly(u);
        for (int k = 1; k <= order_; ++k) {
            MarkerPoly acc;
            for (int j = 1; j <= k; ++j) acc += c_[static_cast<std::size_t>(j)] * r.coeff(k - j);
            acc *= -u;
            r.c_[static_cast<std::size_t>(k)] = std::move(acc);
        }
        return r;
    }

    friend bool operator==(const Series& x, const Series& y) {
        return x.order_ == y.order_ && x.c_ == y.c_;
    }
    friend bool operator!=(const Series& x, const Series& y) { return !(x == y); }

    // Specializes the marker to 1.
    Series at_a_one() const {
        Series r(order_);
        for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = MarkerPoly(c_[k].value_at_one());
        return r;
    }

private:
    void check_order(const Series& o) const {
        if (order_ != o.order_) throw std::invalid_argument("Series: truncation order mismatch");
    }
    int order_;
    std::vector<MarkerPoly> c_;
};

inline Series d_da_at_one(const Series& s) {
    Series r(s.order());
    for (int k = 0; k <= s.order(); ++k) r.set_coeff(k, MarkerPoly(s.coeff(k).derivative_at_one()));
    return r;
}

// One factor (1 - a^c q^g)^{-m}; negative m puts the factor in the numerator.
struct Factor {
    long aexp;
    long qexp;
    long mult;
};

struct ProductSpec {
    std::vector<Factor> factors;
    // Optional rule emitting the factors of one structured family, truncated
    // so that no factor with qexp > N is generated.
    std::function<std::vector<Factor>(int)> generator;

    std::vector<Factor> all_factors(int order) const {
        std::vector<Factor> out = factors;
        if (generator) {
            auto gen = generator(order);
            out.insert(out.end(), gen.begin(), gen.end());
        }
        return out;
    }
};

inline Series series_from_product(const ProductSpec& spec, int order) {
    Series r = Series::one(order);
    for (const Factor& f : spec.all_factors(order)) {
        if (f.mult == 0) continue;
        if (f.qexp <= 0) throw std::domain_error("series_from_product: factor with q-exponent < 1");
        if (f.aexp < 0) throw std::domain_error("series_from_product: negative marker exponent");
        if (f.qexp > order) continue;
        Series fct(order);
        if (f.mult > 0) {
            // (1 - x)^{-m} = sum C(m+k-1, k) x^k
            for (long k = 0; k * f.qexp <= order; ++k) {
                Rational b = exact::binomial(static_cast<unsigned long>(f.mult + k - 1),
                                             static_cast<unsigned long>(k));
                MarkerPoly cur = fct.coeff(static_cast<int>(k * f.qexp));
                cur += MarkerPoly::a_power(static_cast<std::size_t>(f.aexp * k), b);
                fct.set_coeff(static_cast<int>(k * f.qexp), cur);
            }
        } else {
            long m = -f.mult;
            for (long k = 0; k <= m && k * f.qexp <= order; ++k) {
                Rational b = exact::binomial(static_cast<unsigned long>(m),
                                             static_cast<unsigned long>(k));
                if (k % 2 == 1) b = -b;
                MarkerPoly cur = fct.coeff(static_cast<int>(k * f.qexp));
                cur += MarkerPoly::a_power(static_cast<std::size_t>(f.aexp * k), b);
                fct.set_coeff(static_cast<int>(k * f.qexp), cur);
            }
        }
        r *= fct;
    }
    return r;
}

struct CoeffRow {
    int k;
    std::string lhs;
    std::string rhs;
    bool match;
};

struct ComparisonReport {
    std::vector<CoeffRow> rows;
    bool pass = true;
};

inline ComparisonReport equals_to_order(const Series& x, const Series& y) {
    if (x.order() != y.order())
        throw std::invalid_argument("equals_to_order: truncation order mismatch");
    ComparisonReport rep;
    for (int k = 0; k <= x.order(); ++k) {
        bool ok = x.coeff(k) == y.coeff(k);
        rep.rows.push_back({k, x.coeff(k).to_string(), y.coeff(k).to_string(), ok});
        rep.pass = rep.pass && ok;
    }
    return rep;
}

}  // namespace vermaforge::qseries
