#pragma once

// Registry assembling both sides of every named series identity. Each entry
// has two independent builders; verification is exact coefficient equality
// up to the requested truncation order.

#include "vermaforge/diagram.hpp"
#include "vermaforge/glmod.hpp"
#include "vermaforge/report.hpp"
#include "vermaforge/series.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace vermaforge::identities {

using exact::Rational;
using qseries::Factor;
using qseries::MarkerPoly;
using qseries::ProductSpec;
using qseries::Series;
using report::VerificationReport;
using young::Diagram;
using young::DiagramFilter;

struct IdentityId {
    std::string name;
    std::map<std::string, long> params;

    std::string display() const {
        if (params.empty()) return name;
        std::ostringstream out;
        out << name << "(";
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) out << ",";
            first = false;
            out << v;
        }
        out << ")";
        return out.str();
    }
};

// Accepts "euler10", "finite13(2)", "layer20(0,1)". Positional arguments are
// bound in the order the identity declares them.
inline IdentityId parse_identity(const std::string& text) {
    IdentityId id;
    auto open = text.find('(');
    if (open == std::string::npos) {
        id.name = text;
        return id;
    }
    if (text.back() != ')') throw std::invalid_argument("identity: bad syntax '" + text + "'");
    id.name = text.substr(0, open);
    std::string args = text.substr(open + 1, text.size() - open - 2);
    std::vector<long> vals;
    std::string cur;
    for (char ch : args + ",") {
        if (ch == ',') {
            if (cur.empty()) throw std::invalid_argument("identity: bad syntax '" + text + "'");
            vals.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    std::vector<std::string> names;
    if (id.name == "finite13") names = {"n"};
    else if (id.name == "higher14" || id.name == "chi_neg18") names = {"l"};
    else if (id.name == "layer20" || id.name == "layer22") names = {"k", "l"};
    else throw std::invalid_argument("identity: '" + id.name + "' takes no parameters");
    if (vals.size() != names.size())
        throw std::invalid_argument("identity: wrong parameter count for " + id.name);
    for (std::size_t i = 0; i < names.size(); ++i) id.params[names[i]] = vals[i];
    return id;
}

namespace detail {

inline ProductSpec spec_partitions() {
    ProductSpec s;
    s.generator = [](int N) {
        std::vector<Factor> f;
        for (int i = 1; i <= N; ++i) f.push_back({0, i, 1});
        return f;
    };
    return s;
}

inline ProductSpec spec_plane(bool marked) {
    ProductSpec s;
    s.generator = [marked](int N) {
        std::vector<Factor> f;
        for (int i = 1; i <= N; ++i) f.push_back({marked ? 1 : 0, i, i});
        return f;
    };
    return s;
}

inline ProductSpec spec_min_exponent(long l) {
    ProductSpec s;
    s.generator = [l](int N) {
        std::vector<Factor> f;
        for (int i = 1; i <= N; ++i) f.push_back({0, i, std::min<long>(i, l)});
        return f;
    };
    return s;
}

// Level k contributes the factors (1 - a^{m(k+j-1)} q^k)^{-1}, j = 0..k-1.
inline ProductSpec spec_chern(long exponent_scale) {
    ProductSpec s;
    s.generator = [exponent_scale](int N) {
        std::vector<Factor> f;
        for (int k = 1; k <= N; ++k)
            for (int j = 0; j < k; ++j) f.push_back({exponent_scale * (k + j - 1), k, 1});
        return f;
    };
    return s;
}

inline ProductSpec spec_kplus(long kp) {
    ProductSpec s;
    s.generator = [kp](int N) {
        std::vector<Factor> f;
        for (int i = 1; i <= N; ++i) {
            if (i <= kp) {
                f.push_back({0, i, i});
            } else {
                f.push_back({0, i, kp});
                f.push_back({1, i, i - kp});
            }
        }
        return f;
    };
    return s;
}

inline void add_shifted(Series& acc, long shift, const Series& term) {
    for (int m = 0; m + shift <= acc.order(); ++m) {
        if (m > term.order()) break;
        MarkerPoly c = acc.coeff(static_cast<int>(m + shift));
        c += term.coeff(m);
        acc.set_coeff(static_cast<int>(m + shift), c);
    }
}

// 1 / ((1-q)...(1-q^k))^2 truncated.
inline Series square_staircase(int order, long k) {
    ProductSpec s;
    for (long m = 1; m <= k; ++m) s.factors.push_back({0, m, 2});
    return qseries::series_from_product(s, order);
}

inline Series diagram_sum(int N, const DiagramFilter* filter, long base,
                          const std::function<MarkerPoly(const Diagram&)>& coeff,
                          std::optional<int> finite_n = {}) {
    Series out(N);
    for (const auto& d : young::enumerate_diagrams(N + base, filter)) {
        long e = d.weight() - base;
        if (e < 0) throw std::logic_error("diagram_sum: weight below base shift");
        if (e > N) continue;
        MarkerPoly c = coeff(d);
        if (c.is_zero()) continue;
        Series chi = young::chi_series(d, static_cast<int>(N - e), finite_n);
        Series sq = chi * chi;
        for (int m = 0; m <= sq.order(); ++m) {
            MarkerPoly cur = out.coeff(static_cast<int>(e) + m);
            cur += c * sq.coeff(m);
            out.set_coeff(static_cast<int>(e) + m, cur);
        }
    }
    return out;
}

inline MarkerPoly one_marker() { return MarkerPoly(Rational(1)); }

inline DiagramFilter filter_total_blocks_at_most(long l) {
    DiagramFilter f;
    f.bounds.push_back({1, std::nullopt, l});
    return f;
}

inline DiagramFilter filter_tail_zero_above(int l) {
    DiagramFilter f;
    f.bounds.push_back({l + 1, std::nullopt, 0L});
    return f;
}

// For every PBW monomial of level <= N in the letters f^l h^j (j < l)
// reports its level and total Chern class, the sum of l + j - 1 over letters.
inline void for_each_pbw_monomial(int N, const std::function<void(int, long)>& fn) {
    std::function<void(int, std::pair<int, int>, long)> rec =
        [&](int budget, std::pair<int, int> minLetter, long chern) {
            fn(N - budget, chern);
            for (int l = minLetter.first; l <= budget; ++l) {
                int jstart = (l == minLetter.first) ? minLetter.second : 0;
                for (int j = jstart; j < l; ++j) rec(budget - l, {l, j}, chern + l + j - 1);
            }
        };
    rec(N, {1, 0}, 0);
}

inline glmod::AlgebraContext& layer_context() {
    static glmod::AlgebraContext ctx(5);
    return ctx;
}

constexpr int kLayerLevelCap = 5;

}  // namespace detail

struct BuiltSides {
    Series lhs;
    Series rhs;
    std::string note;

    BuiltSides(Series l, Series r, std::string n = "")
        : lhs(std::move(l)), rhs(std::move(r)), note(std::move(n)) {}
};

inline BuiltSides build_sides(const IdentityId& id, int N) {
    using namespace detail;
    auto param = [&](const std::string& key) {
        auto it = id.params.find(key);
        if (it == id.params.end())
            throw std::invalid_argument("identity " + id.name + ": missing parameter " + key);
        return it->second;
    };

    if (id.name == "euler10") {
        Series lhs = qseries::series_from_product(spec_partitions(), N);
        DiagramFilter f = filter_total_blocks_at_most(1);
        Series rhs = diagram_sum(N, &f, 0, [](const Diagram&) { return one_marker(); });
        return {lhs, rhs};
    }

    if (id.name == "finite13") {
        long n = param("n");
        if (n < 1) throw std::invalid_argument("finite13: n must be >= 1");
        ProductSpec s;
        for (long i = 1; i <= n; ++i) s.factors.push_back({0, i, 1});
        for (long i = n + 1; i <= 2 * n; ++i) s.factors.push_back({0, i, -1});
        Series lhs = qseries::series_from_product(s, N);
        DiagramFilter f = filter_total_blocks_at_most(1);
        f.bounds.push_back({static_cast<int>(n) + 1, std::nullopt, 0L});
        Series rhs = diagram_sum(N, &f, 0, [](const Diagram&) { return one_marker(); },
                                 static_cast<int>(n));
        return {lhs, rhs};
    }

    if (id.name == "higher14") {
        long l = param("l");
        if (l < 1) throw std::invalid_argument("higher14: l must be >= 1");
        Series lhs = qseries::series_from_product(spec_min_exponent(l), N);
        DiagramFilter f = filter_total_blocks_at_most(l);
        Series rhs = diagram_sum(N, &f, 0, [](const Diagram&) { return one_marker(); });
        return {lhs, rhs};
    }

    if (id.name == "higher15") {
        // Printed left side (1-q) / prod (1-q^s)^2; right side written out as
        // single plus double column sums, characters from the hook formula.
        ProductSpec s;
        s.factors.push_back({0, 1, -1});
        s.generator = [](int order) {
            std::vector<Factor> f;
            for (int i = 1; i <= order; ++i) f.push_back({0, i, 2});
            return f;
        };
        Series lhs = qseries::series_from_product(s, N);
        Series rhs = Series::one(N);
        for (long k = 1; k * k <= N; ++k)
            add_shifted(rhs, k * k, square_staircase(static_cast<int>(N - k * k), k));
        for (long i = 1; i * i + i * i <= N; ++i) {
            for (long j = i; i * i + j * j <= N; ++j) {
                long base = i * i + j * j;
                Diagram d(i == j ? std::map<int, long>{{static_cast<int>(i), 2}}
                                 : std::map<int, long>{{static_cast<int>(i), 1},
                                                       {static_cast<int>(j), 1}});
                Series chi = young::chi_series(d, static_cast<int>(N - base));
                add_shifted(rhs, base, chi * chi);
            }
        }
        return {lhs, rhs};
    }

    if (id.name == "all16") {
        Series lhs = qseries::series_from_product(spec_plane(false), N);
        Series rhs = diagram_sum(N, nullptr, 0, [](const Diagram&) { return one_marker(); });
        return {lhs, rhs};
    }

    if (id.name == "chi_neg17") {
        Series lhs = Series::one(N);
        for (long k = 1; k <= N; ++k)
            add_shifted(lhs, k, square_staircase(static_cast<int>(N - k), k));
        DiagramFilter f = filter_tail_zero_above(1);
        Series rhs = diagram_sum(N, &f, 0, [](const Diagram&) { return one_marker(); });
        return {lhs, rhs};
    }

    if (id.name == "chi_neg18") {
        long l = param("l");
        if (l < 1) throw std::invalid_argument("chi_neg18: l must be >= 1");
        DiagramFilter f = filter_tail_zero_above(static_cast<int>(l));
        Series lhs = diagram_sum(N, &f, 0, [](const Diagram&) { return one_marker(); });
        // Complement route: everything minus the diagrams whose scalar-square
        // polynomial vanishes at -l.
        Series rhs = qseries::series_from_product(spec_plane(false), N);
        Rational root(-l);
        Series drop = diagram_sum(N, nullptr, 0, [&](const Diagram& d) {
            if (d.empty()) return MarkerPoly();
            int mult = exact::root_multiplicity(young::p_poly(d), root);
            return mult > 0 ? one_marker() : MarkerPoly();
        });
        rhs -= drop;
        return {lhs, rhs};
    }

    if (id.name == "layer20" || id.name == "layer22") {
        long k = param("k"), l = param("l");
        if (k < 0 || l < 1) throw std::invalid_argument(id.name + ": need k >= 0, l >= 1");
        bool minus = id.name == "layer20";
        long a = minus ? -k : k;
        long base = minus ? l * (k + l) * (k + l) : (k + l) * l * l;
        if (base > detail::kLayerLevelCap)
            throw std::invalid_argument(id.name + ": lowest level exceeds the feasible range");
        int eff = std::min<int>(N, detail::kLayerLevelCap - static_cast<int>(base));
        DiagramFilter f;
        if (minus) {
            f.bounds.push_back({static_cast<int>(k + l), l, std::nullopt});
            f.bounds.push_back({static_cast<int>(k + l) + 1, std::nullopt, l});
        } else {
            f.bounds.push_back({static_cast<int>(l), k + l, std::nullopt});
            f.bounds.push_back({static_cast<int>(l) + 1, std::nullopt, k + l});
        }
        Series rhs = diagram_sum(eff, &f, base, [](const Diagram&) { return one_marker(); });
        Series lhs(eff);
        glmod::AlgebraContext& ctx = layer_context();
        for (int m = 0; m <= eff; ++m) {
            int level = static_cast<int>(base) + m;
            std::vector<long> dims = glmod::jantzen_dims(ctx, a, level);
            long dl = static_cast<std::size_t>(l) <= dims.size() ? dims[static_cast<std::size_t>(l - 1)] : 0;
            long dl1 = static_cast<std::size_t>(l + 1) <= dims.size() ? dims[static_cast<std::size_t>(l)] : 0;
            lhs.set_coeff(m, MarkerPoly(Rational(dl - dl1)));
        }
        std::ostringstream note;
        note << "compared to q^" << eff << " (module side computed in gl(10) up to level "
             << detail::kLayerLevelCap << ")";
        return {lhs, rhs, note.str()};
    }

    if (id.name == "local_ch2") {
        Series lhs = qseries::d_da_at_one(qseries::series_from_product(spec_plane(true), N));
        Series rhs = diagram_sum(N, nullptr, 0, [](const Diagram& d) {
            return MarkerPoly(Rational(d.size()));
        });
        return {lhs, rhs};
    }

    if (id.name == "chern1_ch3") {
        Series lhs(N);
        detail::for_each_pbw_monomial(N, [&](int level, long chern) {
            MarkerPoly c = lhs.coeff(level);
            c += MarkerPoly::a_power(static_cast<std::size_t>(chern));
            lhs.set_coeff(level, c);
        });
        Series rhs = qseries::series_from_product(spec_chern(1), N);
        return {lhs, rhs};
    }

    if (id.name == "chern2_ch3") {
        Series lhs(N);
        detail::for_each_pbw_monomial(N, [&](int level, long chern) {
            MarkerPoly c = lhs.coeff(level);
            c += MarkerPoly(Rational(2 * chern));
            lhs.set_coeff(level, c);
        });
        Series rhs = qseries::d_da_at_one(qseries::series_from_product(spec_chern(2), N));
        return {lhs, rhs};
    }

    if (id.name == "global12_ch3") {
        Series lhs = qseries::d_da_at_one(qseries::series_from_product(spec_chern(1), N));
        Series rhs = qseries::d_da_at_one(qseries::series_from_product(spec_plane(true), N));
        for (long kp = 1; kp <= N; ++kp) {
            Series term = qseries::d_da_at_one(qseries::series_from_product(spec_kplus(kp), N));
            term *= Rational(2);
            rhs += term;
        }
        Series central = diagram_sum(N, nullptr, 0, [](const Diagram& d) {
            return MarkerPoly(Rational(young::stats(d).central_diagonal));
        });
        rhs -= central;
        return {lhs, rhs};
    }

    if (id.name == "global11_ch3") {
        Series lhs = qseries::d_da_at_one(qseries::series_from_product(spec_chern(2), N));
        Series offdiag = diagram_sum(N, nullptr, 0, [](const Diagram& d) {
            young::Stats st = young::stats(d);
            return MarkerPoly(Rational(st.size - st.central_diagonal));
        });
        Series degsum = diagram_sum(N, nullptr, 0, [](const Diagram& d) {
            return MarkerPoly(Rational(d.size()));
        });
        Series rhs = offdiag * Rational(2);
        Series local = qseries::d_da_at_one(qseries::series_from_product(spec_plane(true), N));
        local *= Rational(2);
        rhs += local;
        degsum *= Rational(2);
        rhs -= degsum;
        for (long kp = 1; kp <= N; ++kp) {
            Series term = qseries::d_da_at_one(qseries::series_from_product(spec_kplus(kp), N));
            term *= Rational(4);
            rhs += term;
        }
        return {lhs, rhs};
    }

    if (id.name == "appendixB") {
        Series lhs = qseries::series_from_product(spec_plane(true), N);
        Series rhs = diagram_sum(N, nullptr, 0, [](const Diagram& d) {
            return MarkerPoly::a_power(static_cast<std::size_t>(d.size()));
        });
        return {lhs, rhs};
    }

    throw std::invalid_argument("unknown identity '" + id.name + "'");
}

inline VerificationReport verify(const IdentityId& id, int N) {
    BuiltSides sides = build_sides(id, N);
    qseries::ComparisonReport cmp = qseries::equals_to_order(sides.lhs, sides.rhs);
    VerificationReport rep;
    rep.id = id.name;
    rep.params = id.params;
    rep.order = sides.lhs.order();
    rep.rows = cmp.rows;
    rep.pass = cmp.pass;
    rep.note = sides.note;
    return rep;
}

struct ManifestEntry {
    IdentityId id;
    int order = 0;
};

inline std::vector<ManifestEntry> default_manifest() {
    std::vector<ManifestEntry> m;
    auto add = [&](const std::string& text, int order) {
        m.push_back({parse_identity(text), order});
    };
    add("euler10", 30);
    add("finite13(1)", 25);
    add("finite13(2)", 25);
    add("finite13(3)", 25);
    add("finite13(4)", 25);
    add("higher14(2)", 20);
    add("higher14(3)", 20);
    add("higher15", 20);
    add("all16", 20);
    add("chi_neg17", 20);
    add("chi_neg18(1)", 20);
    add("chi_neg18(2)", 20);
    add("chi_neg18(3)", 20);
    add("layer20(0,1)", 20);
    add("layer20(1,1)", 20);
    add("layer22(0,1)", 20);
    add("layer22(1,1)", 20);
    add("layer22(2,1)", 20);
    add("local_ch2", 20);
    add("chern1_ch3", 15);
    add("chern2_ch3", 15);
    add("global11_ch3", 12);
    add("global12_ch3", 12);
    add("appendixB", 15);
    return m;
}

inline report::Summary verify_all(const std::vector<ManifestEntry>& manifest) {
    report::Summary s;
    for (const auto& entry : manifest) {
        VerificationReport r = verify(entry.id, entry.order);
        s.pass = s.pass && r.pass;
        s.reports.push_back(std::move(r));
    }
    return s;
}

}  // namespace vermaforge::identities
