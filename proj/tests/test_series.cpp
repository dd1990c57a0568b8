#include "vermaforge/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <vector>

using namespace vermaforge::qseries;
using vermaforge::exact::Rational;

namespace {

// Partition numbers by the classic part-bounded recursion.
long partitions(int n) {
    std::vector<std::vector<long>> p(static_cast<std::size_t>(n) + 1,
                                     std::vector<long>(static_cast<std::size_t>(n) + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][static_cast<std::size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            long without = p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)];
            long with = m >= k ? p[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)] : 0;
            p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = without + with;
        }
    return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

// Plane partitions of n by direct enumeration: stack weakly decreasing rows,
// each dominated entrywise by the row above.
long plane_partitions_rec(int remaining, const std::vector<int>& ceiling) {
    if (remaining == 0) return 1;
    long count = 0;
    std::vector<int> row;
    std::function<void(int, int, int)> rec = [&](int pos, int maxv, int used) {
        if (used > remaining) return;
        if (!row.empty()) count += plane_partitions_rec(remaining - used, row);
        if (pos >= static_cast<int>(ceiling.size())) return;
        int cap = std::min(maxv, ceiling[static_cast<std::size_t>(pos)]);
        for (int v = 1; v <= cap; ++v) {
            row.push_back(v);
            rec(pos + 1, v, used + v);
            row.pop_back();
        }
    };
    rec(0, remaining, 0);
    return count;
}

long plane_partitions(int n) {
    if (n == 0) return 1;
    std::vector<int> unbounded(static_cast<std::size_t>(n), n);
    return plane_partitions_rec(n, unbounded);
}

// Level i carries i distinct marked generators; sums the multiset sizes over
// all generator multisets of total level n.
long marked_multiset_weight(int n) {
    long total = 0;
    std::function<void(int, int, int, int)> rec = [&](int remaining, int minLevel, int minIdx,
                                                      int picked) {
        if (remaining == 0) {
            total += picked;
            return;
        }
        for (int level = minLevel; level <= remaining; ++level) {
            int start = (level == minLevel) ? minIdx : 1;
            for (int idx = start; idx <= level; ++idx) rec(remaining - level, level, idx, picked + 1);
        }
    };
    rec(n, 1, 1, 0);
    return total;
}

ProductSpec all_parts() {
    ProductSpec s;
    s.generator = [](int N) {
        std::vector<Factor> f;
        for (int i = 1; i <= N; ++i) f.push_back({0, i, 1});
        return f;
    };
    return s;
}

ProductSpec plane_spec(bool marked) {
    ProductSpec s;
    s.generator = [marked](int N) {
        std::vector<Factor> f;
        for (int i = 1; i <= N; ++i) f.push_back({marked ? 1 : 0, i, i});
        return f;
    };
    return s;
}

MarkerPoly mp(long v) { return MarkerPoly(Rational(v)); }

std::mt19937 rng(20240811);

Series random_series(int order, int adeg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Series s(order);
    for (int k = 0; k <= order; ++k) {
        MarkerPoly p;
        for (int d = 0; d <= adeg; ++d)
            p += MarkerPoly::a_power(static_cast<std::size_t>(d), Rational(coeff(rng)));
        s.set_coeff(k, p);
    }
    return s;
}

}  // namespace

TEST_CASE("partition generating function matches the counting oracle") {
    Series s = series_from_product(all_parts(), 10);
    for (int k = 0; k <= 10; ++k) CHECK(s.coeff(k) == mp(partitions(k)));
    CHECK(s.coeff(4) == mp(5));
}

TEST_CASE("plane partition generating function matches direct enumeration") {
    Series s = series_from_product(plane_spec(false), 6);
    for (int k = 0; k <= 6; ++k) {
        INFO("k=" << k);
        CHECK(s.coeff(k) == mp(plane_partitions(k)));
    }
    CHECK(s.coeff(5) == mp(24));
}

TEST_CASE("geometric factor with marker") {
    ProductSpec s;
    s.factors.push_back({1, 1, 1});
    Series r = series_from_product(s, 2);
    CHECK(r.coeff(0) == mp(1));
    CHECK(r.coeff(1) == MarkerPoly::a_power(1));
    CHECK(r.coeff(2) == MarkerPoly::a_power(2));
}

TEST_CASE("factor with zero q-exponent is rejected") {
    ProductSpec s;
    s.factors.push_back({0, 0, 1});
    CHECK_THROWS(series_from_product(s, 3));
}

TEST_CASE("series arithmetic") {
    SECTION("(1-q) * geometric = 1") {
        int N = 9;
        ProductSpec geo;
        geo.factors.push_back({0, 1, 1});
        Series g = series_from_product(geo, N);
        Series one_minus_q(N);
        one_minus_q.set_coeff(0, mp(1));
        one_minus_q.set_coeff(1, mp(-1));
        CHECK(one_minus_q * g == Series::one(N));
    }
    SECTION("inverse of 1 - q - q^2 gives Fibonacci numbers") {
        Series f(4);
        f.set_coeff(0, mp(1));
        f.set_coeff(1, mp(-1));
        f.set_coeff(2, mp(-1));
        Series inv = f.inverse();
        long fib[5] = {1, 1, 2, 3, 5};
        for (int k = 0; k <= 4; ++k) CHECK(inv.coeff(k) == mp(fib[k]));
        CHECK(f * inv == Series::one(4));
    }
    SECTION("x + (-x) = 0") {
        Series x = random_series(6, 2);
        CHECK((x + (-x)).is_zero());
    }
    SECTION("order mismatch is an error") {
        Series a(3), b(4);
        CHECK_THROWS(a + b);
        CHECK_THROWS(a * b);
        CHECK_THROWS(equals_to_order(a, b));
    }
    SECTION("inverse requires rational nonzero constant term") {
        Series z(3);
        CHECK_THROWS(z.inverse());
        Series am(3);
        am.set_coeff(0, MarkerPoly::a_power(1));
        CHECK_THROWS(am.inverse());
    }
}

TEST_CASE("multiplication is commutative and associative to order") {
    for (int trial = 0; trial < 10; ++trial) {
        Series a = random_series(7, 2), b = random_series(7, 2), c = random_series(7, 2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("product spec times its inverse spec is one") {
    ProductSpec s;
    s.factors = {{0, 1, 2}, {1, 2, 3}, {2, 3, -2}};
    ProductSpec inv;
    for (auto f : s.factors) {
        f.mult = -f.mult;
        inv.factors.push_back(f);
    }
    int N = 8;
    CHECK(series_from_product(s, N) * series_from_product(inv, N) == Series::one(N));
}

TEST_CASE("derivative at one") {
    SECTION("simple polynomial coefficient") {
        Series s(1);
        MarkerPoly c = mp(1);
        c += MarkerPoly::a_power(2);
        s.set_coeff(1, c);  // q * (1 + a^2)
        Series d = d_da_at_one(s);
        CHECK(d.coeff(1) == mp(2));
        CHECK(d.coeff(0) == mp(0));
    }
    SECTION("marked plane product against the multiset enumeration oracle") {
        Series d = d_da_at_one(series_from_product(plane_spec(true), 6));
        for (int k = 0; k <= 6; ++k) {
            INFO("k=" << k);
            CHECK(d.coeff(k) == mp(marked_multiset_weight(k)));
        }
        CHECK(d.coeff(2) == mp(4));
        CHECK(d.coeff(3) == mp(10));
    }
    SECTION("linearity and product rule at a = 1") {
        for (int trial = 0; trial < 8; ++trial) {
            Series x = random_series(6, 3), y = random_series(6, 3);
            CHECK(d_da_at_one(x + y) == d_da_at_one(x) + d_da_at_one(y));
            Series lhs = d_da_at_one(x * y);
            Series rhs = d_da_at_one(x) * y.at_a_one() + x.at_a_one() * d_da_at_one(y);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("marker specialization consistency") {
    Series marked = series_from_product(plane_spec(true), 8).at_a_one();
    Series plain = series_from_product(plane_spec(false), 8);
    CHECK(marked == plain);
}

TEST_CASE("equals_to_order reports") {
    Series x = Series::one(4), y = Series::one(4);
    ComparisonReport same = equals_to_order(x, y);
    CHECK(same.pass);
    CHECK(same.rows.size() == 5);
    y.set_coeff(1, mp(1));
    ComparisonReport diff = equals_to_order(x, y);
    CHECK_FALSE(diff.pass);
    CHECK_FALSE(diff.rows[1].match);
    CHECK(diff.rows[0].match);
}
