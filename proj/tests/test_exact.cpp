#include "vermaforge/linalg.hpp"
#include "vermaforge/poly.hpp"
#include "vermaforge/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace vermaforge::exact;

namespace {

Poly mk(const RingPtr& ring, const std::string& name) { return Poly::variable(ring, name); }
Poly cst(const RingPtr& ring, long v) { return Poly::constant(ring, Rational(v)); }

// Independent determinant oracle: cofactor expansion along the first row.
Poly cofactor_det(const Matrix<Poly>& m) {
    std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    RingPtr ring = m.at(0, 0).ring();
    Poly det = Poly::zero(ring);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<Poly> sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Poly term = m.at(0, j) * cofactor_det(sub);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

}  // namespace

TEST_CASE("rational parsing and invariants") {
    Rational r = Rational::parse("6/4");
    CHECK(r.to_string() == "3/2");
    CHECK(Rational::parse("-2/4").to_string() == "-1/2");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("3/0"));
    CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
    CHECK(Rational(2, 3).pow(3).to_string() == "8/27");
}

TEST_CASE("polynomial arithmetic matches hand values") {
    RingPtr ring = PolyRing::make({"mu"});
    Poly mu = mk(ring, "mu");

    SECTION("difference of squares") {
        Poly p = (mu + cst(ring, 1)) * (mu - cst(ring, 1));
        CHECK(p == mu * mu - cst(ring, 1));
        CHECK(p.to_string() == "mu^2 - 1");
    }
    SECTION("evaluation") {
        Poly p = mu.pow(3) * (mu - cst(ring, 1));
        CHECK(p.eval_all({{"mu", Rational(2)}}) == Rational(8));
    }
    SECTION("derivative in one variable of several") {
        RingPtr r2 = PolyRing::make({"a", "q"});
        Poly a = mk(r2, "a"), q = mk(r2, "q");
        Poly p = a * q * q;
        CHECK(p.derivative("a") == q * q);
    }
    SECTION("substitution composes") {
        RingPtr rt = PolyRing::make({"t"});
        Poly t = mk(rt, "t");
        Poly p = mu * mu - cst(ring, 1);
        Poly q = p.subst("mu", t + cst(rt, 1));  // (t+1)^2 - 1 = t^2 + 2t
        CHECK(q == t * t + cst(rt, 2) * t);
    }
    SECTION("exact division and failure") {
        Poly p = mu.pow(2) - cst(ring, 1);
        CHECK(p.divexact(mu - cst(ring, 1)) == mu + cst(ring, 1));
        CHECK_THROWS(p.divexact(mu - cst(ring, 2)));
    }
    SECTION("unbound variable in evaluation") {
        RingPtr r2 = PolyRing::make({"mu", "t"});
        Poly p = mk(r2, "mu") * mk(r2, "t");
        CHECK_THROWS(p.eval_all({{"mu", Rational(1)}}));
    }
}

TEST_CASE("root multiplicities") {
    RingPtr ring = PolyRing::make({"mu"});
    Poly mu = mk(ring, "mu");

    CHECK(root_multiplicity(mu.pow(3) * (mu - cst(ring, 1)), Rational(0)) == 3);
    Poly p = (mu - cst(ring, 1)) * mu.pow(2) * (mu + cst(ring, 1)) * (mu + cst(ring, 2));
    CHECK(root_multiplicity(p, Rational(0)) == 2);
    CHECK(root_multiplicity(p, Rational(1)) == 1);
    CHECK(root_multiplicity(p, Rational(-2)) == 1);
    CHECK(root_multiplicity(mu * (mu + cst(ring, 1)), Rational(5)) == 0);
    CHECK_THROWS(root_multiplicity(Poly::zero(ring), Rational(0)));
}

TEST_CASE("bareiss determinant") {
    RingPtr ring = PolyRing::make({"mu"});
    Poly mu = mk(ring, "mu");

    SECTION("1x1 and diagonal") {
        Matrix<Poly> m(1, 1);
        m.at(0, 0) = mu;
        CHECK(bareiss_det(m) == mu);
        Matrix<Poly> d(2, 2, Poly::zero(ring));
        d.at(0, 0) = mu;
        d.at(1, 1) = mu - cst(ring, 1);
        CHECK(bareiss_det(d) == mu * (mu - cst(ring, 1)));
    }
    SECTION("agrees with cofactor expansion on random matrices") {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int trial = 0; trial < 20; ++trial) {
            Matrix<Poly> m(4, 4, Poly::zero(ring));
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    m.at(i, j) = cst(ring, coeff(rng)) * mu + cst(ring, coeff(rng));
            CHECK(bareiss_det(m) == cofactor_det(m));
        }
    }
    SECTION("rejects non-square input") {
        Matrix<Poly> m(2, 3, Poly::zero(ring));
        CHECK_THROWS(bareiss_det(m));
    }
}

TEST_CASE("invariant factor valuations in t") {
    RingPtr ring = PolyRing::make({"t"});
    Poly t = mk(ring, "t");

    SECTION("diagonal examples") {
        Matrix<Poly> m(3, 3, Poly::zero(ring));
        m.at(0, 0) = cst(ring, 1);
        m.at(1, 1) = t;
        m.at(2, 2) = t * t;
        CHECK(invariant_factor_t_valuations(m) == std::vector<int>{0, 1, 2});

        Matrix<Poly> d(2, 2, Poly::zero(ring));
        d.at(0, 0) = t;
        d.at(1, 1) = t;
        CHECK(invariant_factor_t_valuations(d) == std::vector<int>{1, 1});
    }
    SECTION("singular matrix rejected") {
        Matrix<Poly> m(2, 2, Poly::zero(ring));
        m.at(0, 0) = t;
        m.at(0, 1) = t;
        m.at(1, 0) = t;
        m.at(1, 1) = t;
        CHECK_THROWS(invariant_factor_t_valuations(m));
    }
    SECTION("sum equals root multiplicity of the determinant") {
        std::mt19937 rng(777);
        std::uniform_int_distribution<int> coeff(-2, 2);
        std::uniform_int_distribution<int> tp(0, 2);
        for (int trial = 0; trial < 25; ++trial) {
            Matrix<Poly> m(3, 3, Poly::zero(ring));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    m.at(i, j) = cst(ring, coeff(rng)) * t.pow(tp(rng)) + cst(ring, coeff(rng)) * t.pow(tp(rng));
            Poly det = bareiss_det(m);
            if (det.is_zero()) continue;
            auto vals = invariant_factor_t_valuations(m);
            int sum = 0;
            for (int v : vals) sum += v;
            CHECK(sum == root_multiplicity(det, Rational(0)));
        }
    }
}

TEST_CASE("rational rank and nullspace") {
    Matrix<Rational> m(2, 3, Rational(0));
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(2);
    m.at(0, 2) = Rational(3);
    m.at(1, 0) = Rational(2);
    m.at(1, 1) = Rational(4);
    m.at(1, 2) = Rational(6);
    CHECK(rational_rank(m) == 1);
    auto ns = rational_nullspace(m);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
        Rational dot = v[0] + Rational(2) * v[1] + Rational(3) * v[2];
        CHECK(dot.is_zero());
    }
}

TEST_CASE("poly string form is canonical") {
    RingPtr ring = PolyRing::make({"c1", "mu"});
    Poly p = mk(ring, "c1") * mk(ring, "mu").pow(2) + cst(ring, 1);
    CHECK(p.to_string() == "c1*mu^2 + 1");
    Poly q = -mk(ring, "mu") + cst(ring, 2);
    CHECK(q.to_string() == "-mu + 2");
}
