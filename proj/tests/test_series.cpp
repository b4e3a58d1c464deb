#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbcoh/rng.hpp"
#include "hilbcoh/series.hpp"

using namespace hilbcoh;
using series::Monomial;
using series::Series;
using series::VarSet;

namespace {

VarSet t_var() {
    return VarSet({"t"}, {1});
}

// random sparse series over {t, q} with q capped, for the ring-law checks
Series random_series(const VarSet& vars, int order, Rng& rng) {
    Series s(vars, order);
    const int n_terms = static_cast<int>(rng.next_long(0, 6));
    for (int i = 0; i < n_terms; ++i) {
        const std::uint32_t te = static_cast<std::uint32_t>(rng.next_long(0, order));
        const std::uint32_t qe = static_cast<std::uint32_t>(rng.next_long(0, 4));
        const Monomial m = vars.monomial({te, qe});
        if (m.weighted_degree() <= order)
            s.add_term(m, rng.next_rational(9, 4));
    }
    return s;
}

} // namespace

TEST_CASE("monomials carry their weighted degree") {
    const VarSet vars({"t", "q"}, {1, 0}, {VarSet::kUncapped, 9});
    const Monomial m = vars.monomial({4, 2});
    CHECK(m.weighted_degree() == 4);
    CHECK(m.times(m).weighted_degree() == 8);
    CHECK(vars.unit().is_unit());
    CHECK_THROWS_AS(vars.monomial({1}), DomainError);
}

TEST_CASE("weight-zero variables need caps") {
    CHECK_THROWS_AS(VarSet({"q"}, {0}), DomainError);
    CHECK_NOTHROW(VarSet({"q"}, {0}, {5}));
    CHECK_THROWS_AS(VarSet({"t"}, {-1}), DomainError);
}

TEST_CASE("series addition") {
    const VarSet v = t_var();
    Series one_plus_t = Series::one(v, 4);
    one_plus_t.add_term(v.power_of(0), 1);
    Series one_minus_t = Series::one(v, 4);
    one_minus_t.add_term(v.power_of(0), -1);

    CHECK(one_plus_t + one_minus_t == Series::constant(v, 4, 2));

    const Series zero(v, 4);
    CHECK(one_plus_t + zero == one_plus_t);

    Series a = Series::one(v, 4);
    a.add_term(v.power_of(0, 2), 23);
    const Series b = Series::term(v, 4, v.power_of(0, 2), 1);
    Series expected = Series::one(v, 4);
    expected.add_term(v.power_of(0, 2), 24);
    CHECK(a + b == expected);

    const VarSet other({"s"}, {1});
    CHECK_THROWS_AS(a + Series::one(other, 4), DomainError);
}

TEST_CASE("series multiplication truncates") {
    const VarSet v = t_var();
    Series one_plus_t = Series::one(v, 2);
    one_plus_t.add_term(v.power_of(0), 1);
    Series one_minus_t = Series::one(v, 2);
    one_minus_t.add_term(v.power_of(0), -1);
    Series expected = Series::one(v, 2);
    expected.add_term(v.power_of(0, 2), -1);
    CHECK(one_plus_t * one_minus_t == expected);

    Series a = Series::one(v, 5);
    a.add_term(v.power_of(0, 3), make_rational(7, 2));
    CHECK(a * Series::one(v, 5) == a);

    // (1 + t^2)^2 at order 2: the t^4 term falls away
    Series one_plus_t2 = Series::one(v, 2);
    one_plus_t2.add_term(v.power_of(0, 2), 1);
    Series sq = Series::one(v, 2);
    sq.add_term(v.power_of(0, 2), 2);
    CHECK(one_plus_t2 * one_plus_t2 == sq);
}

TEST_CASE("series inverse") {
    const VarSet v = t_var();
    Series one_minus_t = Series::one(v, 3);
    one_minus_t.add_term(v.power_of(0), -1);
    Series geom = Series::one(v, 3);
    geom.add_term(v.power_of(0, 1), 1);
    geom.add_term(v.power_of(0, 2), 1);
    geom.add_term(v.power_of(0, 3), 1);
    CHECK(one_minus_t.inverse() == geom);

    CHECK(Series::one(v, 5).inverse() == Series::one(v, 5));

    // x of degree 2 at order 2: the x^2 correction exceeds the order
    const VarSet v2({"x"}, {2});
    Series one_plus_x = Series::one(v2, 2);
    one_plus_x.add_term(v2.power_of(0), 1);
    Series inv = one_plus_x.inverse();
    Series expected = Series::one(v2, 2);
    expected.add_term(v2.power_of(0), -1);
    CHECK(inv == expected);
    CHECK(one_plus_x * inv == Series::one(v2, 2));

    CHECK_THROWS_AS(Series(v, 3).inverse(), DomainError);
}

TEST_CASE("coefficient queries past the truncation are loud") {
    const VarSet v = t_var();
    Series a = Series::one(v, 2);
    a.add_term(v.power_of(0, 2), 23);
    CHECK(a.coeff(v.power_of(0, 2)) == 23);
    CHECK(Series::one(v, 2).coeff(v.power_of(0, 2)) == 0);
    CHECK_THROWS_AS(a.coeff(v.power_of(0, 3)), TruncationError);
    CHECK_THROWS_AS(a.add_term(v.power_of(0, 3), 1), DomainError);
}

TEST_CASE("geometric factors") {
    const VarSet v = t_var();
    SUBCASE("power 1 is the geometric series in t^2") {
        const Series g = geometric_factor(v, v.power_of(0, 2), 1, 6);
        Series expected = Series::one(v, 6);
        expected.add_term(v.power_of(0, 2), 1);
        expected.add_term(v.power_of(0, 4), 1);
        expected.add_term(v.power_of(0, 6), 1);
        CHECK(g == expected);
    }
    SUBCASE("power 2 gives binomial coefficients") {
        const Series g = geometric_factor(v, v.power_of(0, 2), 2, 4);
        Series expected = Series::one(v, 4);
        expected.add_term(v.power_of(0, 2), 2);
        expected.add_term(v.power_of(0, 4), 3);
        CHECK(g == expected);
    }
    SUBCASE("high power equals repeated multiplication") {
        const VarSet vq({"t", "q"}, {1, 0}, {VarSet::kUncapped, 4});
        const Monomial e = vq.monomial({2, 1});
        const Series direct = geometric_factor(vq, e, 22, 4);
        Series folded = Series::one(vq, 4);
        const Series single = geometric_factor(vq, e, 1, 4);
        for (int i = 0; i < 22; ++i)
            folded = folded * single;
        CHECK(direct == folded);
        CHECK(direct.coeff(vq.monomial({4, 2})) == 253);
    }
    SUBCASE("zero monomial is rejected") {
        CHECK_THROWS_AS(geometric_factor(v, v.unit(), 1, 4), DomainError);
        CHECK_THROWS_AS(geometric_factor(v, v.power_of(0), 0, 4), DomainError);
    }
    SUBCASE("weight-zero factor terminates at the cap") {
        const VarSet vq({"t", "q"}, {1, 0}, {VarSet::kUncapped, 3});
        const Series g = geometric_factor(vq, vq.monomial({0, 1}), 1, 10);
        CHECK(g.term_count() == 4); // 1 + q + q^2 + q^3
    }
}

TEST_CASE("product expansion") {
    const VarSet v = t_var();
    SUBCASE("empty product is 1") {
        CHECK(product_expand(v, {}, 5) == Series::one(v, 5));
    }
    SUBCASE("stable product to t^4") {
        // (1-t^2)^-23 (1-t^4)^-24 ... = 1 + 23 t^2 + 300 t^4 + O(t^6)
        std::vector<std::pair<Monomial, long>> factors;
        for (int m = 1; 2 * m <= 4; ++m)
            factors.emplace_back(v.power_of(0, static_cast<std::uint32_t>(2 * m)), 23);
        for (int m = 2; 2 * m <= 4; ++m)
            factors.emplace_back(v.power_of(0, static_cast<std::uint32_t>(2 * m)), 1);
        const Series s = product_expand(v, factors, 4);
        CHECK(s.coeff(v.unit()) == 1);
        CHECK(s.coeff(v.power_of(0, 2)) == 23);
        CHECK(s.coeff(v.power_of(0, 4)) == 300);
    }
    SUBCASE("z-product to z^2") {
        const VarSet vz({"z"}, {1});
        std::vector<std::pair<Monomial, long>> factors;
        for (int m = 1; m <= 2; ++m)
            factors.emplace_back(vz.power_of(0, static_cast<std::uint32_t>(m)), 23);
        const Series s = product_expand(vz, factors, 2);
        CHECK(s.coeff(vz.power_of(0, 1)) == 23);
        CHECK(s.coeff(vz.power_of(0, 2)) == 299);
    }
    SUBCASE("result does not depend on factor order") {
        const VarSet vq({"t", "q"}, {1, 0}, {VarSet::kUncapped, 5});
        std::vector<std::pair<Monomial, long>> factors = {
            {vq.monomial({2, 1}), 3},
            {vq.monomial({0, 1}), 1},
            {vq.monomial({4, 1}), 2},
            {vq.monomial({2, 2}), 1},
        };
        const Series forward = product_expand(vq, factors, 8);
        std::reverse(factors.begin(), factors.end());
        CHECK(product_expand(vq, factors, 8) == forward);
    }
    SUBCASE("product equals explicit fold of geometric factors") {
        std::vector<std::pair<Monomial, long>> factors = {
            {v.power_of(0, 2), 5},
            {v.power_of(0, 3), 2},
            {v.power_of(0, 4), 7},
        };
        Series folded = Series::one(v, 9);
        for (const auto& [e, p] : factors)
            folded = folded * geometric_factor(v, e, p, 9);
        CHECK(product_expand(v, factors, 9) == folded);
    }
}

TEST_CASE("ring laws on random sparse series") {
    const VarSet vars({"t", "q"}, {1, 0}, {VarSet::kUncapped, 4});
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const Series a = random_series(vars, 6, rng);
        const Series b = random_series(vars, 6, rng);
        const Series c = random_series(vars, 6, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("inverse roundtrip on random units") {
    const VarSet vars({"t", "q"}, {1, 0}, {VarSet::kUncapped, 4});
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Series a = random_series(vars, 6, rng);
        a = a - Series::constant(vars, 6, a.constant_term());
        a = a + Series::constant(vars, 6, make_rational(rng.next_long(1, 9), rng.next_long(1, 3)));
        CHECK(a * a.inverse() == Series::one(vars, 6));
    }
}

TEST_CASE("truncation monotonicity") {
    const VarSet v = t_var();
    std::vector<std::pair<Monomial, long>> factors;
    for (int m = 1; m <= 6; ++m)
        factors.emplace_back(v.power_of(0, static_cast<std::uint32_t>(m)), 3);
    const Series low = product_expand(v, factors, 5);
    const Series high = product_expand(v, factors, 11);
    CHECK(high.truncated(5) == low);
}

TEST_CASE("exp of a positive series") {
    const VarSet v({"x"}, {2});
    const Series x = Series::term(v, 8, v.power_of(0), 1);
    const Series e = exp_positive(x);
    CHECK(e.coeff(v.power_of(0, 2)) == make_rational(1, 2));
    CHECK(e.coeff(v.power_of(0, 3)) == make_rational(1, 6));
    CHECK(e * exp_positive(-x) == Series::one(v, 8));
    CHECK_THROWS_AS(exp_positive(Series::one(v, 8)), DomainError);
}
