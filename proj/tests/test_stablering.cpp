#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbcoh/goettsche.hpp"
#include "hilbcoh/stablering.hpp"

using namespace hilbcoh;

TEST_CASE("stable dimensions") {
    CHECK(stablering::stable_dim(22, 0) == 1);
    CHECK(stablering::stable_dim(22, 2) == 23);
    CHECK(stablering::stable_dim(22, 4) == 300);
    CHECK(stablering::stable_dim(22, 6) == 2876);
    CHECK(stablering::stable_dim(22, 8) == 22450);
    CHECK(stablering::stable_dim(22, 3) == 0);
    CHECK_THROWS_AS(stablering::stable_dim(22, -1), DomainError);
}

TEST_CASE("finite ring dimensions") {
    // generators above degree 2n cannot reach degree k <= 2n
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 2 * n; ++k)
            CHECK(stablering::finite_dim(22, n, k) == stablering::stable_dim(22, k));

    CHECK(stablering::finite_dim(22, 1, 4) == 276); // Sym^2 of a 23-dim space
    CHECK(stablering::finite_dim(22, 1, 6) == 2300);
    // n = 3, k = 6: Sym^3(23) + 23*24 + 24 by direct expansion
    CHECK(stablering::finite_dim(22, 3, 6) == 2300 + 552 + 24);
    CHECK_THROWS_AS(stablering::finite_dim(22, 0, 2), DomainError);
}

TEST_CASE("relation-ideal dimensions in the closed-form window") {
    CHECK(stablering::ideal_dim(22, 3, 4) == 1);
    CHECK(stablering::ideal_dim(22, 4, 6) == 24);
    CHECK(stablering::ideal_dim(22, 9, 12) == 300 + 23);
    CHECK_THROWS_AS(stablering::ideal_dim(22, 5, 10), OutOfWindowError);
    CHECK_THROWS_AS(stablering::ideal_dim(22, 4, 5), OutOfWindowError); // odd k
    CHECK_THROWS_AS(stablering::ideal_dim(22, 4, 4), OutOfWindowError); // k <= n
}

TEST_CASE("ideal dimension oracle") {
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(stablering::ideal_dim_oracle(22, n, k) == 0);
    CHECK(stablering::ideal_dim_oracle(22, 3, 4) == 1); // 300 - 299
    // n = 2, k = 6: dim R^[2]_6 - b_6(S^[2]) = 2852 - 23
    CHECK(stablering::ideal_dim_oracle(22, 2, 6) == 2829);
}

TEST_CASE("closed form matches the oracle across the window") {
    for (int n = 2; n <= 15; ++n)
        for (int k = n + 1; 3 * k <= 4 * n; ++k) {
            if (k % 2 != 0)
                continue;
            CHECK(stablering::ideal_dim(22, n, k) == stablering::ideal_dim_oracle(22, n, k));
        }
}

TEST_CASE("stable dimension equals the stabilized Betti number") {
    const goettsche::SurfaceProfile k3{22, "K3"};
    for (int k = 0; k <= 10; k += 2)
        for (int n = k; n <= 12; ++n)
            CHECK(stablering::stable_dim(22, k) == goettsche::betti(k3, n, k));
}

TEST_CASE("c_k polynomials") {
    const auto c0 = stablering::c_k_poly(22, 0);
    CHECK(c0.coefficients == std::vector<Integer>{1});
    CHECK(c0.value_at_one() == 1);

    // c_2(q) = q^2 + 22 q: one monomial of bidegree (2,2), b2 of (2,1)
    const auto c2 = stablering::c_k_poly(22, 2);
    CHECK(c2.coefficients == std::vector<Integer>{1, 22});
    CHECK(c2.lowest_power == 1);

    for (int k = 2; k <= 16; k += 2) {
        const auto ck = stablering::c_k_poly(22, k);
        CHECK(ck.k == k);
        CHECK(ck.lowest_power == (k + 3) / 4);
        CHECK(ck.coefficients.front() == 1); // a_0 counts one monomial
        CHECK(ck.coefficients.back() != 0);
        CHECK(ck.value_at_one() == stablering::stable_dim(22, k));
    }
    CHECK_THROWS_AS(stablering::c_k_poly(22, 3), DomainError);
}

TEST_CASE("leading-coefficient sums give the stable gap") {
    const goettsche::SurfaceProfile k3{22, "K3"};
    for (int k = 2; k <= 10; k += 2) {
        const auto ck = stablering::c_k_poly(22, k);
        for (int n = 1; n < k; ++n)
            CHECK(stablering::stable_dim(22, k) - goettsche::betti(k3, n, k) ==
                  ck.leading_sum(n));
    }
}

TEST_CASE("z-product expansion") {
    const auto z22 = stablering::z_series(22, 8);
    auto coeff = [&](int i) {
        return z22.coeff(z22.vars().power_of(0, static_cast<std::uint32_t>(i)));
    };
    CHECK(coeff(0) == 1);
    CHECK(coeff(1) == 23);
    CHECK(coeff(2) == 299);
    for (int i = 0; i <= 8; ++i) {
        const Integer lower =
            2 * i >= 4 ? stablering::stable_dim(22, 2 * i - 4) : Integer(0);
        CHECK(coeff(i) == stablering::stable_dim(22, 2 * i) - lower);
    }

    const auto z0 = stablering::z_series(0, 4);
    auto c0 = [&](int i) {
        return z0.coeff(z0.vars().power_of(0, static_cast<std::uint32_t>(i)));
    };
    CHECK(c0(0) == 1);
    CHECK(c0(1) == 1);
    CHECK(c0(2) == 2);
}

TEST_CASE("representation dimensions") {
    const auto d2 = stablering::rep_dims(23, 2);
    CHECK(d2.sym == 276);
    CHECK(d2.wedge2 == 253);
    CHECK(d2.vd == 275);
    CHECK(stablering::rep_dims(23, 3).sym == 2300);
    for (int d = 0; d <= 5; ++d)
        CHECK(stablering::rep_dims(1, d).sym == 1);
    CHECK(stablering::rep_dims(4, 0).vd == 1);
}

TEST_CASE("the S^[3] dimension bookkeeping") {
    const auto report = stablering::example3_check();
    CHECK(report.pass());
    CHECK(report.b4 == 299);
    CHECK(report.b6 == 2554);
    CHECK(report.sym2 + report.h2 == report.b4);
    CHECK(report.sym3 + 1 + report.wedge2 == report.b6);

    const auto perturbed = stablering::example3_check(21);
    CHECK_FALSE(perturbed.pass());
    CHECK_FALSE(perturbed.reference_ok);
}
