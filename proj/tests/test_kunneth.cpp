#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbcoh/kunneth.hpp"
#include "hilbcoh/rng.hpp"

using namespace hilbcoh;
using kunneth::PairClass;
using kunneth::TripleClass;
using surface::CohClass;
using surface::FiniteGradedRing;
using surface::RingHandle;

namespace {

RingHandle k3_ring(int b2) {
    return std::make_shared<FiniteGradedRing>(
        FiniteGradedRing::make_k3(surface::hyperbolic_gram(b2)));
}

RingHandle random_k3_ring(Rng& rng, int b2) {
    while (true) {
        std::vector<std::vector<Integer>> gram(static_cast<std::size_t>(b2),
                                               std::vector<Integer>(static_cast<std::size_t>(b2)));
        for (int i = 0; i < b2; ++i)
            for (int j = i; j < b2; ++j) {
                gram[i][j] = Integer(rng.next_long(-3, 3));
                gram[j][i] = gram[i][j];
            }
        try {
            return std::make_shared<FiniteGradedRing>(FiniteGradedRing::make_k3(gram));
        } catch (const DomainError&) {
            // singular draw
        }
    }
}

CohClass random_coh(Rng& rng, int b2) {
    CohClass c{rng.next_rational(4, 2),
               std::vector<Rational>(static_cast<std::size_t>(b2), Rational(0)),
               rng.next_rational(4, 2)};
    for (auto& v : c.l)
        v = rng.next_rational(4, 2);
    return c;
}

PairClass tensor(const RingHandle& ring, const CohClass& a, const CohClass& b) {
    PairClass out(ring, ring);
    const auto ea = ring->from_coh(a);
    const auto eb = ring->from_coh(b);
    for (std::size_t i = 0; i < ea.size(); ++i)
        for (std::size_t j = 0; j < eb.size(); ++j)
            if (ea[i] != 0 && eb[j] != 0)
                out.add_term(i, j, ea[i] * eb[j]);
    return out;
}

} // namespace

TEST_CASE("pullbacks insert units") {
    const auto H = k3_ring(2);
    const std::size_t pt = 3;

    const PairClass unit_pair = PairClass::unit(H, H);
    const TripleClass t2 = kunneth::pullback_2(H, H, H, H->unit_element());
    CHECK(t2.terms().size() == 1);
    CHECK(t2.terms().begin()->first == std::make_tuple(H->unit_index(), H->unit_index(),
                                                       H->unit_index()));

    PairClass a_h(H, H);
    a_h.add_term(1, pt, make_rational(3, 2)); // e1 (x) pt on M x S
    const TripleClass lifted = kunneth::pullback_12(a_h, H);
    CHECK(lifted.terms().size() == 1);
    CHECK(lifted.terms().begin()->first == std::make_tuple(std::size_t{1}, pt, H->unit_index()));
    CHECK(lifted.terms().begin()->second == make_rational(3, 2));

    const TripleClass swapped = kunneth::pullback_23(a_h, H);
    CHECK(swapped.terms().begin()->first == std::make_tuple(H->unit_index(), pt, std::size_t{1}));

    CHECK(unit_pair == PairClass::unit(H, H));
}

TEST_CASE("triple products use the middle structure constants") {
    const auto H = k3_ring(2);
    const std::size_t pt = 3;
    const TripleClass x = kunneth::pullback_2(H, H, H, H->basis_element(1)); // 1 (x) e1 (x) 1
    const TripleClass y = kunneth::pullback_2(H, H, H, H->basis_element(2)); // 1 (x) e2 (x) 1
    const TripleClass xy = x * y;                                            // Q_12 = 1
    CHECK(xy.terms().size() == 1);
    CHECK(xy.terms().begin()->first == std::make_tuple(H->unit_index(), pt, H->unit_index()));
    CHECK(xy.terms().begin()->second == 1);

    const TripleClass unit = kunneth::pullback_2(H, H, H, H->unit_element());
    CHECK((unit * x).terms() == x.terms());
}

TEST_CASE("push_13 integrates the middle slot") {
    const auto H = k3_ring(2);
    const std::size_t pt = 3;
    TripleClass x(H, H, H);
    x.add_term(1, pt, 2, make_rational(5, 3));
    const PairClass pushed = kunneth::push_13(x);
    CHECK(pushed.terms().size() == 1);
    CHECK(pushed.terms().begin()->first == std::make_pair(std::size_t{1}, std::size_t{2}));
    CHECK(pushed.terms().begin()->second == make_rational(5, 3));

    TripleClass y(H, H, H);
    y.add_term(1, H->unit_index(), 2, 1); // middle factor 1 integrates to 0
    CHECK(kunneth::push_13(y).is_zero());

    Rng rng(31);
    for (int i = 0; i < 5; ++i) {
        TripleClass a(H, H, H);
        TripleClass b(H, H, H);
        for (int t = 0; t < 6; ++t) {
            a.add_term(static_cast<std::size_t>(rng.next_long(0, 3)),
                       static_cast<std::size_t>(rng.next_long(0, 3)),
                       static_cast<std::size_t>(rng.next_long(0, 3)), rng.next_rational(4, 2));
            b.add_term(static_cast<std::size_t>(rng.next_long(0, 3)),
                       static_cast<std::size_t>(rng.next_long(0, 3)),
                       static_cast<std::size_t>(rng.next_long(0, 3)), rng.next_rational(4, 2));
        }
        CHECK(kunneth::push_13(a + b) == kunneth::push_13(a) + kunneth::push_13(b));
    }
}

TEST_CASE("dual_class flips signs by half-degree") {
    const auto H = k3_ring(2);
    PairClass a(H, H);
    a.add_term(H->unit_index(), H->unit_index(), 7); // degree 0: fixed
    a.add_term(1, H->unit_index(), 1);               // degree 2: negated
    a.add_term(1, 1, 1);                             // degree 4: fixed
    const PairClass d = kunneth::dual_class(a);
    CHECK(d.terms().at({H->unit_index(), H->unit_index()}) == 7);
    CHECK(d.terms().at({1, H->unit_index()}) == -1);
    CHECK(d.terms().at({1, 1}) == 1);
    CHECK(kunneth::dual_class(d) == a);
}

TEST_CASE("diagonal class") {
    const auto H = k3_ring(22);
    const PairClass diag = kunneth::diagonal_class(H);
    CHECK(diag.terms().size() == 24);
    CHECK(diag.terms().at({H->unit_index(), 23}) == 1); // 1 (x) pt
    CHECK(diag.terms().at({23, H->unit_index()}) == 1); // pt (x) 1

    Rng rng(37);
    for (int i = 0; i < 8; ++i) {
        const CohClass a = random_coh(rng, 22);
        const CohClass b = random_coh(rng, 22);
        const Rational lhs = kunneth::pair_integral(diag * tensor(H, a, b));
        const Rational rhs = H->integrate(H->mul(H->from_coh(a), H->from_coh(b)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("diagonal pushforward satisfies the projection formula") {
    const auto H = k3_ring(4);
    Rng rng(41);
    for (int i = 0; i < 10; ++i) {
        const CohClass x = random_coh(rng, 4);
        const CohClass a = random_coh(rng, 4);
        const CohClass b = random_coh(rng, 4);
        const Rational lhs =
            kunneth::pair_integral(kunneth::diagonal_pushforward(H, x) * tensor(H, a, b));
        const Rational rhs = H->integrate(
            H->mul(H->from_coh(x), H->mul(H->from_coh(a), H->from_coh(b))));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ch of the ideal sheaf of the diagonal") {
    const auto H = k3_ring(4);
    const std::size_t pt = 5;
    const PairClass e = kunneth::ch_ideal_of_diagonal(H);
    // degree 0: rank 1
    CHECK(e.homogeneous_part(0) ==
          PairClass::term(H, H, H->unit_index(), H->unit_index(), 1));
    // degree 4 Kuenneth corners: -(1 (x) pt) - (pt (x) 1)
    const PairClass deg4 = e.homogeneous_part(4);
    CHECK(deg4.terms().at({H->unit_index(), pt}) == -1);
    CHECK(deg4.terms().at({pt, H->unit_index()}) == -1);
}

TEST_CASE("gamma reproduces the diagonal at n = 1") {
    const auto H = k3_ring(2);
    const PairClass e = kunneth::ch_ideal_of_diagonal(H);
    const auto result = kunneth::gamma(e, e, 2);
    CHECK(result.cm == kunneth::diagonal_class(H));
    CHECK(result.cm_minus_1.is_zero());

    Rng rng(43);
    for (int trial = 0; trial < 2; ++trial) {
        const auto R = random_k3_ring(rng, 4);
        const PairClass er = kunneth::ch_ideal_of_diagonal(R);
        const auto res = kunneth::gamma(er, er, 2);
        CHECK(res.cm == kunneth::diagonal_class(R));
        CHECK(res.cm_minus_1.is_zero());
    }
}

TEST_CASE("gamma is invariant under twists pulled back from the moduli factor") {
    const auto H = k3_ring(2);
    const PairClass e = kunneth::ch_ideal_of_diagonal(H);
    const auto base = kunneth::gamma(e, e, 2);
    Rng rng(47);
    for (int trial = 0; trial < 5; ++trial) {
        PairClass l1(H, H);
        PairClass l2(H, H);
        for (std::size_t i = 1; i <= 2; ++i) {
            l1.add_term(i, H->unit_index(), rng.next_rational(3, 3));
            l2.add_term(i, H->unit_index(), rng.next_rational(3, 3));
        }
        const auto twisted =
            kunneth::gamma(e * kunneth::pair_exp(l1), e * kunneth::pair_exp(l2), 2);
        CHECK(twisted.cm == base.cm);
        CHECK(twisted.cm_minus_1 == base.cm_minus_1);
    }
}

TEST_CASE("gamma edge cases") {
    const auto H = k3_ring(2);
    const PairClass zero(H, H);
    const auto res = kunneth::gamma(zero, zero, 2);
    CHECK(res.cm.is_zero());
    CHECK(res.cm_minus_1.is_zero());

    // all outputs have even total degree
    const PairClass e = kunneth::ch_ideal_of_diagonal(H);
    const auto full = kunneth::gamma(e, e, 2);
    for (const auto& [key, c] : full.cm.terms())
        CHECK(full.cm.total_degree(key.first, key.second) % 2 == 0);

    CHECK_THROWS_AS(kunneth::gamma(e, e, 3), DomainError);       // odd m
    CHECK_THROWS_AS(kunneth::gamma(e, e, 6), TruncationError);   // 2m exceeds deg H x H
    const auto other = k3_ring(2);
    const PairClass mismatched(other, other);
    CHECK_THROWS_AS(kunneth::gamma(e, mismatched, 2), DomainError);
}

TEST_CASE("pair_exp") {
    const auto H = k3_ring(2);
    PairClass l(H, H);
    l.add_term(1, H->unit_index(), make_rational(2, 3));
    const PairClass pos = kunneth::pair_exp(l);
    const PairClass neg = kunneth::pair_exp(-l);
    CHECK(pos * neg == PairClass::unit(H, H));
    CHECK_THROWS_AS(kunneth::pair_exp(PairClass::unit(H, H)), DomainError);
}
