#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "hilbcoh/surface.hpp"

namespace hilbcoh::kunneth {

/// Class on a product of two finite graded rings, stored as a sparse sum
/// of basis pairs. All basis degrees must be even; odd-degree rings are
/// rejected at construction rather than signed.
class PairClass {
public:
    PairClass(surface::RingHandle left, surface::RingHandle right);

    static PairClass term(surface::RingHandle left, surface::RingHandle right, std::size_t i,
                          std::size_t j, Rational coeff);
    static PairClass unit(surface::RingHandle left, surface::RingHandle right);

    const surface::RingHandle& left_ring() const { return left_; }
    const surface::RingHandle& right_ring() const { return right_; }
    const std::map<std::pair<std::size_t, std::size_t>, Rational>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    PairClass& add_term(std::size_t i, std::size_t j, const Rational& coeff);
    int total_degree(std::size_t i, std::size_t j) const;
    PairClass homogeneous_part(int degree) const;

    PairClass operator-() const;
    friend PairClass operator+(const PairClass& a, const PairClass& b);
    friend PairClass operator-(const PairClass& a, const PairClass& b);
    friend PairClass operator*(const PairClass& a, const PairClass& b);
    friend PairClass operator*(const PairClass& a, const Rational& c);
    friend bool operator==(const PairClass& a, const PairClass& b);

    std::string to_json() const;

private:
    surface::RingHandle left_, right_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> terms_;
};

/// Class on left x mid x right in Kuenneth form.
class TripleClass {
public:
    TripleClass(surface::RingHandle left, surface::RingHandle mid, surface::RingHandle right);

    const surface::RingHandle& left_ring() const { return left_; }
    const surface::RingHandle& mid_ring() const { return mid_; }
    const surface::RingHandle& right_ring() const { return right_; }
    const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    TripleClass& add_term(std::size_t i, std::size_t h, std::size_t j, const Rational& coeff);

    friend TripleClass operator+(const TripleClass& a, const TripleClass& b);
    friend TripleClass operator*(const TripleClass& a, const TripleClass& b);

private:
    surface::RingHandle left_, mid_, right_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> terms_;
};

/// The three projections from M x S x M used to assemble integrands:
/// insertion of the unit in the missing slots.
TripleClass pullback_12(const PairClass& a, const surface::RingHandle& right);
TripleClass pullback_23(const PairClass& a, const surface::RingHandle& left);
TripleClass pullback_2(const surface::RingHandle& left, const surface::RingHandle& mid,
                       const surface::RingHandle& right, const surface::FiniteGradedRing::Element& h);

/// Fiber integration over the middle factor.
PairClass push_13(const TripleClass& x);

/// Multiplies each term of total degree 2i by (-1)^i.
PairClass dual_class(const PairClass& a);

/// Integral over both factors.
Rational pair_integral(const PairClass& a);

/// Kuenneth diagonal: sum_a f_a (x) f^a over a Poincare-dual basis pair.
PairClass diagonal_class(const surface::RingHandle& ring);

/// Pushforward along the diagonal, Delta_*(x) = sum_a f_a (x) (x f^a);
/// satisfies the projection formula against pair_integral.
PairClass diagonal_pushforward(const surface::RingHandle& ring, const surface::CohClass& x);

/// ch of the ideal sheaf of the diagonal: 1 (x) 1 - Delta_*(todd^{-1}).
PairClass ch_ideal_of_diagonal(const surface::RingHandle& ring);

/// exp(x) for a class with no degree-0 term; terminates because the rings
/// are finite.
PairClass pair_exp(const PairClass& x);

struct GammaResult {
    PairClass cm;
    PairClass cm_minus_1;
};

/// The diagonal-class formula: pushes
/// dual(alpha1) . alpha2 . todd through the triple product, reads the
/// result as an exponential Chern character, converts to a total Chern
/// class, inverts it, and returns the degree-2m and degree-2(m-1)
/// components.
GammaResult gamma(const PairClass& alpha1, const PairClass& alpha2, int m);

} // namespace hilbcoh::kunneth
