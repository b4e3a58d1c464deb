#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbcoh/rational.hpp"

namespace hilbcoh::surface {

/// Cohomology class of a surface with b1 = 0: rational multiples of the
/// unit (degree 0), the e_i (degree 2) and the point class (degree 4).
struct CohClass {
    Rational r;
    std::vector<Rational> l;
    Rational s;

    friend bool operator==(const CohClass& a, const CohClass& b) {
        return a.r == b.r && a.l == b.l && a.s == b.s;
    }
};

/// Finite-dimensional graded commutative ring presented by a basis with
/// even degrees, sparse structure constants, and an integration functional.
/// Covers both the H*(S) model built by make_k3 (basis 1, e_1..e_b2, pt
/// with e_i e_j = Q_ij pt) and free even truncated algebras.
class FiniteGradedRing {
public:
    using BasisProduct = std::vector<std::pair<std::size_t, Rational>>;
    using Element = std::vector<Rational>; // dense over the basis

    static FiniteGradedRing make_k3(std::vector<std::vector<Integer>> gram,
                                    CohClass todd = CohClass{1, {}, 2});
    static FiniteGradedRing make_free_even(const std::vector<int>& generator_degrees,
                                           int truncation);

    std::size_t size() const { return degrees_.size(); }
    int degree(std::size_t i) const { return degrees_[i]; }
    int top_degree() const;
    std::size_t unit_index() const { return unit_; }
    const std::string& basis_name(std::size_t i) const { return names_[i]; }
    const BasisProduct& basis_product(std::size_t i, std::size_t j) const;
    const Rational& integral_of_basis(std::size_t i) const { return integral_[i]; }

    Element zero_element() const { return Element(size(), Rational(0)); }
    Element unit_element() const;
    Element basis_element(std::size_t i) const;
    Element mul(const Element& a, const Element& b) const;
    Element add(const Element& a, const Element& b) const;
    Element scale(const Element& a, const Rational& c) const;
    Rational integrate(const Element& a) const;

    // Surface-model extras; throw DomainError on rings not built by make_k3.
    bool is_surface_model() const { return k3_.has_value(); }
    int b2() const;
    const std::vector<std::vector<Integer>>& gram() const;
    const std::vector<std::vector<Rational>>& gram_inverse() const;
    const CohClass& todd() const;
    Element from_coh(const CohClass& c) const;
    CohClass to_coh(const Element& e) const;

private:
    FiniteGradedRing() = default;

    struct K3Data {
        std::vector<std::vector<Integer>> gram;
        std::vector<std::vector<Rational>> gram_inverse;
        CohClass todd;
    };

    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::size_t unit_ = 0;
    std::vector<std::vector<BasisProduct>> mult_; // size x size
    std::vector<Rational> integral_;
    std::optional<K3Data> k3_;
};

using RingHandle = std::shared_ptr<const FiniteGradedRing>;

/// (r, l, s) -> (r, -l, s): the involution acting by -1 on degree 2.
CohClass dualize(const CohClass& a);

CohClass coh_add(const CohClass& a, const CohClass& b);
CohClass coh_scale(const CohClass& a, const Rational& c);
CohClass coh_mul(const FiniteGradedRing& ring, const CohClass& a, const CohClass& b);
/// Multiplicative inverse; requires r != 0.
CohClass coh_inverse(const FiniteGradedRing& ring, const CohClass& a);

/// The Mukai pairing: integral of dual(a) * b * todd.
Rational pairing_with_td(const FiniteGradedRing& ring, const CohClass& a, const CohClass& b);

/// <(r,l,s), (r',l',s')> = l.l' - r s' - s r' with l.l' through the Gram
/// matrix. The displayed integral pairing and this Mukai-vector form differ
/// by the Todd factor; both are exposed.
Rational mukai_vector_pairing(const FiniteGradedRing& ring, const CohClass& v, const CohClass& w);

/// Basis {f^a} with integral(f_a f^b) = delta, indexed like the ring basis:
/// dual of 1 is pt, dual of e_i is sum_j (Q^{-1})_ij e_j, dual of pt is 1.
std::vector<CohClass> poincare_dual_basis(const FiniteGradedRing& ring);

/// Exact inverse of a symmetric rational matrix; throws DomainError when
/// singular.
std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<Rational>>& m);

/// Gram matrix of b2/2 hyperbolic planes (b2 must be even).
std::vector<std::vector<Integer>> hyperbolic_gram(int b2);

/// Surface description consumed from JSON config files:
/// {"b2": 22, "gram": [[...], ...], "todd": [1, 0, 2]}.
struct SurfaceConfig {
    int b2 = 22;
    std::vector<std::vector<Integer>> gram; // empty -> hyperbolic default
    Rational todd_r = 1;
    Rational todd_s = 2;
};

SurfaceConfig default_surface_config();
SurfaceConfig surface_config_from_json(const std::string& json_text);
RingHandle ring_from_config(const SurfaceConfig& config);

} // namespace hilbcoh::surface
