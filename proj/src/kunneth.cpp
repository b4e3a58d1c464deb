#include "hilbcoh/kunneth.hpp"

#include <sstream>
#include <vector>

#include "hilbcoh/graded_pieces.hpp"

namespace hilbcoh::kunneth {

using surface::CohClass;
using surface::FiniteGradedRing;
using surface::RingHandle;

namespace {

void require_ring(const RingHandle& ring, const char* slot) {
    if (!ring)
        throw DomainError(std::string("null ring handle in ") + slot);
    for (std::size_t i = 0; i < ring->size(); ++i)
        if (ring->degree(i) % 2 != 0)
            throw DomainError("odd-degree basis element encountered");
}

void require_same_ring(const RingHandle& a, const RingHandle& b, const char* what) {
    if (a != b)
        throw DomainError(std::string("ring mismatch in ") + what);
}

} // namespace

PairClass::PairClass(RingHandle left, RingHandle right)
    : left_(std::move(left)), right_(std::move(right)) {
    require_ring(left_, "pair class");
    require_ring(right_, "pair class");
}

PairClass PairClass::term(RingHandle left, RingHandle right, std::size_t i, std::size_t j,
                          Rational coeff) {
    PairClass p(std::move(left), std::move(right));
    p.add_term(i, j, coeff);
    return p;
}

PairClass PairClass::unit(RingHandle left, RingHandle right) {
    const std::size_t ui = left->unit_index();
    const std::size_t uj = right->unit_index();
    return term(std::move(left), std::move(right), ui, uj, 1);
}

PairClass& PairClass::add_term(std::size_t i, std::size_t j, const Rational& coeff) {
    if (i >= left_->size() || j >= right_->size())
        throw DomainError("pair term index out of range");
    if (coeff == 0)
        return *this;
    auto [it, inserted] = terms_.emplace(std::make_pair(i, j), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

int PairClass::total_degree(std::size_t i, std::size_t j) const {
    return left_->degree(i) + right_->degree(j);
}

PairClass PairClass::homogeneous_part(int degree) const {
    PairClass out(left_, right_);
    for (const auto& [key, c] : terms_)
        if (total_degree(key.first, key.second) == degree)
            out.terms_.emplace(key, c);
    return out;
}

PairClass PairClass::operator-() const {
    PairClass out(left_, right_);
    for (const auto& [key, c] : terms_)
        out.terms_.emplace(key, -c);
    return out;
}

PairClass operator+(const PairClass& a, const PairClass& b) {
    require_same_ring(a.left_, b.left_, "pair addition");
    require_same_ring(a.right_, b.right_, "pair addition");
    PairClass out = a;
    for (const auto& [key, c] : b.terms_)
        out.add_term(key.first, key.second, c);
    return out;
}

PairClass operator-(const PairClass& a, const PairClass& b) {
    return a + (-b);
}

PairClass operator*(const PairClass& a, const PairClass& b) {
    require_same_ring(a.left_, b.left_, "pair product");
    require_same_ring(a.right_, b.right_, "pair product");
    PairClass out(a.left_, a.right_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            const Rational c = ca * cb;
            for (const auto& [i, si] : a.left_->basis_product(ka.first, kb.first))
                for (const auto& [j, sj] : a.right_->basis_product(ka.second, kb.second))
                    out.add_term(i, j, c * si * sj);
        }
    return out;
}

PairClass operator*(const PairClass& a, const Rational& c) {
    PairClass out(a.left_, a.right_);
    if (c == 0)
        return out;
    for (const auto& [key, v] : a.terms_)
        out.terms_.emplace(key, v * c);
    return out;
}

bool operator==(const PairClass& a, const PairClass& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.terms_ == b.terms_;
}

std::string PairClass::to_json() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first)
            out << ",";
        first = false;
        out << "{\"left\":" << key.first << ",\"right\":" << key.second << ",\"coeff\":\""
            << rational_to_string(c) << "\"}";
    }
    out << "]";
    return out.str();
}

TripleClass::TripleClass(RingHandle left, RingHandle mid, RingHandle right)
    : left_(std::move(left)), mid_(std::move(mid)), right_(std::move(right)) {
    require_ring(left_, "triple class");
    require_ring(mid_, "triple class");
    require_ring(right_, "triple class");
}

TripleClass& TripleClass::add_term(std::size_t i, std::size_t h, std::size_t j,
                                   const Rational& coeff) {
    if (i >= left_->size() || h >= mid_->size() || j >= right_->size())
        throw DomainError("triple term index out of range");
    if (coeff == 0)
        return *this;
    auto [it, inserted] = terms_.emplace(std::make_tuple(i, h, j), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

TripleClass operator+(const TripleClass& a, const TripleClass& b) {
    require_same_ring(a.left_, b.left_, "triple addition");
    require_same_ring(a.mid_, b.mid_, "triple addition");
    require_same_ring(a.right_, b.right_, "triple addition");
    TripleClass out = a;
    for (const auto& [key, c] : b.terms_)
        out.add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    return out;
}

TripleClass operator*(const TripleClass& a, const TripleClass& b) {
    require_same_ring(a.left_, b.left_, "triple product");
    require_same_ring(a.mid_, b.mid_, "triple product");
    require_same_ring(a.right_, b.right_, "triple product");
    TripleClass out(a.left_, a.mid_, a.right_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            const Rational c = ca * cb;
            for (const auto& [i, si] : a.left_->basis_product(std::get<0>(ka), std::get<0>(kb)))
                for (const auto& [h, sh] :
                     a.mid_->basis_product(std::get<1>(ka), std::get<1>(kb)))
                    for (const auto& [j, sj] :
                         a.right_->basis_product(std::get<2>(ka), std::get<2>(kb)))
                        out.add_term(i, h, j, c * si * sh * sj);
        }
    return out;
}

TripleClass pullback_12(const PairClass& a, const RingHandle& right) {
    TripleClass out(a.left_ring(), a.right_ring(), right);
    const std::size_t unit = right->unit_index();
    for (const auto& [key, c] : a.terms())
        out.add_term(key.first, key.second, unit, c);
    return out;
}

TripleClass pullback_23(const PairClass& a, const RingHandle& left) {
    // a lives on M x S; the M factor goes to the third slot.
    TripleClass out(left, a.right_ring(), a.left_ring());
    const std::size_t unit = left->unit_index();
    for (const auto& [key, c] : a.terms())
        out.add_term(unit, key.second, key.first, c);
    return out;
}

TripleClass pullback_2(const RingHandle& left, const RingHandle& mid, const RingHandle& right,
                       const FiniteGradedRing::Element& h) {
    TripleClass out(left, mid, right);
    if (h.size() != mid->size())
        throw DomainError("middle element size does not match ring basis");
    const std::size_t ul = left->unit_index();
    const std::size_t ur = right->unit_index();
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != 0)
            out.add_term(ul, i, ur, h[i]);
    return out;
}

PairClass push_13(const TripleClass& x) {
    PairClass out(x.left_ring(), x.right_ring());
    const FiniteGradedRing& mid = *x.mid_ring();
    for (const auto& [key, c] : x.terms()) {
        const Rational w = mid.integral_of_basis(std::get<1>(key));
        if (w != 0)
            out.add_term(std::get<0>(key), std::get<2>(key), c * w);
    }
    return out;
}

PairClass dual_class(const PairClass& a) {
    PairClass out(a.left_ring(), a.right_ring());
    for (const auto& [key, c] : a.terms()) {
        const int degree = a.total_degree(key.first, key.second);
        if (degree % 2 != 0)
            throw DomainError("dual of an odd-degree class");
        out.add_term(key.first, key.second, (degree / 2) % 2 == 0 ? c : -c);
    }
    return out;
}

Rational pair_integral(const PairClass& a) {
    Rational total = 0;
    for (const auto& [key, c] : a.terms())
        total += c * a.left_ring()->integral_of_basis(key.first) *
                 a.right_ring()->integral_of_basis(key.second);
    return total;
}

PairClass diagonal_class(const RingHandle& ring) {
    require_ring(ring, "diagonal class");
    const auto duals = surface::poincare_dual_basis(*ring);
    PairClass out(ring, ring);
    for (std::size_t a = 0; a < ring->size(); ++a) {
        const auto dual = ring->from_coh(duals[a]);
        for (std::size_t j = 0; j < dual.size(); ++j)
            if (dual[j] != 0)
                out.add_term(a, j, dual[j]);
    }
    return out;
}

PairClass diagonal_pushforward(const RingHandle& ring, const CohClass& x) {
    require_ring(ring, "diagonal pushforward");
    const auto duals = surface::poincare_dual_basis(*ring);
    const auto xe = ring->from_coh(x);
    PairClass out(ring, ring);
    for (std::size_t a = 0; a < ring->size(); ++a) {
        const auto prod = ring->mul(xe, ring->from_coh(duals[a]));
        for (std::size_t j = 0; j < prod.size(); ++j)
            if (prod[j] != 0)
                out.add_term(a, j, prod[j]);
    }
    return out;
}

PairClass ch_ideal_of_diagonal(const RingHandle& ring) {
    const CohClass td_inv = surface::coh_inverse(*ring, ring->todd());
    return PairClass::unit(ring, ring) - diagonal_pushforward(ring, td_inv);
}

PairClass pair_exp(const PairClass& x) {
    for (const auto& [key, c] : x.terms())
        if (x.total_degree(key.first, key.second) == 0)
            throw DomainError("exp of a class with a degree-0 term");
    PairClass acc = PairClass::unit(x.left_ring(), x.right_ring());
    PairClass pow = acc;
    Integer kfact = 1;
    const int limit = (x.left_ring()->top_degree() + x.right_ring()->top_degree()) / 2 + 1;
    for (int k = 1; k <= limit; ++k) {
        pow = pow * x;
        if (pow.is_zero())
            break;
        kfact *= k;
        acc = acc + pow * make_rational(1, kfact);
    }
    return acc;
}

GammaResult gamma(const PairClass& alpha1, const PairClass& alpha2, int m) {
    if (m < 1 || m % 2 != 0)
        throw DomainError("gamma needs a positive even m");
    require_same_ring(alpha1.left_ring(), alpha2.left_ring(), "gamma");
    require_same_ring(alpha1.right_ring(), alpha2.right_ring(), "gamma");
    const RingHandle& m_ring = alpha1.left_ring();
    const RingHandle& s_ring = alpha1.right_ring();
    if (!s_ring->is_surface_model())
        throw DomainError("gamma needs a surface-model middle ring");
    if (m_ring->top_degree() + m_ring->top_degree() < 2 * m)
        throw TruncationError("gamma: product ring is truncated below degree 2m");

    const TripleClass integrand =
        pullback_12(dual_class(alpha1), m_ring) * pullback_23(alpha2, m_ring) *
        pullback_2(m_ring, s_ring, m_ring, s_ring->from_coh(s_ring->todd()));
    const PairClass pushed = push_13(integrand);

    const PairClass one = PairClass::unit(m_ring, m_ring);
    std::vector<PairClass> character;
    character.reserve(m + 1);
    for (int i = 0; i <= m; ++i)
        character.push_back(pushed.homogeneous_part(2 * i));
    const auto total = total_class_from_character(character, one);
    const auto inverse = invert_total_class(total, one);
    return GammaResult{inverse[static_cast<std::size_t>(m)],
                       inverse[static_cast<std::size_t>(m - 1)]};
}

} // namespace hilbcoh::kunneth
