#pragma once

#include <string>
#include <vector>

#include "hilbcoh/series.hpp"

namespace hilbcoh::chern {

struct Generator {
    std::string name;
    int degree; // positive and even
};

/// Rational polynomial algebra on even-degree generators, truncated above
/// a fixed total degree. All characteristic-class computations happen in
/// algebras of this shape, so graded commutativity carries no signs.
class GradedAlgebra {
public:
    GradedAlgebra(std::vector<Generator> generators, int truncation);

    const series::VarSet& vars() const { return vars_; }
    int truncation() const { return truncation_; }
    int max_half_degree() const { return truncation_ / 2; }
    std::size_t generator_count() const { return vars_.size(); }

    series::Series zero() const;
    series::Series one() const;
    series::Series generator(std::size_t i) const;
    series::Series generator(const std::string& name) const;

    friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
        return a.vars_ == b.vars_ && a.truncation_ == b.truncation_;
    }

private:
    series::VarSet vars_;
    int truncation_;
};

enum class KForm { Character, TotalChern };

/// A K-theory class surrogate: either an exponential Chern character
/// (degree-0 piece = rank) or a total Chern class (degree-0 piece = 1),
/// with graded pieces indexed by half-degree in a GradedAlgebra.
class KVector {
public:
    static KVector character(GradedAlgebra algebra, Rational rank, series::Series positive);
    static KVector total_chern(GradedAlgebra algebra, series::Series positive);

    KForm form() const { return form_; }
    const GradedAlgebra& algebra() const { return algebra_; }
    /// Degree-0 piece: the rank for character form, 1 for total-Chern form.
    const Rational& degree_zero() const { return degree_zero_; }
    const series::Series& positive_part() const { return positive_; }

    /// Homogeneous piece of degree 2i (i >= 1).
    series::Series piece(int i) const;
    /// All pieces 1..max_half_degree as a vector indexed by half-degree;
    /// entry 0 is the zero series.
    std::vector<series::Series> pieces() const;
    /// degree_zero + positive part, as one series.
    series::Series full() const;

    /// Sum of characters (ranks add); both operands must be character form
    /// over the same algebra.
    friend KVector operator+(const KVector& x, const KVector& y);
    friend bool operator==(const KVector& x, const KVector& y);

private:
    KVector(KForm form, GradedAlgebra algebra, Rational degree_zero, series::Series positive);

    KForm form_;
    GradedAlgebra algebra_;
    Rational degree_zero_;
    series::Series positive_;
};

/// Exponential Chern character -> total Chern class, by Newton's
/// identities applied to the power sums p_i = i! a_i.
KVector ell(const KVector& ch);

/// Total Chern class -> exponential Chern character with the given rank.
KVector ell_inverse(const KVector& c, const Rational& rank);

/// c(-E): the multiplicative inverse of a total Chern class.
KVector k_negate(const KVector& c);

/// ch(E (x) L) = ch(E) exp(l1) for a degree-2 class l1.
KVector twist_by_line(const KVector& ch, const series::Series& l1);

/// Determinant of the size x size matrix with (i, j) entry c_{j-i+t}
/// (c_0 = 1, negative indices 0); homogeneous of degree 2 t size.
series::Series delta_det(int t, int size, const KVector& c);

/// JSON serialization:
/// {"generators": [{"name": ..., "degree": ...}, ...], "truncation": D,
///  "form": "character"|"total-chern", "rank": "r",
///  "pieces": [{"degree": 2i, "terms": [{"monomial": {name: exp, ...},
///              "coeff": "p/q"}, ...]}, ...]}
KVector kvector_from_json(const std::string& json_text);
std::string kvector_to_json(const KVector& v);
std::string element_to_json(const series::Series& element);

} // namespace hilbcoh::chern
