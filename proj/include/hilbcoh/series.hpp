#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbcoh/rational.hpp"

namespace hilbcoh::series {

class VarSet;

/// Exponent vector over a fixed variable set, with its weighted degree.
/// Minted through VarSet so both invariants (length, degree) hold by
/// construction.
class Monomial {
public:
    Monomial() = default;

    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    int weighted_degree() const { return degree_; }
    bool is_unit() const;

    Monomial times(const Monomial& other) const;

    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    friend class VarSet;
    std::vector<std::uint32_t> exps_;
    int degree_ = 0;
};

/// Named variables with per-variable weights and optional exponent caps.
/// A variable of weight zero must carry a finite cap, otherwise truncation
/// by weighted degree would admit infinitely many monomials.
class VarSet {
public:
    static constexpr int kUncapped = -1;

    VarSet(std::vector<std::string> names, std::vector<int> weights);
    VarSet(std::vector<std::string> names, std::vector<int> weights, std::vector<int> caps);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int weight(std::size_t i) const { return weights_[i]; }
    int cap(std::size_t i) const { return caps_[i]; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    Monomial monomial(std::vector<std::uint32_t> exponents) const;
    Monomial unit() const;
    /// x_i^e
    Monomial power_of(std::size_t i, std::uint32_t e = 1) const;

    /// Within every per-variable cap (weighted degree is not checked here).
    bool within_caps(const Monomial& m) const;
    /// Largest possible sum of exponents of an admissible monomial at the
    /// given order; bounds power iterations.
    long max_exponent_sum(int order) const;

    friend bool operator==(const VarSet& a, const VarSet& b) {
        return a.names_ == b.names_ && a.weights_ == b.weights_ && a.caps_ == b.caps_;
    }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::vector<int> caps_;
};

/// Sparse truncated formal power series with exact rational coefficients.
/// Stored monomials satisfy weighted_degree <= order() and every
/// per-variable cap; zero coefficients are never stored. Immutable value
/// type: all operations return new series.
class Series {
public:
    Series(VarSet vars, int order);

    static Series constant(VarSet vars, int order, Rational value);
    static Series one(VarSet vars, int order) { return constant(std::move(vars), order, 1); }
    static Series term(VarSet vars, int order, const Monomial& m, Rational coeff);

    const VarSet& vars() const { return vars_; }
    int order() const { return order_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Stored coefficient or zero. Requesting a monomial beyond the
    /// truncation order or a cap throws TruncationError: a zero there would
    /// be indistinguishable from an under-truncated computation.
    Rational coeff(const Monomial& m) const;

    Rational constant_term() const;

    /// Adds c * m into this series (builder; throws DomainError if m is out
    /// of range for this series).
    Series& add_term(const Monomial& m, const Rational& c);

    /// Re-truncation to a lower (or equal) order.
    Series truncated(int new_order) const;

    /// Sum of the stored terms of exact weighted degree d.
    Series homogeneous_part(int d) const;
    int max_term_degree() const;

    /// Multiplicative inverse; requires a nonzero constant term.
    Series inverse() const;

    Series operator-() const;
    Series& operator+=(const Series& rhs);

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Rational& c);
    friend Series operator*(const Rational& c, const Series& a) { return a * c; }

    friend bool operator==(const Series& a, const Series& b) {
        return a.vars_ == b.vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string to_string() const;

private:
    bool admits(const Monomial& m) const;

    VarSet vars_;
    int order_;
    std::map<Monomial, Rational> terms_;
};

/// Expansion of (1 - x^e)^(-power) to the given order. The factor monomial
/// must be nonzero and must leave the truncation region after finitely many
/// steps; power >= 1.
Series geometric_factor(const VarSet& vars, const Monomial& e, long power, int order);

/// Product of geometric factors (1 - x^e)^(-p). Factors whose monomial
/// already falls outside the truncation region contribute 1 and are
/// skipped; p = 0 factors are skipped as well. The result does not depend
/// on the factor ordering.
Series product_expand(const VarSet& vars,
                      const std::vector<std::pair<Monomial, long>>& factors,
                      int order);

/// exp(x) truncated; requires zero constant term.
Series exp_positive(const Series& x);

} // namespace hilbcoh::series
