#include "hilbcoh/series.hpp"

#include <algorithm>
#include <sstream>

namespace hilbcoh::series {

namespace {

void require_same_vars(const VarSet& a, const VarSet& b) {
    if (a != b)
        throw DomainError("series over different variable sets");
}

} // namespace

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
        throw DomainError("monomials over different variable sets");
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = exps_[i] + other.exps_[i];
    r.degree_ = degree_ + other.degree_;
    return r;
}

VarSet::VarSet(std::vector<std::string> names, std::vector<int> weights)
    : VarSet(std::move(names), std::move(weights), {}) {}

VarSet::VarSet(std::vector<std::string> names, std::vector<int> weights, std::vector<int> caps)
    : names_(std::move(names)), weights_(std::move(weights)), caps_(std::move(caps)) {
    if (weights_.size() != names_.size())
        throw DomainError("variable weights do not match variable names");
    if (caps_.empty())
        caps_.assign(names_.size(), kUncapped);
    if (caps_.size() != names_.size())
        throw DomainError("variable caps do not match variable names");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (weights_[i] < 0)
            throw DomainError("negative variable weight for '" + names_[i] + "'");
        if (caps_[i] < 0 && caps_[i] != kUncapped)
            throw DomainError("negative cap for '" + names_[i] + "'");
        if (weights_[i] == 0 && caps_[i] == kUncapped)
            throw DomainError("weight-zero variable '" + names_[i] + "' needs a finite cap");
    }
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

Monomial VarSet::monomial(std::vector<std::uint32_t> exponents) const {
    if (exponents.size() != size())
        throw DomainError("exponent vector length does not match variable count");
    Monomial m;
    m.exps_ = std::move(exponents);
    long deg = 0;
    for (std::size_t i = 0; i < m.exps_.size(); ++i)
        deg += static_cast<long>(m.exps_[i]) * weights_[i];
    m.degree_ = static_cast<int>(deg);
    return m;
}

Monomial VarSet::unit() const {
    return monomial(std::vector<std::uint32_t>(size(), 0));
}

Monomial VarSet::power_of(std::size_t i, std::uint32_t e) const {
    std::vector<std::uint32_t> exps(size(), 0);
    exps.at(i) = e;
    return monomial(std::move(exps));
}

bool VarSet::within_caps(const Monomial& m) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (caps_[i] != kUncapped && m.exponent(i) > static_cast<std::uint32_t>(caps_[i]))
            return false;
    return true;
}

long VarSet::max_exponent_sum(int order) const {
    long total = 0;
    for (std::size_t i = 0; i < size(); ++i)
        total += caps_[i] != kUncapped ? caps_[i] : order / std::max(weights_[i], 1);
    return total;
}

Series::Series(VarSet vars, int order) : vars_(std::move(vars)), order_(order) {
    if (order < 0)
        throw DomainError("negative truncation order");
}

Series Series::constant(VarSet vars, int order, Rational value) {
    Series s(std::move(vars), order);
    if (value != 0)
        s.terms_.emplace(s.vars_.unit(), std::move(value));
    return s;
}

Series Series::term(VarSet vars, int order, const Monomial& m, Rational coeff) {
    Series s(std::move(vars), order);
    s.add_term(m, coeff);
    return s;
}

bool Series::admits(const Monomial& m) const {
    return m.weighted_degree() <= order_ && vars_.within_caps(m);
}

Rational Series::coeff(const Monomial& m) const {
    if (m.exponents().size() != vars_.size())
        throw DomainError("coefficient query with mismatched variable count");
    if (!admits(m))
        throw TruncationError("coefficient of a monomial beyond the truncation region");
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const {
    auto it = terms_.find(vars_.unit());
    return it == terms_.end() ? Rational(0) : it->second;
}

Series& Series::add_term(const Monomial& m, const Rational& c) {
    if (m.exponents().size() != vars_.size())
        throw DomainError("term with mismatched variable count");
    if (!admits(m))
        throw DomainError("term beyond the truncation region");
    if (c == 0)
        return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

Series Series::truncated(int new_order) const {
    if (new_order > order_)
        throw DomainError("cannot raise a truncation order");
    Series r(vars_, new_order);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree() <= new_order)
            r.terms_.emplace(m, c);
    return r;
}

Series Series::homogeneous_part(int d) const {
    Series r(vars_, order_);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree() == d)
            r.terms_.emplace(m, c);
    return r;
}

int Series::max_term_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.weighted_degree());
    return d;
}

Series Series::operator-() const {
    Series r(vars_, order_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Series& Series::operator+=(const Series& rhs) {
    *this = *this + rhs;
    return *this;
}

Series operator+(const Series& a, const Series& b) {
    require_same_vars(a.vars_, b.vars_);
    const int order = std::min(a.order_, b.order_);
    Series r(a.vars_, order);
    for (const auto& [m, c] : a.terms_)
        if (m.weighted_degree() <= order)
            r.terms_.emplace(m, c);
    for (const auto& [m, c] : b.terms_) {
        if (m.weighted_degree() > order)
            continue;
        auto [it, inserted] = r.terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                r.terms_.erase(it);
        }
    }
    return r;
}

Series operator-(const Series& a, const Series& b) {
    return a + (-b);
}

Series operator*(const Series& a, const Series& b) {
    require_same_vars(a.vars_, b.vars_);
    const int order = std::min(a.order_, b.order_);
    Series r(a.vars_, order);
    for (const auto& [ma, ca] : a.terms_) {
        if (ma.weighted_degree() > order)
            continue;
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.weighted_degree() + mb.weighted_degree() > order)
                continue;
            Monomial m = ma.times(mb);
            if (!r.vars_.within_caps(m))
                continue;
            Rational prod = ca * cb;
            auto [it, inserted] = r.terms_.emplace(std::move(m), std::move(prod));
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0)
                    r.terms_.erase(it);
            }
        }
    }
    return r;
}

Series operator*(const Series& a, const Rational& c) {
    Series r(a.vars_, a.order_);
    if (c == 0)
        return r;
    for (const auto& [m, coeff] : a.terms_)
        r.terms_.emplace(m, coeff * c);
    return r;
}

Series Series::inverse() const {
    const Rational c0 = constant_term();
    if (c0 == 0)
        throw DomainError("inverse of a series with zero constant term");
    // a = c0 (1 + r)  =>  a^{-1} = c0^{-1} sum_k (-r)^k; r has no constant
    // term, so its powers leave the truncation region after finitely many
    // steps (every variable is weighted or capped).
    const Rational c0_inv = Rational(1) / c0;
    Series r_part = (*this * c0_inv) - Series::one(vars_, order_);
    Series acc = Series::one(vars_, order_);
    Series pow = Series::one(vars_, order_);
    const long limit = vars_.max_exponent_sum(order_) + 1;
    for (long k = 1; k <= limit; ++k) {
        pow = pow * r_part;
        if (pow.is_zero())
            break;
        acc = (k % 2 == 1) ? acc - pow : acc + pow;
    }
    return acc * c0_inv;
}

std::string Series::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        bool printed_coeff = false;
        if (c != 1 || m.is_unit()) {
            out << rational_to_string(c);
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (m.exponent(i) == 0)
                continue;
            if (printed_coeff)
                out << "*";
            out << vars_.name(i);
            if (m.exponent(i) > 1)
                out << "^" << m.exponent(i);
            printed_coeff = true;
        }
    }
    return out.str();
}

Series geometric_factor(const VarSet& vars, const Monomial& e, long power, int order) {
    if (e.exponents().size() != vars.size())
        throw DomainError("factor monomial with mismatched variable count");
    if (e.is_unit())
        throw DomainError("geometric factor with zero exponent monomial");
    if (power < 1)
        throw DomainError("geometric factor needs power >= 1");
    // (1 - x^e)^(-p) = sum_j C(p-1+j, j) x^(j e)
    Series r(vars, order);
    Monomial m = vars.unit();
    for (unsigned long j = 0;; ++j) {
        if (j > 0) {
            m = m.times(e);
            if (m.weighted_degree() > order || !vars.within_caps(m))
                break;
        }
        r.add_term(m, Rational(binomial(static_cast<unsigned long>(power) - 1 + j, j)));
    }
    return r;
}

Series product_expand(const VarSet& vars,
                      const std::vector<std::pair<Monomial, long>>& factors,
                      int order) {
    Series acc = Series::one(vars, order);
    for (const auto& [e, power] : factors) {
        if (power == 0)
            continue;
        if (e.weighted_degree() > order || !vars.within_caps(e))
            continue; // factor differs from 1 only beyond the truncation region
        acc = acc * geometric_factor(vars, e, power, order);
    }
    return acc;
}

Series exp_positive(const Series& x) {
    if (x.constant_term() != 0)
        throw DomainError("exp of a series with nonzero constant term");
    Series acc = Series::one(x.vars(), x.order());
    Series pow = Series::one(x.vars(), x.order());
    Integer kfact = 1;
    const long limit = x.vars().max_exponent_sum(x.order()) + 1;
    for (long k = 1; k <= limit; ++k) {
        pow = pow * x;
        if (pow.is_zero())
            break;
        kfact *= k;
        acc = acc + pow * make_rational(1, kfact);
    }
    return acc;
}

} // namespace hilbcoh::series
