#include "hilbcoh/stablering.hpp"

#include <algorithm>
#include <sstream>

namespace hilbcoh::stablering {

using series::Monomial;
using series::Series;
using series::VarSet;

namespace {

VarSet t_var() {
    return VarSet({"t"}, {1});
}

// 1/(1-t^2)^(b2+1) * prod_{m=2..m_max} 1/(1-t^{2m})^(b2+2) to order k.
Series generator_series(int b2, int m_max, int k) {
    const VarSet vars = t_var();
    std::vector<std::pair<Monomial, long>> factors;
    if (m_max >= 1)
        factors.emplace_back(vars.power_of(0, 2), b2 + 1);
    for (int m = 2; m <= m_max && 2 * m <= k; ++m)
        factors.emplace_back(vars.power_of(0, static_cast<std::uint32_t>(2 * m)), b2 + 2);
    return product_expand(vars, factors, k);
}

Integer t_coefficient(const Series& s, int k) {
    return require_integer(s.coeff(s.vars().power_of(0, static_cast<std::uint32_t>(k))),
                           "graded dimension");
}

} // namespace

Integer stable_dim(int b2, int k) {
    if (b2 < 0 || k < 0)
        throw DomainError("stable_dim needs b2 >= 0 and k >= 0");
    return t_coefficient(generator_series(b2, k / 2, k), k);
}

Series stable_series(int b2, int order) {
    if (b2 < 0 || order < 0)
        throw DomainError("stable_series needs b2 >= 0 and order >= 0");
    return generator_series(b2, order / 2, order);
}

Integer finite_dim(int b2, int n, int k) {
    if (b2 < 0 || n < 1 || k < 0)
        throw DomainError("finite_dim needs b2 >= 0, n >= 1, k >= 0");
    return t_coefficient(generator_series(b2, n, k), k);
}

Integer ideal_dim(int b2, int n, int k) {
    if (b2 < 0 || n < 1)
        throw DomainError("ideal_dim needs b2 >= 0 and n >= 1");
    if (k % 2 != 0)
        throw OutOfWindowError("ideal_dim: k must be even");
    // Window n < k <= 4n/3, plus the first nontrivial summand degrees
    // (n+1 for odd n, n+2 for even n), which land outside 4n/3 for n < 6.
    const bool in_window = n < k && 3 * k <= 4 * n;
    const bool first_summand = (n % 2 == 1 && k == n + 1) || (n % 2 == 0 && k == n + 2);
    if (!in_window && !first_summand)
        throw OutOfWindowError("ideal_dim: (n, k) outside the validity window");
    const goettsche::SurfaceProfile profile{b2, "S"};
    auto b = [&](int deg) { return deg < 0 ? Integer(0) : goettsche::betti(profile, n, deg); };
    return b(2 * (k - n - 1)) + b(2 * (k - n - 2));
}

Integer ideal_dim_oracle(int b2, int n, int k) {
    if (b2 < 0 || n < 1 || k < 0)
        throw DomainError("ideal_dim_oracle needs b2 >= 0, n >= 1, k >= 0");
    const goettsche::SurfaceProfile profile{b2, "S"};
    Integer dim = finite_dim(b2, n, k) - goettsche::betti(profile, n, k);
    if (dim < 0)
        throw InvariantError("ideal dimension came out negative");
    return dim;
}

Integer CkPolynomial::coefficient_of_power(int p) const {
    if (p > k || p < lowest_power)
        return 0;
    return coefficients[static_cast<std::size_t>(k - p)];
}

Integer CkPolynomial::value_at_one() const {
    Integer total = 0;
    for (const Integer& a : coefficients)
        total += a;
    return total;
}

Integer CkPolynomial::leading_sum(int n) const {
    Integer total = 0;
    for (int i = 0; i <= k - n - 1 && i < static_cast<int>(coefficients.size()); ++i)
        total += coefficients[static_cast<std::size_t>(i)];
    return total;
}

std::string CkPolynomial::to_json(int b2) const {
    std::ostringstream out;
    out << "{\"b2\":" << b2 << ",\"k\":" << k << ",\"degree\":" << k
        << ",\"lowest_power\":" << lowest_power << ",\"coefficients\":[";
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        out << (i > 0 ? "," : "") << "\"" << coefficients[i].get_str() << "\"";
    out << "]}";
    return out.str();
}

CkPolynomial c_k_poly(int b2, int k) {
    if (b2 < 0 || k < 0)
        throw DomainError("c_k_poly needs b2 >= 0 and k >= 0");
    if (k % 2 != 0)
        throw DomainError("c_k_poly needs even k");
    if (k == 0)
        return CkPolynomial{0, 0, {Integer(1)}};
    const Series expansion = goettsche::rewritten_series(b2, k, k);

    // Collect the q-polynomial sitting at t^k.
    std::vector<Integer> by_power(static_cast<std::size_t>(k) + 1, Integer(0));
    for (const auto& [m, c] : expansion.terms()) {
        if (m.weighted_degree() != k)
            continue;
        by_power.at(m.exponent(1)) = require_integer(c, "c_k coefficient");
    }

    int low = 0;
    while (low <= k && by_power[static_cast<std::size_t>(low)] == 0)
        ++low;
    if (low > k)
        throw InvariantError("c_k polynomial came out zero");
    if (by_power[static_cast<std::size_t>(k)] == 0)
        throw InvariantError("c_k polynomial has degree below k");
    const int expected_low = (k + 3) / 4;
    if (b2 >= 1 && low != expected_low)
        throw InvariantError("c_k lowest power differs from ceil(k/4)");

    Integer at_one = 0;
    for (const Integer& a : by_power)
        at_one += a;
    if (at_one != stable_dim(b2, k))
        throw InvariantError("c_k(1) differs from the stable dimension");

    CkPolynomial poly;
    poly.k = k;
    poly.lowest_power = low;
    for (int p = k; p >= low; --p)
        poly.coefficients.push_back(by_power[static_cast<std::size_t>(p)]);
    return poly;
}

Series z_series(int b2, int order) {
    if (b2 < 0 || order < 0)
        throw DomainError("z_series needs b2 >= 0 and order >= 0");
    const VarSet vars({"z"}, {1});
    std::vector<std::pair<Monomial, long>> factors;
    for (int m = 1; m <= order; ++m)
        factors.emplace_back(vars.power_of(0, static_cast<std::uint32_t>(m)), b2 + 1);
    for (int m = 3; m <= order; ++m)
        factors.emplace_back(vars.power_of(0, static_cast<std::uint32_t>(m)), 1);
    return product_expand(vars, factors, order);
}

RepDims rep_dims(int v, int d) {
    if (v < 1 || d < 0)
        throw DomainError("rep_dims needs v >= 1 and d >= 0");
    auto sym = [&](int e) {
        if (e < 0)
            return Integer(0);
        return binomial(static_cast<unsigned long>(v - 1 + e), static_cast<unsigned long>(e));
    };
    RepDims r;
    r.sym = sym(d);
    r.wedge2 = v >= 2 ? binomial(static_cast<unsigned long>(v), 2) : Integer(0);
    r.vd = r.sym - sym(d - 2);
    return r;
}

Example3Report example3_check(int b2) {
    const goettsche::SurfaceProfile profile{b2, "S"};
    const int h2 = b2 + 1; // dim H^2(S^[3])
    Example3Report rep;
    rep.sym2 = rep_dims(h2, 2).sym;
    rep.h2 = h2;
    rep.b4 = goettsche::betti(profile, 3, 4);
    rep.sym3 = rep_dims(h2, 3).sym;
    rep.wedge2 = rep_dims(h2, 2).wedge2;
    rep.b6 = goettsche::betti(profile, 3, 6);
    rep.v2 = rep_dims(h2, 2).vd;
    rep.identity4_ok = rep.sym2 + rep.h2 == rep.b4;
    rep.identity6_ok = rep.sym3 + 1 + rep.wedge2 == rep.b6;
    rep.reference_ok = rep.sym2 == 276 && rep.h2 == 23 && rep.b4 == 299 && rep.sym3 == 2300 &&
                       rep.wedge2 == 253 && rep.b6 == 2554 && rep.v2 == 275;
    rep.degenerate_ok =
        goettsche::betti(profile, 3, 0) == 1 && rep_dims(h2, 0).sym == 1;
    return rep;
}

} // namespace hilbcoh::stablering
