#pragma once

#include <vector>

#include "hilbcoh/rational.hpp"

namespace hilbcoh {

// Conversions between the exponential character pieces a_i, the power sums
// p_i = i! a_i, and the total-class pieces c_i, written over any commutative
// ring element type E with +, binary *, and * by Rational. Index = half the
// cohomological degree; entry 0 of a character vector is ignored (the rank
// never enters the recursions).

/// Newton's identities: k c_k = sum_{j=1..k} (-1)^{j-1} c_{k-j} p_j.
template <class E>
std::vector<E> total_class_from_character(const std::vector<E>& a, const E& one) {
    const std::size_t top = a.empty() ? 0 : a.size() - 1;
    std::vector<E> c;
    c.reserve(top + 1);
    c.push_back(one);
    std::vector<E> p;
    p.push_back(one * Rational(0));
    for (std::size_t j = 1; j <= top; ++j)
        p.push_back(a[j] * Rational(factorial(static_cast<unsigned>(j))));
    for (std::size_t k = 1; k <= top; ++k) {
        E acc = one * Rational(0);
        for (std::size_t j = 1; j <= k; ++j) {
            const E term = c[k - j] * p[j];
            acc = (j % 2 == 1) ? acc + term : acc + term * Rational(-1);
        }
        c.push_back(acc * make_rational(1, static_cast<long>(k)));
    }
    return c;
}

/// Inverse direction: p_k = sum_{j=1..k-1} (-1)^{j-1} c_j p_{k-j}
/// + (-1)^{k-1} k c_k, then a_k = p_k / k!.
template <class E>
std::vector<E> character_from_total_class(const std::vector<E>& c, const E& one) {
    const std::size_t top = c.empty() ? 0 : c.size() - 1;
    std::vector<E> p;
    p.push_back(one * Rational(0));
    std::vector<E> a;
    a.push_back(one * Rational(0));
    for (std::size_t k = 1; k <= top; ++k) {
        E acc = c[k] * Rational(k % 2 == 1 ? static_cast<long>(k)
                                           : -static_cast<long>(k));
        for (std::size_t j = 1; j < k; ++j) {
            const E term = c[j] * p[k - j];
            acc = (j % 2 == 1) ? acc + term : acc + term * Rational(-1);
        }
        p.push_back(acc);
        a.push_back(p[k] * make_rational(1, factorial(static_cast<unsigned>(k))));
    }
    return a;
}

/// Pieces of the multiplicative inverse of a total class with c_0 = 1:
/// u_0 = 1, u_k = -sum_{j=1..k} c_j u_{k-j}.
template <class E>
std::vector<E> invert_total_class(const std::vector<E>& c, const E& one) {
    const std::size_t top = c.empty() ? 0 : c.size() - 1;
    std::vector<E> u;
    u.reserve(top + 1);
    u.push_back(one);
    for (std::size_t k = 1; k <= top; ++k) {
        E acc = one * Rational(0);
        for (std::size_t j = 1; j <= k; ++j)
            acc = acc + c[j] * u[k - j];
        u.push_back(acc * Rational(-1));
    }
    return u;
}

} // namespace hilbcoh
