#pragma once

#include <string>
#include <vector>

#include "hilbcoh/series.hpp"

namespace hilbcoh::goettsche {

/// A smooth, simply connected, projective surface; only the second Betti
/// number enters the generating series.
struct SurfaceProfile {
    int b2 = 22;
    std::string name = "K3";
};

/// b_k(S^[n]): coefficient of t^k q^n in Goettsche's generating series.
/// Out-of-range degrees (k > 4n, odd k) are zero; negative n or k is a
/// precondition violation.
Integer betti(const SurfaceProfile& profile, int n, int k);

/// (b_0, ..., b_{4n}) for S^[n].
std::vector<Integer> poincare_polynomial(const SurfaceProfile& profile, int n);

/// b_n(S^[n]) - b_n(S^[n-2]) for even n >= 4.
Integer stabilization_gap(const SurfaceProfile& profile, int n);

/// The (k, n) grid of Betti numbers, n = 1..max_n, k = 0..max_k.
class BettiTable {
public:
    BettiTable(SurfaceProfile profile, int max_n, int max_k, std::vector<Integer> entries);

    const SurfaceProfile& profile() const { return profile_; }
    int max_n() const { return max_n_; }
    int max_k() const { return max_k_; }

    const Integer& at(int k, int n) const;
    /// k > 4n: such cells exceed the real dimension of S^[n] and are left
    /// blank in serialized layouts.
    static bool structurally_zero(int k, int n) { return k > 4 * n; }

    /// Appendix layout: header row of n values, first column the even k
    /// values, blank cells where k > 4n. Byte-reproducible.
    std::string to_csv() const;
    std::string to_json() const;

private:
    SurfaceProfile profile_;
    int max_n_;
    int max_k_;
    std::vector<Integer> entries_; // (max_k + 1) x max_n, row-major by k
};

BettiTable betti_table(const SurfaceProfile& profile, int max_n, int max_k);

/// Checks that the generating series equals 1/(1-q) times its rewritten
/// three-product form, coefficient-for-coefficient up to the given orders.
bool rewritten_product_check(const SurfaceProfile& profile, int order_t, int order_q);

/// Expansion of Goettsche's series with the t-degree capped at max_k and
/// the q-degree capped at max_n. Exposed for the stable-ring module and
/// for tests; results are cached per b2.
series::Series goettsche_series(int b2, int max_k, int max_n);

/// The rewritten product without its 1/(1-q) factor; the coefficient of
/// t^k is a polynomial in q.
series::Series rewritten_series(int b2, int max_k, int max_n);

/// Pre-expands the cached generating series so later betti() calls up to
/// these caps are lookups.
void warm_cache(int b2, int max_k, int max_n);

} // namespace hilbcoh::goettsche
