#include "hilbcoh/goettsche.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace hilbcoh::goettsche {

using series::Monomial;
using series::Series;
using series::VarSet;

namespace {

VarSet tq_vars(int max_n) {
    return VarSet({"t", "q"}, {1, 0}, {VarSet::kUncapped, max_n});
}

Series expand_goettsche(int b2, int max_k, int max_n) {
    const VarSet vars = tq_vars(max_n);
    std::vector<std::pair<Monomial, long>> factors;
    for (int m = 1; 2 * m - 2 <= max_k && m <= max_n; ++m)
        factors.emplace_back(vars.monomial({static_cast<std::uint32_t>(2 * m - 2),
                                            static_cast<std::uint32_t>(m)}),
                             1);
    for (int m = 1; 2 * m <= max_k && m <= max_n; ++m)
        factors.emplace_back(vars.monomial({static_cast<std::uint32_t>(2 * m),
                                            static_cast<std::uint32_t>(m)}),
                             b2);
    for (int m = 1; 2 * m + 2 <= max_k && m <= max_n; ++m)
        factors.emplace_back(vars.monomial({static_cast<std::uint32_t>(2 * m + 2),
                                            static_cast<std::uint32_t>(m)}),
                             1);
    return product_expand(vars, factors, max_k);
}

struct CachedExpansion {
    int max_k = -1;
    int max_n = -1;
    Series value{VarSet({}, {}), 0};
};

std::mutex cache_mutex;
std::map<int, CachedExpansion>& cache() {
    static std::map<int, CachedExpansion> c;
    return c;
}

// Cached expansion covering at least the requested caps.
Series cached_goettsche(int b2, int max_k, int max_n) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    CachedExpansion& e = cache()[b2];
    if (e.max_k < max_k || e.max_n < max_n) {
        e.max_k = std::max(e.max_k, max_k);
        e.max_n = std::max(e.max_n, max_n);
        e.value = expand_goettsche(b2, e.max_k, e.max_n);
    }
    return e.value;
}

Integer betti_from(const Series& expansion, int n, int k) {
    const Monomial m = expansion.vars().monomial(
        {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n)});
    return require_integer(expansion.coeff(m), "Betti number");
}

void require_profile(const SurfaceProfile& profile) {
    if (profile.b2 < 0)
        throw DomainError("surface profile with negative b2");
}

} // namespace

Series goettsche_series(int b2, int max_k, int max_n) {
    if (b2 < 0 || max_k < 0 || max_n < 0)
        throw DomainError("goettsche_series needs b2, max_k, max_n >= 0");
    return cached_goettsche(b2, max_k, max_n);
}

Series rewritten_series(int b2, int max_k, int max_n) {
    if (b2 < 0 || max_k < 0 || max_n < 0)
        throw DomainError("rewritten_series needs b2, max_k, max_n >= 0");
    const VarSet vars = tq_vars(max_n);
    std::vector<std::pair<Monomial, long>> factors;
    for (int m = 1; 2 * m <= max_k && m + 1 <= max_n; ++m)
        factors.emplace_back(vars.monomial({static_cast<std::uint32_t>(2 * m),
                                            static_cast<std::uint32_t>(m + 1)}),
                             1);
    for (int m = 1; 2 * m <= max_k && m <= max_n; ++m)
        factors.emplace_back(vars.monomial({static_cast<std::uint32_t>(2 * m),
                                            static_cast<std::uint32_t>(m)}),
                             b2);
    for (int m = 2; 2 * m <= max_k && m - 1 <= max_n; ++m)
        factors.emplace_back(vars.monomial({static_cast<std::uint32_t>(2 * m),
                                            static_cast<std::uint32_t>(m - 1)}),
                             1);
    return product_expand(vars, factors, max_k);
}

void warm_cache(int b2, int max_k, int max_n) {
    cached_goettsche(b2, max_k, max_n);
}

Integer betti(const SurfaceProfile& profile, int n, int k) {
    require_profile(profile);
    if (n < 0 || k < 0)
        throw DomainError("betti needs n >= 0 and k >= 0");
    if (k > 4 * n || k % 2 != 0)
        return 0;
    return betti_from(cached_goettsche(profile.b2, k, n), n, k);
}

std::vector<Integer> poincare_polynomial(const SurfaceProfile& profile, int n) {
    require_profile(profile);
    if (n < 0)
        throw DomainError("poincare_polynomial needs n >= 0");
    const Series expansion = cached_goettsche(profile.b2, 4 * n, n);
    std::vector<Integer> result;
    result.reserve(4 * n + 1);
    for (int k = 0; k <= 4 * n; ++k)
        result.push_back(k % 2 == 0 ? betti_from(expansion, n, k) : Integer(0));
    return result;
}

Integer stabilization_gap(const SurfaceProfile& profile, int n) {
    require_profile(profile);
    if (n < 4 || n % 2 != 0)
        throw DomainError("stabilization_gap needs even n >= 4");
    return betti(profile, n, n) - betti(profile, n - 2, n);
}

BettiTable::BettiTable(SurfaceProfile profile, int max_n, int max_k, std::vector<Integer> entries)
    : profile_(std::move(profile)), max_n_(max_n), max_k_(max_k), entries_(std::move(entries)) {
    if (max_n_ < 1 || max_k_ < 0)
        throw DomainError("betti table needs max_n >= 1 and max_k >= 0");
    if (entries_.size() != static_cast<std::size_t>((max_k_ + 1) * max_n_))
        throw InvariantError("betti table entry count mismatch");
}

const Integer& BettiTable::at(int k, int n) const {
    if (k < 0 || k > max_k_ || n < 1 || n > max_n_)
        throw DomainError("betti table index out of range");
    return entries_[static_cast<std::size_t>(k) * max_n_ + (n - 1)];
}

std::string BettiTable::to_csv() const {
    std::ostringstream out;
    out << "k";
    for (int n = 1; n <= max_n_; ++n)
        out << "," << n;
    out << "\n";
    for (int k = 0; k <= max_k_; k += 2) {
        out << k;
        for (int n = 1; n <= max_n_; ++n) {
            out << ",";
            if (!structurally_zero(k, n))
                out << at(k, n).get_str();
        }
        out << "\n";
    }
    return out.str();
}

std::string BettiTable::to_json() const {
    std::ostringstream out;
    out << "{\"b2\":" << profile_.b2 << ",\"max_n\":" << max_n_ << ",\"max_k\":" << max_k_
        << ",\"n\":[";
    for (int n = 1; n <= max_n_; ++n)
        out << (n > 1 ? "," : "") << n;
    out << "],\"k\":[";
    for (int k = 0; k <= max_k_; k += 2)
        out << (k > 0 ? "," : "") << k;
    out << "],\"entries\":[";
    for (int k = 0; k <= max_k_; k += 2) {
        if (k > 0)
            out << ",";
        out << "[";
        for (int n = 1; n <= max_n_; ++n) {
            if (n > 1)
                out << ",";
            if (structurally_zero(k, n))
                out << "null";
            else
                out << "\"" << at(k, n).get_str() << "\"";
        }
        out << "]";
    }
    out << "]}";
    return out.str();
}

BettiTable betti_table(const SurfaceProfile& profile, int max_n, int max_k) {
    require_profile(profile);
    if (max_n < 1 || max_k < 0)
        throw DomainError("betti_table needs max_n >= 1 and max_k >= 0");
    const Series expansion = cached_goettsche(profile.b2, max_k, max_n);
    std::vector<Integer> entries;
    entries.reserve(static_cast<std::size_t>(max_k + 1) * max_n);
    for (int k = 0; k <= max_k; ++k)
        for (int n = 1; n <= max_n; ++n) {
            if (k > 4 * n || k % 2 != 0)
                entries.emplace_back(0);
            else
                entries.push_back(betti_from(expansion, n, k));
        }
    return BettiTable(profile, max_n, max_k, std::move(entries));
}

bool rewritten_product_check(const SurfaceProfile& profile, int order_t, int order_q) {
    require_profile(profile);
    if (order_t < 0 || order_q < 0)
        throw DomainError("rewritten_product_check needs orders >= 0");
    const Series lhs = expand_goettsche(profile.b2, order_t, order_q);
    const VarSet vars = lhs.vars();
    const Series inv_one_minus_q =
        geometric_factor(vars, vars.monomial({0, 1}), 1, order_t);
    const Series rhs = inv_one_minus_q * rewritten_series(profile.b2, order_t, order_q);
    return lhs == rhs;
}

} // namespace hilbcoh::goettsche
