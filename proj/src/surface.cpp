#include "hilbcoh/surface.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace hilbcoh::surface {

namespace {

const FiniteGradedRing::BasisProduct kEmptyProduct{};

std::vector<std::vector<Rational>> to_rational_matrix(const std::vector<std::vector<Integer>>& m) {
    std::vector<std::vector<Rational>> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const Integer& v : m[i])
            r[i].emplace_back(v);
    }
    return r;
}

} // namespace

std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw DomainError("matrix is not square");
    // Gauss-Jordan with exact pivoting.
    std::vector<std::vector<Rational>> a = m;
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw DomainError("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0)
                continue;
            const Rational f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

FiniteGradedRing FiniteGradedRing::make_k3(std::vector<std::vector<Integer>> gram, CohClass todd) {
    const std::size_t b2 = gram.size();
    for (std::size_t i = 0; i < b2; ++i) {
        if (gram[i].size() != b2)
            throw DomainError("Gram matrix is not square");
        for (std::size_t j = 0; j < b2; ++j)
            if (gram[i][j] != gram[j][i])
                throw DomainError("Gram matrix is not symmetric");
    }
    auto gram_inverse = invert_matrix(to_rational_matrix(gram)); // throws when degenerate

    FiniteGradedRing ring;
    const std::size_t n = b2 + 2;
    ring.names_.reserve(n);
    ring.degrees_.reserve(n);
    ring.names_.push_back("1");
    ring.degrees_.push_back(0);
    for (std::size_t i = 1; i <= b2; ++i) {
        ring.names_.push_back("e" + std::to_string(i));
        ring.degrees_.push_back(2);
    }
    ring.names_.push_back("pt");
    ring.degrees_.push_back(4);
    ring.unit_ = 0;

    const std::size_t pt = b2 + 1;
    ring.mult_.assign(n, std::vector<BasisProduct>(n));
    for (std::size_t j = 0; j < n; ++j) {
        ring.mult_[0][j] = {{j, Rational(1)}};
        if (j != 0)
            ring.mult_[j][0] = {{j, Rational(1)}};
    }
    for (std::size_t i = 1; i <= b2; ++i)
        for (std::size_t j = 1; j <= b2; ++j)
            if (gram[i - 1][j - 1] != 0)
                ring.mult_[i][j] = {{pt, Rational(gram[i - 1][j - 1])}};
    // pt times anything of positive degree is zero: rows already empty.

    ring.integral_.assign(n, Rational(0));
    ring.integral_[pt] = 1;

    if (todd.l.empty())
        todd.l.assign(b2, Rational(0));
    if (todd.l.size() != b2)
        throw DomainError("Todd class has a degree-2 part of the wrong size");
    for (const Rational& c : todd.l)
        if (c != 0)
            throw DomainError("only Todd classes with zero degree-2 part are supported");
    ring.k3_ = K3Data{std::move(gram), std::move(gram_inverse), std::move(todd)};
    return ring;
}

FiniteGradedRing FiniteGradedRing::make_free_even(const std::vector<int>& generator_degrees,
                                                  int truncation) {
    for (int d : generator_degrees)
        if (d <= 0 || d % 2 != 0)
            throw DomainError("free even algebra needs positive even generator degrees");
    if (truncation < 0)
        throw DomainError("negative truncation");

    // Basis: exponent vectors of weighted degree <= truncation, ordered by
    // (degree, exponents) for a deterministic layout.
    std::vector<std::vector<std::uint32_t>> exps;
    std::vector<std::uint32_t> current(generator_degrees.size(), 0);
    auto degree_of = [&](const std::vector<std::uint32_t>& e) {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            d += static_cast<long>(e[i]) * generator_degrees[i];
        return d;
    };
    // Enumerate recursively.
    auto enumerate = [&](auto&& self, std::size_t var, long degree_left) -> void {
        if (var == generator_degrees.size()) {
            exps.push_back(current);
            return;
        }
        for (std::uint32_t e = 0;; ++e) {
            const long used = static_cast<long>(e) * generator_degrees[var];
            if (used > degree_left)
                break;
            current[var] = e;
            self(self, var + 1, degree_left - used);
        }
        current[var] = 0;
    };
    enumerate(enumerate, 0, truncation);
    std::sort(exps.begin(), exps.end(), [&](const auto& a, const auto& b) {
        const long da = degree_of(a), db = degree_of(b);
        return da != db ? da < db : a < b;
    });

    FiniteGradedRing ring;
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        index[exps[i]] = i;
        ring.degrees_.push_back(static_cast<int>(degree_of(exps[i])));
        std::string name;
        for (std::size_t v = 0; v < exps[i].size(); ++v) {
            if (exps[i][v] == 0)
                continue;
            if (!name.empty())
                name += "*";
            name += "g" + std::to_string(v + 1);
            if (exps[i][v] > 1)
                name += "^" + std::to_string(exps[i][v]);
        }
        ring.names_.push_back(name.empty() ? "1" : name);
    }
    ring.unit_ = 0;
    const std::size_t n = exps.size();
    ring.mult_.assign(n, std::vector<BasisProduct>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (degree_of(exps[i]) + degree_of(exps[j]) > truncation)
                continue;
            std::vector<std::uint32_t> sum(exps[i].size());
            for (std::size_t v = 0; v < sum.size(); ++v)
                sum[v] = exps[i][v] + exps[j][v];
            ring.mult_[i][j] = {{index.at(sum), Rational(1)}};
        }
    ring.integral_.assign(n, Rational(0));
    return ring;
}

int FiniteGradedRing::top_degree() const {
    int top = 0;
    for (int d : degrees_)
        top = std::max(top, d);
    return top;
}

const FiniteGradedRing::BasisProduct& FiniteGradedRing::basis_product(std::size_t i,
                                                                      std::size_t j) const {
    if (i >= size() || j >= size())
        throw DomainError("basis index out of range");
    return mult_[i][j].empty() ? kEmptyProduct : mult_[i][j];
}

FiniteGradedRing::Element FiniteGradedRing::unit_element() const {
    Element e = zero_element();
    e[unit_] = 1;
    return e;
}

FiniteGradedRing::Element FiniteGradedRing::basis_element(std::size_t i) const {
    Element e = zero_element();
    e.at(i) = 1;
    return e;
}

FiniteGradedRing::Element FiniteGradedRing::mul(const Element& a, const Element& b) const {
    if (a.size() != size() || b.size() != size())
        throw DomainError("element size does not match ring basis");
    Element out = zero_element();
    for (std::size_t i = 0; i < size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < size(); ++j) {
            if (b[j] == 0)
                continue;
            const Rational c = a[i] * b[j];
            for (const auto& [k, s] : mult_[i][j])
                out[k] += c * s;
        }
    }
    return out;
}

FiniteGradedRing::Element FiniteGradedRing::add(const Element& a, const Element& b) const {
    if (a.size() != size() || b.size() != size())
        throw DomainError("element size does not match ring basis");
    Element out = a;
    for (std::size_t i = 0; i < size(); ++i)
        out[i] += b[i];
    return out;
}

FiniteGradedRing::Element FiniteGradedRing::scale(const Element& a, const Rational& c) const {
    Element out = a;
    for (Rational& v : out)
        v *= c;
    return out;
}

Rational FiniteGradedRing::integrate(const Element& a) const {
    if (a.size() != size())
        throw DomainError("element size does not match ring basis");
    Rational total = 0;
    for (std::size_t i = 0; i < size(); ++i)
        if (a[i] != 0)
            total += a[i] * integral_[i];
    return total;
}

int FiniteGradedRing::b2() const {
    if (!k3_)
        throw DomainError("not a surface-model ring");
    return static_cast<int>(k3_->gram.size());
}

const std::vector<std::vector<Integer>>& FiniteGradedRing::gram() const {
    if (!k3_)
        throw DomainError("not a surface-model ring");
    return k3_->gram;
}

const std::vector<std::vector<Rational>>& FiniteGradedRing::gram_inverse() const {
    if (!k3_)
        throw DomainError("not a surface-model ring");
    return k3_->gram_inverse;
}

const CohClass& FiniteGradedRing::todd() const {
    if (!k3_)
        throw DomainError("not a surface-model ring");
    return k3_->todd;
}

FiniteGradedRing::Element FiniteGradedRing::from_coh(const CohClass& c) const {
    const std::size_t n = static_cast<std::size_t>(b2());
    if (c.l.size() != n)
        throw DomainError("cohomology class with wrong degree-2 size");
    Element e = zero_element();
    e[0] = c.r;
    for (std::size_t i = 0; i < n; ++i)
        e[1 + i] = c.l[i];
    e[n + 1] = c.s;
    return e;
}

CohClass FiniteGradedRing::to_coh(const Element& e) const {
    const std::size_t n = static_cast<std::size_t>(b2());
    if (e.size() != size())
        throw DomainError("element size does not match ring basis");
    CohClass c;
    c.r = e[0];
    c.l.assign(e.begin() + 1, e.begin() + 1 + n);
    c.s = e[n + 1];
    return c;
}

CohClass dualize(const CohClass& a) {
    CohClass d = a;
    for (Rational& c : d.l)
        c = -c;
    return d;
}

CohClass coh_add(const CohClass& a, const CohClass& b) {
    if (a.l.size() != b.l.size())
        throw DomainError("cohomology classes of different sizes");
    CohClass out = a;
    out.r += b.r;
    for (std::size_t i = 0; i < out.l.size(); ++i)
        out.l[i] += b.l[i];
    out.s += b.s;
    return out;
}

CohClass coh_scale(const CohClass& a, const Rational& c) {
    CohClass out = a;
    out.r *= c;
    for (Rational& v : out.l)
        v *= c;
    out.s *= c;
    return out;
}

namespace {

Rational gram_dot(const FiniteGradedRing& ring, const std::vector<Rational>& x,
                  const std::vector<Rational>& y) {
    const auto& q = ring.gram();
    Rational total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0 && q[i][j] != 0)
                total += x[i] * y[j] * Rational(q[i][j]);
    }
    return total;
}

} // namespace

CohClass coh_mul(const FiniteGradedRing& ring, const CohClass& a, const CohClass& b) {
    const std::size_t n = static_cast<std::size_t>(ring.b2());
    if (a.l.size() != n || b.l.size() != n)
        throw DomainError("cohomology class with wrong degree-2 size");
    CohClass out;
    out.r = a.r * b.r;
    out.l.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.l[i] = a.r * b.l[i] + b.r * a.l[i];
    out.s = a.r * b.s + b.r * a.s + gram_dot(ring, a.l, b.l);
    return out;
}

CohClass coh_inverse(const FiniteGradedRing& ring, const CohClass& a) {
    if (a.r == 0)
        throw DomainError("inverse of a cohomology class with zero rank");
    const std::size_t n = static_cast<std::size_t>(ring.b2());
    if (a.l.size() != n)
        throw DomainError("cohomology class with wrong degree-2 size");
    CohClass inv;
    inv.r = Rational(1) / a.r;
    inv.l.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        inv.l[i] = -a.l[i] / (a.r * a.r);
    inv.s = gram_dot(ring, a.l, a.l) / (a.r * a.r * a.r) - a.s / (a.r * a.r);
    return inv;
}

Rational pairing_with_td(const FiniteGradedRing& ring, const CohClass& a, const CohClass& b) {
    const CohClass product = coh_mul(ring, coh_mul(ring, dualize(a), b), ring.todd());
    return product.s;
}

Rational mukai_vector_pairing(const FiniteGradedRing& ring, const CohClass& v, const CohClass& w) {
    if (v.l.size() != static_cast<std::size_t>(ring.b2()) || w.l.size() != v.l.size())
        throw DomainError("cohomology class with wrong degree-2 size");
    return gram_dot(ring, v.l, w.l) - v.r * w.s - v.s * w.r;
}

std::vector<CohClass> poincare_dual_basis(const FiniteGradedRing& ring) {
    const std::size_t n = static_cast<std::size_t>(ring.b2());
    const auto& qinv = ring.gram_inverse();
    std::vector<CohClass> duals;
    duals.reserve(n + 2);
    auto zero_l = [&] { return std::vector<Rational>(n, Rational(0)); };
    duals.push_back(CohClass{0, zero_l(), 1}); // dual of 1 is pt
    for (std::size_t i = 0; i < n; ++i) {
        CohClass d{0, zero_l(), 0};
        for (std::size_t j = 0; j < n; ++j)
            d.l[j] = qinv[i][j];
        duals.push_back(std::move(d));
    }
    duals.push_back(CohClass{1, zero_l(), 0}); // dual of pt is 1
    return duals;
}

std::vector<std::vector<Integer>> hyperbolic_gram(int b2) {
    if (b2 < 0 || b2 % 2 != 0)
        throw DomainError("hyperbolic Gram matrix needs even b2 >= 0");
    std::vector<std::vector<Integer>> q(b2, std::vector<Integer>(b2, Integer(0)));
    for (int i = 0; i + 1 < b2; i += 2) {
        q[i][i + 1] = 1;
        q[i + 1][i] = 1;
    }
    return q;
}

SurfaceConfig default_surface_config() {
    SurfaceConfig cfg;
    cfg.b2 = 22;
    cfg.gram = hyperbolic_gram(22);
    return cfg;
}

SurfaceConfig surface_config_from_json(const std::string& json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad surface config JSON: ") + e.what());
    }
    try {
        SurfaceConfig cfg;
        cfg.b2 = doc.at("b2").get<int>();
        if (cfg.b2 < 0)
            throw DomainError("surface config with negative b2");
        if (doc.contains("gram")) {
            for (const auto& row : doc.at("gram")) {
                std::vector<Integer> r;
                for (const auto& v : row)
                    r.emplace_back(v.is_string() ? Integer(v.get<std::string>())
                                                 : Integer(v.get<long>()));
                cfg.gram.push_back(std::move(r));
            }
        } else {
            cfg.gram = hyperbolic_gram(cfg.b2);
        }
        if (static_cast<int>(cfg.gram.size()) != cfg.b2)
            throw DomainError("surface config Gram size does not match b2");
        if (doc.contains("todd")) {
            const auto& td = doc.at("todd");
            if (!td.is_array() || td.size() != 3)
                throw DomainError("surface config todd must be [r, 0, s]");
            auto as_rational = [](const json& v) {
                return v.is_string() ? rational_from_string(v.get<std::string>())
                                     : Rational(v.get<long>());
            };
            cfg.todd_r = as_rational(td[0]);
            if (as_rational(td[1]) != 0)
                throw DomainError("surface config todd must have zero degree-2 part");
            cfg.todd_s = as_rational(td[2]);
        }
        return cfg;
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad surface config JSON: ") + e.what());
    }
}

RingHandle ring_from_config(const SurfaceConfig& config) {
    CohClass todd{config.todd_r, std::vector<Rational>(config.gram.size(), Rational(0)),
                  config.todd_s};
    return std::make_shared<FiniteGradedRing>(
        FiniteGradedRing::make_k3(config.gram, std::move(todd)));
}

} // namespace hilbcoh::surface
