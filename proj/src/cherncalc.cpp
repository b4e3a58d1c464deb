#include "hilbcoh/cherncalc.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

#include "hilbcoh/graded_pieces.hpp"

namespace hilbcoh::chern {

using series::Monomial;
using series::Series;
using series::VarSet;

namespace {

VarSet vars_from_generators(const std::vector<Generator>& generators) {
    std::vector<std::string> names;
    std::vector<int> weights;
    names.reserve(generators.size());
    weights.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.degree <= 0 || g.degree % 2 != 0)
            throw DomainError("generator '" + g.name + "' needs positive even degree");
        names.push_back(g.name);
        weights.push_back(g.degree);
    }
    return VarSet(std::move(names), std::move(weights));
}

} // namespace

GradedAlgebra::GradedAlgebra(std::vector<Generator> generators, int truncation)
    : vars_(vars_from_generators(generators)), truncation_(truncation) {
    if (truncation < 0 || truncation % 2 != 0)
        throw DomainError("algebra truncation must be even and >= 0");
}

Series GradedAlgebra::zero() const {
    return Series(vars_, truncation_);
}

Series GradedAlgebra::one() const {
    return Series::one(vars_, truncation_);
}

Series GradedAlgebra::generator(std::size_t i) const {
    return Series::term(vars_, truncation_, vars_.power_of(i), 1);
}

Series GradedAlgebra::generator(const std::string& name) const {
    auto idx = vars_.index_of(name);
    if (!idx)
        throw DomainError("unknown generator '" + name + "'");
    return generator(*idx);
}

KVector::KVector(KForm form, GradedAlgebra algebra, Rational degree_zero, Series positive)
    : form_(form), algebra_(std::move(algebra)), degree_zero_(std::move(degree_zero)),
      positive_(std::move(positive)) {
    if (positive_.vars() != algebra_.vars() || positive_.order() != algebra_.truncation())
        throw DomainError("k-vector pieces live in a different algebra");
    if (positive_.constant_term() != 0)
        throw DomainError("positive part of a k-vector has a constant term");
}

KVector KVector::character(GradedAlgebra algebra, Rational rank, Series positive) {
    return KVector(KForm::Character, std::move(algebra), std::move(rank), std::move(positive));
}

KVector KVector::total_chern(GradedAlgebra algebra, Series positive) {
    return KVector(KForm::TotalChern, std::move(algebra), 1, std::move(positive));
}

Series KVector::piece(int i) const {
    if (i < 1)
        throw DomainError("piece index must be >= 1");
    return positive_.homogeneous_part(2 * i);
}

std::vector<Series> KVector::pieces() const {
    std::vector<Series> out;
    const int top = algebra_.max_half_degree();
    out.reserve(top + 1);
    out.push_back(algebra_.zero());
    for (int i = 1; i <= top; ++i)
        out.push_back(piece(i));
    return out;
}

Series KVector::full() const {
    return Series::constant(algebra_.vars(), algebra_.truncation(), degree_zero_) + positive_;
}

KVector operator+(const KVector& x, const KVector& y) {
    if (x.form_ != KForm::Character || y.form_ != KForm::Character)
        throw DomainError("k-vector addition is defined for character form only");
    if (!(x.algebra_ == y.algebra_))
        throw DomainError("k-vector addition across different algebras");
    return KVector::character(x.algebra_, x.degree_zero_ + y.degree_zero_,
                              x.positive_ + y.positive_);
}

bool operator==(const KVector& x, const KVector& y) {
    return x.form_ == y.form_ && x.algebra_ == y.algebra_ && x.degree_zero_ == y.degree_zero_ &&
           x.positive_ == y.positive_;
}

namespace {

Series sum_positive_pieces(const GradedAlgebra& algebra, const std::vector<Series>& pieces) {
    Series acc = algebra.zero();
    for (std::size_t i = 1; i < pieces.size(); ++i)
        acc += pieces[i];
    return acc;
}

} // namespace

KVector ell(const KVector& ch) {
    if (ch.form() != KForm::Character)
        throw DomainError("ell expects a character-form k-vector");
    const auto c = total_class_from_character(ch.pieces(), ch.algebra().one());
    return KVector::total_chern(ch.algebra(), sum_positive_pieces(ch.algebra(), c));
}

KVector ell_inverse(const KVector& c, const Rational& rank) {
    if (c.form() != KForm::TotalChern)
        throw DomainError("ell_inverse expects a total-Chern k-vector");
    auto pieces = c.pieces();
    pieces[0] = c.algebra().one();
    const auto a = character_from_total_class(pieces, c.algebra().one());
    return KVector::character(c.algebra(), rank, sum_positive_pieces(c.algebra(), a));
}

KVector k_negate(const KVector& c) {
    if (c.form() != KForm::TotalChern)
        throw DomainError("k_negate expects a total-Chern k-vector");
    const Series inv = c.full().inverse();
    return KVector::total_chern(c.algebra(), inv - c.algebra().one());
}

KVector twist_by_line(const KVector& ch, const Series& l1) {
    if (ch.form() != KForm::Character)
        throw DomainError("twist_by_line expects a character-form k-vector");
    if (!l1.is_zero() && l1.homogeneous_part(2) != l1)
        throw DomainError("twist class must be homogeneous of degree 2");
    const Series twisted = ch.full() * exp_positive(l1);
    return KVector::character(ch.algebra(), ch.degree_zero(),
                              twisted - Series::constant(ch.algebra().vars(),
                                                         ch.algebra().truncation(),
                                                         ch.degree_zero()));
}

Series delta_det(int t, int size, const KVector& c) {
    if (c.form() != KForm::TotalChern)
        throw DomainError("delta_det expects a total-Chern k-vector");
    if (t < 1 || size < 1)
        throw DomainError("delta_det needs t >= 1 and size >= 1");
    if (size > 16)
        throw DomainError("delta_det supports matrices up to 16 x 16");
    const GradedAlgebra& algebra = c.algebra();
    auto entry = [&](int row, int col) -> Series {
        const int idx = col - row + t;
        if (idx < 0)
            return algebra.zero();
        if (idx == 0)
            return algebra.one();
        if (idx > algebra.max_half_degree())
            return algebra.zero();
        return c.piece(idx);
    };
    // Laplace expansion over column subsets: after processing r rows, the
    // minor of rows 0..r-1 on each r-subset of columns.
    const std::size_t full = std::size_t{1} << size;
    std::vector<Series> minor(full, algebra.zero());
    minor[0] = algebra.one();
    for (std::size_t mask = 1; mask < full; ++mask) {
        const int row = __builtin_popcount(static_cast<unsigned>(mask)) - 1;
        Series acc = algebra.zero();
        int position = 0; // index of the column within the subset
        for (int col = 0; col < size; ++col) {
            if (!(mask >> col & 1))
                continue;
            const Series e = entry(row, col);
            if (!e.is_zero()) {
                const Series contribution = e * minor[mask ^ (std::size_t{1} << col)];
                acc = (row + position) % 2 == 0 ? acc + contribution : acc - contribution;
            }
            ++position;
        }
        minor[mask] = std::move(acc);
    }
    return minor[full - 1];
}

namespace {

using nlohmann::json;

json terms_to_json(const Series& s, const VarSet& vars) {
    json terms = json::array();
    for (const auto& [m, coeff] : s.terms()) {
        json mono = json::object();
        for (std::size_t v = 0; v < vars.size(); ++v)
            if (m.exponent(v) > 0)
                mono[vars.name(v)] = m.exponent(v);
        terms.push_back({{"monomial", mono}, {"coeff", rational_to_string(coeff)}});
    }
    return terms;
}

json pieces_to_json(const KVector& v) {
    json pieces = json::array();
    for (int i = 1; i <= v.algebra().max_half_degree(); ++i) {
        const Series p = v.piece(i);
        if (p.is_zero())
            continue;
        pieces.push_back({{"degree", 2 * i}, {"terms", terms_to_json(p, v.algebra().vars())}});
    }
    return pieces;
}

} // namespace

KVector kvector_from_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad k-vector JSON: ") + e.what());
    }
    try {
        std::vector<Generator> gens;
        for (const auto& g : doc.at("generators"))
            gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
        const int truncation = doc.at("truncation").get<int>();
        GradedAlgebra algebra(std::move(gens), truncation);

        Series positive = algebra.zero();
        for (const auto& piece : doc.value("pieces", json::array())) {
            for (const auto& term : piece.at("terms")) {
                std::vector<std::uint32_t> exps(algebra.vars().size(), 0);
                for (const auto& [name, e] : term.at("monomial").items()) {
                    auto idx = algebra.vars().index_of(name);
                    if (!idx)
                        throw DomainError("unknown generator '" + name + "' in k-vector JSON");
                    exps[*idx] = e.get<std::uint32_t>();
                }
                const Monomial m = algebra.vars().monomial(std::move(exps));
                const auto& c = term.at("coeff");
                const Rational coeff = c.is_string() ? rational_from_string(c.get<std::string>())
                                                     : Rational(c.get<long>());
                if (piece.contains("degree") && m.weighted_degree() != piece.at("degree").get<int>())
                    throw DomainError("term degree does not match its piece");
                positive.add_term(m, coeff);
            }
        }
        if (positive.constant_term() != 0)
            throw DomainError("pieces must have positive degree");

        const std::string form = doc.value("form", "character");
        if (form == "character") {
            Rational rank = 0;
            if (doc.contains("rank")) {
                const auto& r = doc.at("rank");
                rank = r.is_string() ? rational_from_string(r.get<std::string>())
                                     : Rational(r.get<long>());
            }
            return KVector::character(std::move(algebra), std::move(rank), std::move(positive));
        }
        if (form == "total-chern")
            return KVector::total_chern(std::move(algebra), std::move(positive));
        throw DomainError("unknown k-vector form '" + form + "'");
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad k-vector JSON: ") + e.what());
    }
}

std::string kvector_to_json(const KVector& v) {
    json gens = json::array();
    for (std::size_t i = 0; i < v.algebra().vars().size(); ++i)
        gens.push_back({{"name", v.algebra().vars().name(i)},
                        {"degree", v.algebra().vars().weight(i)}});
    json doc;
    doc["generators"] = gens;
    doc["truncation"] = v.algebra().truncation();
    doc["form"] = v.form() == KForm::Character ? "character" : "total-chern";
    doc["rank"] = rational_to_string(v.degree_zero());
    doc["pieces"] = pieces_to_json(v);
    return doc.dump();
}

std::string element_to_json(const Series& element) {
    json doc;
    doc["degree"] = element.is_zero() ? 0 : element.max_term_degree();
    doc["terms"] = terms_to_json(element, element.vars());
    return doc.dump();
}

} // namespace hilbcoh::chern
