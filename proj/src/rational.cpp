#include "hilbcoh/rational.hpp"

#include <cctype>

namespace hilbcoh {

Rational make_rational(Integer num, Integer den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer require_integer(const Rational& q, const std::string& context) {
    if (q.get_den() != 1)
        throw InvariantError(context + ": expected an integer, got " + rational_to_string(q));
    return q.get_num();
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty())
        throw DomainError("empty rational literal");
    const auto slash = s.find('/');
    const std::string num_part = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid = [](const std::string& t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    if (!valid(num_part) || !valid(den_part))
        throw DomainError("malformed rational literal: '" + s + "'");
    Integer num(num_part), den(den_part);
    if (den == 0)
        throw DomainError("rational literal with zero denominator: '" + s + "'");
    return make_rational(std::move(num), std::move(den));
}

} // namespace hilbcoh
